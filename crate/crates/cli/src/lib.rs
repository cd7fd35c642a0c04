//! Command-line front end: solve instances, report fit bounds, count
//! maximal independent sets.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use listcolor::bounds::fit_constant;
use listcolor::dp::LongListRule;
use listcolor::format::DEFAULT_MAX_VERTICES;
use listcolor::oracle::{brute_force_colorable, OracleBudget};
use listcolor::{count_mis, parse_instance_with_max, solve_with, Instance, Outcome, SolveOptions};

pub const EXIT_SAT: i32 = 0;
pub const EXIT_UNSAT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "listcolor", version, about = "Exact list-coloring solver")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide list-colorability and print a coloring when one exists.
    Solve {
        #[command(flatten)]
        input: Input,
        /// Print work counters to stderr.
        #[arg(long)]
        stats: bool,
        /// Cross-check the decision with brute force on small instances.
        #[arg(long)]
        check_oracle: bool,
        /// Which vertices to set aside before the table rounds.
        #[arg(long, value_enum, default_value_t = RuleArg::Paper)]
        long_list_rule: RuleArg,
    },
    /// Print the fit constant and predicted work for the instance's graph.
    Bounds {
        #[command(flatten)]
        input: Input,
    },
    /// Count the maximal independent sets of the instance's graph.
    MisCount {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Instance file.
    pub file: PathBuf,
    /// Largest accepted graph order.
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    pub max_n: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    /// Set aside vertices with at least n colors.
    #[value(alias = "order")]
    Paper,
    /// Repeatedly set aside vertices with more colors than neighbors.
    Degree,
}

impl From<RuleArg> for LongListRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Paper => LongListRule::Order,
            RuleArg::Degree => LongListRule::Degree,
        }
    }
}

fn load(input: &Input, err: &mut dyn Write) -> Result<Instance, i32> {
    let text = std::fs::read_to_string(&input.file).map_err(|e| {
        let _ = writeln!(err, "error: {}: {e}", input.file.display());
        EXIT_USAGE
    })?;
    parse_instance_with_max(&text, input.max_n).map_err(|e| {
        let _ = writeln!(err, "error: {}: {e}", input.file.display());
        EXIT_USAGE
    })
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_inner(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INTERNAL
        }
    }
}

fn run_inner(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match &cli.command {
        Command::Solve {
            input,
            stats,
            check_oracle,
            long_list_rule,
        } => {
            let inst = match load(input, err) {
                Ok(i) => i,
                Err(code) => return Ok(code),
            };
            let opts = SolveOptions {
                long_list_rule: (*long_list_rule).into(),
            };
            let result = match solve_with(&inst, &opts) {
                Ok(r) => r,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_INTERNAL);
                }
            };
            if *stats {
                let s = &result.stats;
                writeln!(err, "c n {}", s.order)?;
                writeln!(err, "c reduced_n {}", s.reduced_order)?;
                writeln!(err, "c palette {}", s.palette)?;
                for (i, scans) in s.scans_per_round.iter().enumerate() {
                    writeln!(err, "c round {} scans {scans}", i + 1)?;
                }
                writeln!(err, "c total_scans {}", s.total_scans)?;
                writeln!(err, "c rule {}", s.fit.rule)?;
                writeln!(err, "c t {}", s.fit.t)?;
                writeln!(err, "c predicted_work {}", s.fit.predicted_work)?;
            }
            if *check_oracle {
                let budget = OracleBudget::default();
                if inst.order() <= budget.max_colorable {
                    let expected =
                        brute_force_colorable(&inst, inst.graph().vertices(), inst.lists())
                            .expect("order checked against the budget");
                    if expected != result.is_sat() {
                        writeln!(
                            err,
                            "error: oracle mismatch: solver says {}, brute force says {}",
                            result.is_sat(),
                            expected
                        )?;
                        return Ok(EXIT_INTERNAL);
                    }
                    writeln!(err, "c oracle agrees")?;
                } else {
                    writeln!(
                        err,
                        "c oracle skipped: n = {} exceeds {}",
                        inst.order(),
                        budget.max_colorable
                    )?;
                }
            }
            match &result.outcome {
                Outcome::Sat(f) => {
                    writeln!(out, "s SAT")?;
                    for v in 0..f.len() {
                        let c = f.get(v).expect("solver returns total colorings");
                        writeln!(out, "v {} {c}", v + 1)?;
                    }
                    Ok(EXIT_SAT)
                }
                Outcome::Unsat => {
                    writeln!(out, "s UNSAT")?;
                    Ok(EXIT_UNSAT)
                }
            }
        }
        Command::Bounds { input } => {
            let inst = match load(input, err) {
                Ok(i) => i,
                Err(code) => return Ok(code),
            };
            let fit = fit_constant(inst.graph());
            writeln!(out, "n {}", fit.order)?;
            writeln!(out, "rule {}", fit.rule)?;
            writeln!(out, "t {}", fit.t)?;
            writeln!(out, "predicted_work {}", fit.predicted_work)?;
            Ok(0)
        }
        Command::MisCount { input } => {
            let inst = match load(input, err) {
                Ok(i) => i,
                Err(code) => return Ok(code),
            };
            let g = inst.graph();
            writeln!(out, "{}", count_mis(g, g.vertices()))?;
            Ok(0)
        }
    }
}
