use crate::bounds::{fit_constant, FitReport};
use crate::dp::preprocess::{compact_palette, greedy_finish, preprocess_long_lists, LongListRule};
use crate::dp::reconstruct::reconstruct;
use crate::dp::rounds::build_tables;
use crate::error::SolveError;
use crate::instance::{validate_coloring, Coloring, Instance};

#[derive(Copy, Clone, Debug, Default)]
pub struct SolveOptions {
    pub long_list_rule: LongListRule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Sat(Coloring),
    Unsat,
}

/// Work counters of one solve.
#[derive(Clone, Debug)]
pub struct SolveStats {
    /// Order of the input graph.
    pub order: usize,
    /// Order after setting long-list vertices aside.
    pub reduced_order: usize,
    /// Number of colors left after compaction, i.e. the number of rounds.
    pub palette: u32,
    /// `(W, I)` pairs examined per round.
    pub scans_per_round: Vec<u64>,
    pub total_scans: u64,
    /// Fit constant and predicted per-round work for the reduced graph.
    pub fit: FitReport,
    /// Bytes held by the level tables.
    pub table_bytes: usize,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub outcome: Outcome,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn is_sat(&self) -> bool {
        matches!(self.outcome, Outcome::Sat(_))
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match &self.outcome {
            Outcome::Sat(f) => Some(f),
            Outcome::Unsat => None,
        }
    }
}

pub fn solve(inst: &Instance) -> Result<SolveResult, SolveError> {
    solve_with(inst, &SolveOptions::default())
}

/// Decides list-colorability of `inst` and, when colorable, returns a
/// coloring.
///
/// Long-list vertices are set aside, the palette of the rest is compacted,
/// the level tables are built round by round, and a coloring is read back
/// from them before the set-aside vertices are colored greedily.
pub fn solve_with(inst: &Instance, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let pre = preprocess_long_lists(inst, opts.long_list_rule);
    let mut stats = SolveStats {
        order: inst.order(),
        reduced_order: pre.reduced.order(),
        palette: 0,
        scans_per_round: Vec::new(),
        total_scans: 0,
        fit: fit_constant(pre.reduced.graph()),
        table_bytes: 0,
    };
    if pre.reduced.lists().iter().any(|l| l.is_empty()) {
        return Ok(SolveResult {
            outcome: Outcome::Unsat,
            stats,
        });
    }

    let compact = compact_palette(&pre.reduced);
    let reduced = &compact.instance;
    stats.palette = reduced.kappa();

    let mut f = Coloring::uncolored(inst.order());
    if reduced.order() > 0 {
        let tables = build_tables(reduced);
        stats.total_scans = tables.scans.iter().sum();
        stats.scans_per_round = tables.scans.clone();
        stats.table_bytes = tables.heap_bytes();
        if !tables.colorable() {
            return Ok(SolveResult {
                outcome: Outcome::Unsat,
                stats,
            });
        }
        let inner = reconstruct(reduced, &tables.tables)?;
        for (i, &v) in pre.kept.iter().enumerate() {
            let c = inner.get(i).expect("reconstruction is total");
            f.set(v, compact.labels[c as usize - 1]);
        }
    }
    greedy_finish(inst.graph(), inst, &pre.set_aside, &mut f)?;

    let report = validate_coloring(inst, &f).map_err(|e| SolveError::Inconsistent(e.to_string()))?;
    if !report.is_ok() {
        return Err(SolveError::Inconsistent(format!(
            "produced coloring violates {:?}",
            report.violations
        )));
    }
    Ok(SolveResult {
        outcome: Outcome::Sat(f),
        stats,
    })
}
