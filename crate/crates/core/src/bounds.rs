//! Fit constants and the predicted size of the table work.
//!
//! A real `t > 1` fits `G` when every induced subgraph on `m` vertices has at
//! most `t^m` maximal independent sets. Summing that over all nonempty
//! vertex subsets bounds the `(W, I)` pairs one round can examine by
//! `(1 + t)^n - 1`.

use std::fmt;

use num_bigint::BigUint;

use crate::error::BudgetExceeded;
use crate::graph::{is_triangle_free, Graph};
use crate::mis::count_mis;
use crate::subset::VertexSubset;

/// Fits every graph, since `1.44225^3 > 3`.
pub const GENERAL_FIT: f64 = 1.44225;
/// Fits every triangle-free graph, since `1.41422^2 > 2`.
pub const TRIANGLE_FREE_FIT: f64 = 1.41422;
/// Largest order [`verify_fit_empirical`] will check.
pub const EMPIRICAL_FIT_MAX_ORDER: usize = 12;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FitRule {
    General,
    TriangleFree,
    /// Checked subset by subset with [`verify_fit_empirical`].
    Empirical,
}

impl fmt::Display for FitRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FitRule::General => "general",
            FitRule::TriangleFree => "triangle-free",
            FitRule::Empirical => "empirical",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct FitReport {
    pub t: f64,
    pub rule: FitRule,
    pub order: usize,
    pub predicted_work: f64,
}

pub fn fit_constant(g: &Graph) -> FitReport {
    let (t, rule) = if is_triangle_free(g) {
        (TRIANGLE_FREE_FIT, FitRule::TriangleFree)
    } else {
        (GENERAL_FIT, FitRule::General)
    };
    FitReport {
        t,
        rule,
        order: g.order(),
        predicted_work: predicted_work(g.order(), t),
    }
}

/// A report for a caller-chosen `t`, if it passes [`verify_fit_empirical`].
pub fn empirical_fit(g: &Graph, t: f64) -> Result<Option<FitReport>, BudgetExceeded> {
    Ok(verify_fit_empirical(g, t)?.then(|| FitReport {
        t,
        rule: FitRule::Empirical,
        order: g.order(),
        predicted_work: predicted_work(g.order(), t),
    }))
}

/// `(1 + t)^n - 1`.
pub fn predicted_work(n: usize, t: f64) -> f64 {
    (1.0 + t).powi(n as i32) - 1.0
}

/// Whether every nonempty `M ⊆ V` has `count_mis(G[M]) <= t^|M|`.
///
/// The comparison is exact: `t` is expanded to the rational its `f64` bits
/// encode and both sides are compared as integers.
pub fn verify_fit_empirical(g: &Graph, t: f64) -> Result<bool, BudgetExceeded> {
    let n = g.order();
    if n > EMPIRICAL_FIT_MAX_ORDER {
        return Err(BudgetExceeded {
            what: "empirical fit check",
            size: n,
            budget: EMPIRICAL_FIT_MAX_ORDER,
        });
    }
    if t.is_nan() || t <= 0.0 {
        return Ok(false);
    }
    if t.is_infinite() {
        return Ok(true);
    }
    let power = ExactPower::new(t);
    Ok((1..1u32 << n).all(|bits| {
        let m = VertexSubset::from_bits(bits);
        power.at_least(count_mis(g, m), m.len() as u32)
    }))
}

/// `t = mantissa * 2^exponent`, exactly.
struct ExactPower {
    mantissa: u64,
    exponent: i64,
}

impl ExactPower {
    fn new(t: f64) -> Self {
        debug_assert!(t.is_finite() && t > 0.0);
        let bits = t.to_bits();
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1 << 52) - 1);
        let (mantissa, exponent) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1 << 52), raw_exp - 1075)
        };
        ExactPower { mantissa, exponent }
    }

    /// `count <= t^m`.
    fn at_least(&self, count: u64, m: u32) -> bool {
        let mut lhs = BigUint::from(count);
        let mut rhs = BigUint::from(self.mantissa).pow(m);
        let shift = self.exponent * m as i64;
        if shift >= 0 {
            rhs <<= shift as u64;
        } else {
            lhs <<= (-shift) as u64;
        }
        lhs <= rhs
    }
}
