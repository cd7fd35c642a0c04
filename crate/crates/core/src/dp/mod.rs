//! Exact list-coloring by dynamic programming over vertex subsets.
//!
//! Level `j` holds, for every `W ⊆ V`, whether `G[W]` can be colored when
//! each vertex may only use the colors of its list that are at most `j`.
//! Level 1 is read off the maximal independent sets of `G` directly. Level
//! `j` follows from level `j - 1`: `G[W]` is colorable up to `j` iff it
//! already was, or some maximal independent set `I` of `G[W]` can take
//! color `j` on its `j`-permitted part `I_j` while `W ∖ I_j` was colorable
//! up to `j - 1`. The instance is colorable iff the top level marks `V`.

mod lists;
mod preprocess;
mod reconstruct;
mod rounds;
mod solve;
mod table;

pub use lists::{restrict_lists, RestrictedLists};
pub use preprocess::{compact_palette, preprocess_long_lists, CompactPalette, LongListRule, Preprocessed};
pub use reconstruct::reconstruct;
pub use rounds::{build_tables, round1_init, round_update, LevelTables};
pub use solve::{solve, solve_with, Outcome, SolveOptions, SolveResult, SolveStats};
pub use table::ColorabilityTable;
