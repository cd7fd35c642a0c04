//! Exact list-coloring of small graphs.
//!
//! Every vertex carries a list of permitted colors from `[1, kappa]`; a
//! solution is a proper coloring that picks each vertex's color from its
//! list. Precoloring extension is the special case where every list is
//! either the whole palette or a single fixed color.
//!
//! The solver builds one colorability table per color over all vertex
//! subsets, driven by maximal independent set enumeration, and reads a
//! coloring back from the tables. Its work per round is bounded by
//! `(1 + t)^n - 1` whenever every `m`-vertex induced subgraph has at most
//! `t^m` maximal independent sets; [`bounds`] supplies such `t` and checks
//! them.
//!
//! ```
//! use listcolor::{parse_instance, solve};
//!
//! let inst = parse_instance("p lc 3 2 2\ne 1 2\ne 2 3\nf 1 1\nf 3 1\n").unwrap();
//! let result = solve(&inst).unwrap();
//! assert_eq!(result.coloring().unwrap().get(1), Some(2));
//! ```

pub mod bounds;
pub mod dp;
pub mod error;
pub mod format;
pub mod graph;
pub mod instance;
pub mod mis;
pub mod oracle;
pub mod subset;

pub use dp::{solve, solve_with, Outcome, SolveOptions, SolveResult, SolveStats};
pub use format::{parse_instance, parse_instance_with_max, write_instance};
pub use graph::{is_triangle_free, Graph};
pub use instance::{validate_coloring, Color, ColorList, Coloring, Instance};
pub use mis::{count_mis, enumerate_mis};
pub use subset::VertexSubset;
