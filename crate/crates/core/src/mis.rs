//! Enumeration of the inclusion-maximal independent sets of induced
//! subgraphs.
//!
//! Independent sets of `G` are the cliques of its complement, so this is
//! Bron–Kerbosch with pivoting run against complement adjacency restricted
//! to the chosen vertex set `W`. The recursion is unrolled onto a fixed-size
//! stack so a stream can be paused, resumed or dropped at any point without
//! allocating.
//!
//! Branching always takes candidates in ascending vertex order and the pivot
//! is the lowest-indexed vertex among those with the best score, so the
//! emission order only depends on the graph and `W`.

use arrayvec::ArrayVec;

use crate::graph::Graph;
use crate::subset::{VertexSubset, HARD_MAX_VERTICES};

#[derive(Copy, Clone, Debug)]
struct Frame {
    /// Current independent set.
    chosen: VertexSubset,
    /// Vertices of `W` that may still extend `chosen`.
    candidates: VertexSubset,
    /// Vertices that could extend `chosen` but were explored in a sibling
    /// branch already.
    excluded: VertexSubset,
    /// Candidates this frame still has to branch on.
    todo: VertexSubset,
}

/// Lazily yields every maximal independent set of `G[W]` exactly once.
pub struct MisStream<'g> {
    graph: &'g Graph,
    stack: ArrayVec<Frame, { HARD_MAX_VERTICES + 1 }>,
    pending: Option<VertexSubset>,
}

/// Maximal independent sets of the subgraph of `g` induced by `w`.
///
/// For `w = ∅` the stream yields the empty set once.
pub fn enumerate_mis(g: &Graph, w: VertexSubset) -> MisStream<'_> {
    debug_assert!(w.is_subset_of(g.vertices()));
    let mut stream = MisStream {
        graph: g,
        stack: ArrayVec::new(),
        pending: None,
    };
    stream.open(VertexSubset::EMPTY, w, VertexSubset::EMPTY);
    stream
}

/// Number of maximal independent sets of `G[w]`.
pub fn count_mis(g: &Graph, w: VertexSubset) -> u64 {
    enumerate_mis(g, w).fold(0, |n, _| n + 1)
}

impl<'g> MisStream<'g> {
    /// Either reports `chosen` as maximal or pushes a frame that will branch
    /// on it.
    fn open(&mut self, chosen: VertexSubset, candidates: VertexSubset, excluded: VertexSubset) {
        if candidates.is_empty() {
            if excluded.is_empty() {
                self.pending = Some(chosen);
            }
            return;
        }
        let pivot = self.pivot(candidates, excluded);
        // Every maximal extension contains either the pivot or one of its
        // neighbors, so branching on N[pivot] ∩ P suffices.
        let todo = candidates.intersection(self.graph.closed_neighbors(pivot));
        self.stack.push(Frame {
            chosen,
            candidates,
            excluded,
            todo,
        });
    }

    /// The vertex of `P ∪ X` that leaves the fewest candidates to branch on.
    fn pivot(&self, candidates: VertexSubset, excluded: VertexSubset) -> usize {
        let mut best = usize::MAX;
        let mut best_branches = usize::MAX;
        for u in candidates.union(excluded) {
            let branches = candidates.intersection(self.graph.closed_neighbors(u)).len();
            if branches < best_branches {
                best = u;
                best_branches = branches;
                if branches == 0 {
                    break;
                }
            }
        }
        best
    }
}

impl Iterator for MisStream<'_> {
    type Item = VertexSubset;

    fn next(&mut self) -> Option<VertexSubset> {
        loop {
            if let Some(found) = self.pending.take() {
                return Some(found);
            }
            let frame = self.stack.last_mut()?;
            let Some(v) = frame.todo.first() else {
                self.stack.pop();
                continue;
            };
            frame.todo.remove(v);
            let closed = self.graph.closed_neighbors(v);
            let chosen = frame.chosen.with(v);
            let candidates = frame.candidates.difference(closed);
            let excluded = frame.excluded.difference(closed);
            frame.candidates.remove(v);
            frame.excluded.insert(v);
            self.open(chosen, candidates, excluded);
        }
    }
}
