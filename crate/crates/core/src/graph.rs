use crate::error::GraphError;
use crate::subset::{VertexSubset, HARD_MAX_VERTICES};

/// A simple undirected graph on vertices `0..n`, stored as one neighbor mask
/// per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<VertexSubset>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > HARD_MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: HARD_MAX_VERTICES,
            });
        }
        Ok(Graph {
            adjacency: vec![VertexSubset::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Repeated edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSubset {
        VertexSubset::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSubset {
        self.adjacency[v]
    }

    /// `N[v]`, the neighborhood of `v` including `v` itself.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSubset {
        self.adjacency[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_independent(&self, s: VertexSubset) -> bool {
        s.iter().all(|v| self.adjacency[v].is_disjoint(s))
    }

    /// The subgraph induced by `keep`, relabeled to `0..keep.len()` in
    /// ascending order of the original indices.
    pub fn induced(&self, keep: VertexSubset) -> Graph {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_index = vec![usize::MAX; self.order()];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let adjacency = old
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .intersection(keep)
                    .iter()
                    .map(|u| new_index[u])
                    .collect()
            })
            .collect();
        Graph { adjacency }
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut adjacency = vec![VertexSubset::EMPTY; self.order()];
        for (u, v) in self.edges() {
            adjacency[perm[u]].insert(perm[v]);
            adjacency[perm[v]].insert(perm[u]);
        }
        Graph { adjacency }
    }
}

/// Whether `g` has no three mutually adjacent vertices.
pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges()
        .all(|(u, v)| g.neighbors(u).is_disjoint(g.neighbors(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn triangle_detection() {
        assert!(!is_triangle_free(&cycle(3)));
        assert!(is_triangle_free(&cycle(5)));
        assert!(is_triangle_free(&complete_bipartite(3, 3)));
        assert!(is_triangle_free(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn triangle_free_matches_triple_scan() {
        // every graph on 5 vertices
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let g = Graph::from_edges(
                5,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e),
            )
            .unwrap();
            let mut has_triangle = false;
            for a in 0..5 {
                for b in a + 1..5 {
                    for c in b + 1..5 {
                        has_triangle |= g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c);
                    }
                }
            }
            assert_eq!(is_triangle_free(&g), !has_triangle);
        }
    }

    #[test]
    fn rejects_loops_and_bad_indices() {
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert!(Graph::empty(HARD_MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn induced_subgraph_relabels() {
        // path 0-1-2-3, keep {1,2,3}
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.induced([1, 2, 3].into_iter().collect());
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
