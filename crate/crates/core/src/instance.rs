//! List-coloring instances, colorings and their validation.

use std::fmt;

use crate::error::{ColoringError, InstanceError};
use crate::graph::Graph;

/// Palette colors are `1..=kappa`.
pub type Color = u32;

/// A set of permitted colors, kept sorted and free of duplicates.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ColorList(Vec<Color>);

impl ColorList {
    pub fn new<I: IntoIterator<Item = Color>>(colors: I) -> Self {
        let mut v: Vec<Color> = colors.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ColorList(v)
    }

    /// `[1, kappa]`.
    pub fn full(kappa: Color) -> Self {
        ColorList((1..=kappa).collect())
    }

    pub fn singleton(c: Color) -> Self {
        ColorList(vec![c])
    }

    pub fn contains(&self, c: Color) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<Color> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    /// The colors of this list that are at most `level`.
    pub fn truncated(&self, level: Color) -> ColorList {
        let end = self.0.partition_point(|&c| c <= level);
        ColorList(self.0[..end].to_vec())
    }

    pub fn is_subset_of(&self, other: &ColorList) -> bool {
        self.iter().all(|c| other.contains(c))
    }
}

impl fmt::Debug for ColorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<Color> for ColorList {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        ColorList::new(iter)
    }
}

/// A graph, a palette size and one permitted-color list per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    kappa: Color,
    lists: Vec<ColorList>,
}

impl Instance {
    pub fn new(graph: Graph, kappa: Color, lists: Vec<ColorList>) -> Result<Self, InstanceError> {
        if lists.len() != graph.order() {
            return Err(InstanceError::ListCount {
                lists: lists.len(),
                n: graph.order(),
            });
        }
        for (vertex, list) in lists.iter().enumerate() {
            if let Some(&color) = list.as_slice().iter().find(|&&c| c == 0 || c > kappa) {
                return Err(InstanceError::ColorOutOfRange {
                    vertex,
                    color,
                    kappa,
                });
            }
        }
        Ok(Instance {
            graph,
            kappa,
            lists,
        })
    }

    /// Every vertex may use any color of `[1, kappa]`.
    pub fn with_full_lists(graph: Graph, kappa: Color) -> Self {
        let lists = vec![ColorList::full(kappa); graph.order()];
        Instance {
            graph,
            kappa,
            lists,
        }
    }

    /// Precoloring extension: the listed vertices are fixed to their color,
    /// every other vertex gets the full palette.
    pub fn precoloring(
        graph: Graph,
        kappa: Color,
        fixed: &[(usize, Color)],
    ) -> Result<Self, InstanceError> {
        let mut lists = vec![ColorList::full(kappa); graph.order()];
        for &(v, c) in fixed {
            if v >= graph.order() {
                return Err(crate::error::GraphError::VertexOutOfRange {
                    vertex: v,
                    n: graph.order(),
                }
                .into());
            }
            lists[v] = ColorList::singleton(c);
        }
        Instance::new(graph, kappa, lists)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn kappa(&self) -> Color {
        self.kappa
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn list(&self, v: usize) -> &ColorList {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[ColorList] {
        &self.lists
    }
}

/// A possibly partial assignment of colors to vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring(Vec<Option<Color>>);

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Coloring(vec![None; n])
    }

    pub fn from_colors<I: IntoIterator<Item = Color>>(colors: I) -> Self {
        Coloring(colors.into_iter().map(Some).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<Color> {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, c: Color) {
        self.0[v] = Some(c);
    }

    pub fn is_total(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.0
    }

    /// Colors of a total coloring; `None` if any vertex is unassigned.
    pub fn to_total(&self) -> Option<Vec<Color>> {
        self.0.iter().copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    MonochromaticEdge { u: usize, v: usize, color: Color },
    ColorNotInList { vertex: usize, color: Color },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `f` is a proper coloring of `inst` respecting the lists.
///
/// A partial `f` is an error, not a violation.
pub fn validate_coloring(inst: &Instance, f: &Coloring) -> Result<ValidationReport, ColoringError> {
    let n = inst.order();
    if f.len() != n {
        return Err(ColoringError::WrongLength { got: f.len(), n });
    }
    let colors = match f.to_total() {
        Some(c) => c,
        None => {
            let vertex = f.as_slice().iter().position(Option::is_none).unwrap();
            return Err(ColoringError::NotTotal { vertex });
        }
    };
    let mut violations = Vec::new();
    for (vertex, &color) in colors.iter().enumerate() {
        if !inst.list(vertex).contains(color) {
            violations.push(Violation::ColorNotInList { vertex, color });
        }
    }
    for (u, v) in inst.graph().edges() {
        if colors[u] == colors[v] {
            violations.push(Violation::MonochromaticEdge {
                u,
                v,
                color: colors[u],
            });
        }
    }
    Ok(ValidationReport { violations })
}
