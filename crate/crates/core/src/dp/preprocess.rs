//! Setting aside vertices that can always be colored last, and compacting
//! the palette of what remains.

use crate::error::SolveError;
use crate::graph::Graph;
use crate::instance::{Color, ColorList, Coloring, Instance};
use crate::subset::VertexSubset;

/// Which vertices may be set aside before the table rounds.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum LongListRule {
    /// `|L(v)| >= n`, checked once against the original order.
    #[default]
    Order,
    /// `|L(v)| > deg(v)` in the current graph, repeated until no vertex
    /// qualifies.
    Degree,
}

/// The instance left after removing set-aside vertices.
#[derive(Clone, Debug)]
pub struct Preprocessed {
    /// Reduced instance on vertices `0..kept.len()`.
    pub reduced: Instance,
    /// `kept[i]` is the original index of reduced vertex `i`.
    pub kept: Vec<usize>,
    /// Original indices of the removed vertices, in removal order.
    pub set_aside: Vec<usize>,
}

pub fn preprocess_long_lists(inst: &Instance, rule: LongListRule) -> Preprocessed {
    let g = inst.graph();
    let n = g.order();
    let mut set_aside = Vec::new();
    match rule {
        LongListRule::Order => {
            set_aside.extend((0..n).filter(|&v| inst.list(v).len() >= n));
        }
        LongListRule::Degree => {
            let mut remaining = g.vertices();
            while let Some(v) = remaining
                .iter()
                .find(|&v| inst.list(v).len() > g.neighbors(v).intersection(remaining).len())
            {
                remaining.remove(v);
                set_aside.push(v);
            }
        }
    }
    let removed: VertexSubset = set_aside.iter().copied().collect();
    let keep = g.vertices().difference(removed);
    let kept: Vec<usize> = keep.iter().collect();
    let lists = kept.iter().map(|&v| inst.list(v).clone()).collect();
    let reduced = Instance::new(g.induced(keep), inst.kappa(), lists)
        .expect("sub-instance of a valid instance");
    Preprocessed {
        reduced,
        kept,
        set_aside,
    }
}

/// An instance whose palette was relabeled to `1..=labels.len()`.
#[derive(Clone, Debug)]
pub struct CompactPalette {
    pub instance: Instance,
    /// `labels[j - 1]` is the original color of compact color `j`.
    pub labels: Vec<Color>,
}

/// Relabels the colors that occur in some list to `1, 2, ..` in increasing
/// order; colors no vertex may use are dropped.
pub fn compact_palette(inst: &Instance) -> CompactPalette {
    let mut labels: Vec<Color> = inst.lists().iter().flat_map(ColorList::iter).collect();
    labels.sort_unstable();
    labels.dedup();
    let relabel = |c: Color| labels.binary_search(&c).unwrap() as Color + 1;
    let lists = inst
        .lists()
        .iter()
        .map(|l| l.iter().map(relabel).collect())
        .collect();
    let instance = Instance::new(inst.graph().clone(), labels.len() as Color, lists)
        .expect("relabeled colors lie in the compact palette");
    CompactPalette { instance, labels }
}

/// Colors the vertices of `order` last-removed first, each with the smallest
/// list color not used by an already colored neighbor.
pub(crate) fn greedy_finish(
    g: &Graph,
    inst: &Instance,
    order: &[usize],
    f: &mut Coloring,
) -> Result<(), SolveError> {
    for &v in order.iter().rev() {
        let taken: Vec<Color> = g.neighbors(v).iter().filter_map(|u| f.get(u)).collect();
        let color = inst
            .list(v)
            .iter()
            .find(|c| !taken.contains(c))
            .ok_or_else(|| {
                SolveError::Inconsistent(format!("no free color left for set-aside vertex {v}"))
            })?;
        f.set(v, color);
    }
    Ok(())
}
