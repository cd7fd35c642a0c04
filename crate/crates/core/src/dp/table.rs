use crate::instance::Color;
use crate::subset::VertexSubset;

/// One bit per vertex subset `W`, indexed by the subset's mask: set iff
/// `G[W]` is colorable from the lists truncated to `[1, level]`.
///
/// The entry for `∅` always reads as set.
#[derive(Clone, PartialEq, Eq)]
pub struct ColorabilityTable {
    level: Color,
    order: usize,
    words: Vec<u64>,
}

impl ColorabilityTable {
    /// A table with every nonempty entry clear.
    pub fn new(level: Color, order: usize) -> Self {
        let bits = 1usize << order;
        let mut words = vec![0u64; bits.div_ceil(64)];
        words[0] = 1;
        ColorabilityTable {
            level,
            order,
            words,
        }
    }

    pub fn level(&self) -> Color {
        self.level
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, w: VertexSubset) -> bool {
        let i = w.index();
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, w: VertexSubset) {
        let i = w.index();
        self.words[i >> 6] |= 1 << (i & 63);
    }

    /// Copy of this table relabeled as level `level`.
    pub(crate) fn carried_to(&self, level: Color) -> Self {
        ColorabilityTable {
            level,
            order: self.order,
            words: self.words.clone(),
        }
    }

    /// Number of set entries, `∅` included.
    pub fn count_set(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn heap_bytes(&self) -> usize {
        self.words.len() * std::mem::size_of::<u64>()
    }

    /// The nonempty `W` with `W` set but some `W ∖ {w}` clear.
    pub fn pip_violations(&self) -> Vec<(VertexSubset, usize)> {
        let mut out = Vec::new();
        for bits in 1..(1u32 << self.order) {
            let w = VertexSubset::from_bits(bits);
            if !self.get(w) {
                continue;
            }
            for v in w.iter() {
                if !self.get(w.without(v)) {
                    out.push((w, v));
                }
            }
        }
        out
    }
}

impl std::fmt::Debug for ColorabilityTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ColorabilityTable")
            .field("level", &self.level)
            .field("order", &self.order)
            .field("set", &self.count_set())
            .finish()
    }
}
