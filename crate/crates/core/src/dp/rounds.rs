//! Building the per-level colorability tables.

use crate::dp::lists::color_class;
use crate::dp::table::ColorabilityTable;
use crate::instance::{Color, Instance};
use crate::mis::enumerate_mis;
use crate::subset::{nonempty_subsets_descending, VertexSubset};

/// The level-1 table: `W` is set iff `W` is independent and every vertex of
/// `W` may take color 1.
pub fn round1_init(inst: &Instance) -> ColorabilityTable {
    round1_counted(inst).0
}

pub(crate) fn round1_counted(inst: &Instance) -> (ColorabilityTable, u64) {
    let g = inst.graph();
    let n = g.order();
    let class = color_class(inst, 1);
    let mut table = ColorabilityTable::new(1, n);
    let mut scans = 0;

    for mis in enumerate_mis(g, g.vertices()) {
        scans += 1;
        let seed = mis.intersection(class);
        if !seed.is_empty() {
            table.set(seed);
        }
    }

    // Close downward so every subset of a set entry is set as well.
    for w in nonempty_subsets_descending(n) {
        if table.get(w) {
            for v in w.iter() {
                table.set(w.without(v));
            }
        }
    }
    (table, scans)
}

/// Extends the level `j - 1` table to level `j`.
///
/// `W` becomes set when some maximal independent set `I` of `G[W]` has
/// `I_j = I ∩ {v : j ∈ L(v)}` nonempty and `W ∖ I_j` set in `prev`; that is,
/// color `j` goes to `I_j` and the rest was already colorable below `j`.
/// Reads only `prev`, writes only the returned table.
pub fn round_update(inst: &Instance, j: Color, prev: &ColorabilityTable) -> ColorabilityTable {
    round_update_counted(inst, j, prev).0
}

pub(crate) fn round_update_counted(
    inst: &Instance,
    j: Color,
    prev: &ColorabilityTable,
) -> (ColorabilityTable, u64) {
    assert!(j >= 2 && j <= inst.kappa(), "level {j} outside [2,{}]", inst.kappa());
    assert_eq!(prev.level(), j - 1, "previous table has the wrong level");
    let g = inst.graph();
    let class = color_class(inst, j);
    let mut next = prev.carried_to(j);
    let mut scans = 0;

    for w in nonempty_subsets_descending(g.order()) {
        // Colorable with fewer colors stays colorable; and if nobody in W
        // may use j, every I_j is empty and nothing changes.
        if prev.get(w) || w.is_disjoint(class) {
            continue;
        }
        for mis in enumerate_mis(g, w) {
            scans += 1;
            let take = mis.intersection(class);
            if !take.is_empty() && prev.get(w.difference(take)) {
                next.set(w);
                break;
            }
        }
    }
    (next, scans)
}

/// Tables for levels `1..=kappa` of `inst`, with the number of
/// `(W, I)` pairs examined at each level.
#[derive(Clone, Debug)]
pub struct LevelTables {
    pub tables: Vec<ColorabilityTable>,
    pub scans: Vec<u64>,
}

impl LevelTables {
    /// Whether the whole vertex set is colorable at the top level.
    pub fn colorable(&self) -> bool {
        match self.tables.last() {
            Some(t) => t.get(VertexSubset::full(t.order())),
            None => false,
        }
    }

    pub fn heap_bytes(&self) -> usize {
        self.tables.iter().map(ColorabilityTable::heap_bytes).sum()
    }
}

/// Runs every round on `inst` as given, without preprocessing or palette
/// compaction.
pub fn build_tables(inst: &Instance) -> LevelTables {
    let kappa = inst.kappa();
    let mut tables = Vec::with_capacity(kappa as usize);
    let mut scans = Vec::with_capacity(kappa as usize);
    if kappa == 0 {
        return LevelTables { tables, scans };
    }
    let (first, s) = round1_counted(inst);
    tables.push(first);
    scans.push(s);
    for j in 2..=kappa {
        let (next, s) = round_update_counted(inst, j, tables.last().unwrap());
        tables.push(next);
        scans.push(s);
    }
    LevelTables { tables, scans }
}
