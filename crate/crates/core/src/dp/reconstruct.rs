use crate::dp::lists::color_class;
use crate::dp::table::ColorabilityTable;
use crate::error::SolveError;
use crate::instance::{Color, Coloring, Instance};
use crate::mis::enumerate_mis;

/// Recovers a list coloring from the level tables of `inst`, top level
/// first.
///
/// At level `j` with uncolored set `W`: if level `j - 1` already colors `W`,
/// go down a level. Otherwise take the first maximal independent set `I`
/// of `G[W]` (in enumeration order) whose part `I_j` allowed to use `j`
/// leaves a remainder colorable at level `j - 1`, paint `I_j` with `j` and
/// continue on `W ∖ I_j`.
pub fn reconstruct(inst: &Instance, tables: &[ColorabilityTable]) -> Result<Coloring, SolveError> {
    let g = inst.graph();
    let mut remaining = g.vertices();
    let mut f = Coloring::uncolored(g.order());
    if tables.len() != inst.kappa() as usize {
        return Err(SolveError::Inconsistent(format!(
            "{} tables for a palette of {}",
            tables.len(),
            inst.kappa()
        )));
    }
    if !remaining.is_empty() && !tables.last().is_some_and(|t| t.get(remaining)) {
        return Err(SolveError::Inconsistent(
            "top-level table does not mark the vertex set colorable".into(),
        ));
    }

    for j in (1..=inst.kappa()).rev() {
        if remaining.is_empty() {
            break;
        }
        let below = (j > 1).then(|| &tables[j as usize - 2]);
        if below.is_some_and(|t| t.get(remaining)) {
            continue;
        }
        let class = color_class(inst, j);
        let take = enumerate_mis(g, remaining)
            .map(|mis| mis.intersection(class))
            .find(|&take| match below {
                Some(t) => t.get(remaining.difference(take)),
                None => take == remaining,
            })
            .ok_or_else(|| {
                SolveError::Inconsistent(format!(
                    "no witness at level {j} for {remaining:?}"
                ))
            })?;
        for v in take.iter() {
            f.set(v, j as Color);
        }
        remaining = remaining.difference(take);
    }

    if !remaining.is_empty() {
        return Err(SolveError::Inconsistent(format!(
            "vertices {remaining:?} left uncolored"
        )));
    }
    Ok(f)
}
