use crate::error::LevelOutOfRange;
use crate::instance::{Color, ColorList, Instance};
use crate::subset::VertexSubset;

/// Every vertex's list cut down to the colors `1..=level`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedLists {
    level: Color,
    lists: Vec<ColorList>,
}

impl RestrictedLists {
    pub fn level(&self) -> Color {
        self.level
    }

    pub fn lists(&self) -> &[ColorList] {
        &self.lists
    }

    pub fn list(&self, v: usize) -> &ColorList {
        &self.lists[v]
    }
}

pub fn restrict_lists(inst: &Instance, level: Color) -> Result<RestrictedLists, LevelOutOfRange> {
    if level == 0 || level > inst.kappa() {
        return Err(LevelOutOfRange {
            level,
            kappa: inst.kappa(),
        });
    }
    Ok(RestrictedLists {
        level,
        lists: inst.lists().iter().map(|l| l.truncated(level)).collect(),
    })
}

/// The vertices whose list contains `color`.
pub(crate) fn color_class(inst: &Instance, color: Color) -> VertexSubset {
    inst.lists()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.contains(color))
        .map(|(v, _)| v)
        .collect()
}
