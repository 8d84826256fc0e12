use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use super::solver::solve_piercing;
use crate::instance::PiercingInstance;
use crate::query::QueryCounter;

/// Pierceability of a family and of each of its leave-one-out subfamilies.
///
/// Dropping a single cross is enough to test every proper subfamily, since
/// removing crosses can only enlarge the intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityReport {
    pub full_family_pierceable: bool,
    pub each_deletion_pierceable: Vec<bool>,
}

impl MinimalityReport {
    /// Empty intersection, yet every proper subfamily meets.
    pub fn is_minimal_non_pierceable(&self) -> bool {
        !self.full_family_pierceable && self.each_deletion_pierceable.iter().all(|&b| b)
    }
}

/// Serialized as an array of `{"dropped": <1-based index or null>, "pierceable": bool}`,
/// the full family first.
impl Serialize for MinimalityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            dropped: Option<usize>,
            pierceable: bool,
        }
        let mut seq = serializer.serialize_seq(Some(self.each_deletion_pierceable.len() + 1))?;
        seq.serialize_element(&Entry { dropped: None, pierceable: self.full_family_pierceable })?;
        for (i, &pierceable) in self.each_deletion_pierceable.iter().enumerate() {
            seq.serialize_element(&Entry { dropped: Some(i + 1), pierceable })?;
        }
        seq.end()
    }
}

pub fn check_minimality(instance: &PiercingInstance) -> MinimalityReport {
    let pierceable = |inst: &PiercingInstance| solve_piercing(inst, &mut QueryCounter::new()).pierceable;
    MinimalityReport {
        full_family_pierceable: pierceable(instance),
        each_deletion_pierceable: (0..instance.len()).map(|i| pierceable(&instance.without(i))).collect(),
    }
}
