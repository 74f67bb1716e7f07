//! JSON interchange format for matroids.
//!
//! ```json
//! { "name": "U_2_3", "ground_set": ["1", "2", "3"], "rank": 2,
//!   "bases": [["1", "2"], ["1", "3"], ["2", "3"]] }
//! ```
//!
//! Exactly one of `bases` or `nonbases` is present; `nonbases` lists the `rank`-subsets
//! that are not bases.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::MatroidError;
use crate::matroid::Matroid;
use crate::set::{ElementSet, GroundSet};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("parse error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("parse error: {0}")]
    Format(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidFile {
    pub name: String,
    pub ground_set: Vec<String>,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bases: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nonbases: Option<Vec<Vec<String>>>,
}

impl MatroidFile {
    pub fn from_json(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matroid files serialize")
    }

    /// Lists every basis of `m`, in canonical order.
    pub fn from_matroid(name: &str, m: &Matroid) -> Self {
        MatroidFile {
            name: name.to_string(),
            ground_set: m.ground().labels().to_vec(),
            rank: m.rank_value(),
            bases: Some(m.bases().iter().map(|&b| m.ground().names(b)).collect()),
            nonbases: None,
        }
    }

    fn sets(
        &self,
        ground: &GroundSet,
        lists: &[Vec<String>],
    ) -> Result<Vec<ElementSet>, FileError> {
        lists
            .iter()
            .map(|list| {
                let set = ground.subset(list)?;
                if set.len() != list.len() {
                    return Err(FileError::Format(format!("repeated element in {list:?}")));
                }
                if set.len() != self.rank {
                    return Err(FileError::Format(format!(
                        "{list:?} has {} elements, rank is {}",
                        list.len(),
                        self.rank
                    )));
                }
                Ok(set)
            })
            .collect()
    }

    /// Builds the matroid; with `validate` the exchange axiom is checked.
    pub fn to_matroid(&self, validate: bool) -> Result<Matroid, FileError> {
        let ground = GroundSet::new(self.ground_set.iter().cloned())?;
        match (&self.bases, &self.nonbases) {
            (Some(bases), None) => {
                let sets = self.sets(&ground, bases)?;
                Ok(Matroid::new(ground, sets, validate)?)
            }
            (None, Some(nonbases)) => {
                let sets = self.sets(&ground, nonbases)?;
                Ok(Matroid::from_nonbases(ground, self.rank, sets, validate)?)
            }
            _ => Err(FileError::Format(
                "exactly one of bases or nonbases is required".into(),
            )),
        }
    }
}
