//! Uniformity testing from one call of the locked number oracle.

use std::fmt;

use num_integer::binomial;
use serde::Serialize;

use crate::error::{MatroidError, Result};
use crate::locked::{enumerate_locked, locked_number_oracle, LockedNumbers};
use crate::matroid::Matroid;

/// The five sufficient conditions for uniformity, in the order they are tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum UniformityCondition {
    /// (iv) `r(M) = |E|`
    #[serde(rename = "iv")]
    Free,
    /// (v) `r(M) = 0`
    #[serde(rename = "v")]
    Zero,
    /// (ii) `|P(M)| = 1`
    #[serde(rename = "ii")]
    OneParallelClass,
    /// (iii) `|S(M)| = 1`
    #[serde(rename = "iii")]
    OneSeriesClass,
    /// (i) `ℓ(M) = 0` and `|P(M)| = |E| = |S(M)|`
    #[serde(rename = "i")]
    Unlocked,
}

impl UniformityCondition {
    pub const ORDER: [UniformityCondition; 5] = [
        UniformityCondition::Free,
        UniformityCondition::Zero,
        UniformityCondition::OneParallelClass,
        UniformityCondition::OneSeriesClass,
        UniformityCondition::Unlocked,
    ];

    pub fn numeral(self) -> &'static str {
        match self {
            UniformityCondition::Unlocked => "i",
            UniformityCondition::OneParallelClass => "ii",
            UniformityCondition::OneSeriesClass => "iii",
            UniformityCondition::Free => "iv",
            UniformityCondition::Zero => "v",
        }
    }

    /// Evaluates the condition on the oracle's four numbers for a ground set of size `n`.
    pub fn holds(self, numbers: &LockedNumbers, n: usize) -> bool {
        match self {
            UniformityCondition::Free => numbers.rank == n,
            UniformityCondition::Zero => numbers.rank == 0,
            UniformityCondition::OneParallelClass => numbers.parallel_count == 1,
            UniformityCondition::OneSeriesClass => numbers.coparallel_count == 1,
            UniformityCondition::Unlocked => {
                numbers.ell == 0 && numbers.parallel_count == n && numbers.coparallel_count == n
            }
        }
    }
}

impl fmt::Display for UniformityCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numeral())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniformityVerdict {
    pub uniform: bool,
    pub witness: Option<UniformityCondition>,
    /// The oracle's answer, absent when it refused a matroid with loops or coloops.
    pub inputs: Option<LockedNumbers>,
    pub note: Option<String>,
}

/// `|𝓑(M)| = C(|E|, r(E))`.
pub fn is_uniform_direct(m: &Matroid) -> bool {
    m.bases().len() == binomial(m.len(), m.rank_value())
}

/// Uniformity test using the default locked number oracle.
pub fn test_uniformity(m: &Matroid) -> Result<UniformityVerdict> {
    test_uniformity_with(m, locked_number_oracle)
}

/// Uniformity test against a caller-supplied locked number oracle, called exactly once.
///
/// When the oracle refuses the matroid because of loops or coloops, conditions (iv) and
/// (v) are read from `r(E)` directly; otherwise such a matroid has `0 < r < |E|` and is
/// reported not uniform.
pub fn test_uniformity_with<F>(m: &Matroid, oracle: F) -> Result<UniformityVerdict>
where
    F: FnOnce(&Matroid) -> Result<LockedNumbers>,
{
    let n = m.len();
    match oracle(m) {
        Ok(numbers) => {
            let witness = UniformityCondition::ORDER
                .into_iter()
                .find(|c| c.holds(&numbers, n));
            Ok(UniformityVerdict {
                uniform: witness.is_some(),
                witness,
                inputs: Some(numbers),
                note: None,
            })
        }
        Err(MatroidError::LoopPresent(_) | MatroidError::ColoopPresent(_)) => {
            let r = m.rank_value();
            let witness = if r == n {
                Some(UniformityCondition::Free)
            } else if r == 0 {
                Some(UniformityCondition::Zero)
            } else {
                None
            };
            Ok(UniformityVerdict {
                uniform: witness.is_some(),
                witness,
                inputs: None,
                note: witness
                    .is_none()
                    .then(|| "has a loop or coloop with 0 < r(M) < |E|".to_string()),
            })
        }
        Err(e) => Err(e),
    }
}

/// For a 3-connected matroid, whether "uniform ⇔ ℓ(M) = 0" holds.
pub fn check_unlocked_iff_uniform(m: &Matroid) -> Result<bool> {
    if !m.is_3_connected() {
        return Err(MatroidError::Not3Connected);
    }
    let unlocked = enumerate_locked(m, None).is_empty();
    Ok(is_uniform_direct(m) == unlocked)
}
