//! Partial sums, percentage errors and the averaging rule for oscillating
//! partial-sum sequences.

use crate::error::{Error, Result};
use crate::perturbation::EnergyExpansion;

/// `S_k = Σ_{j≤k} E_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialSumSequence {
    pub sums: Vec<f64>,
}

impl PartialSumSequence {
    pub fn from_corrections(corrections: &[f64]) -> Self {
        let sums = corrections
            .iter()
            .scan(0.0, |acc, &e| {
                *acc += e;
                Some(*acc)
            })
            .collect();
        Self { sums }
    }

    pub fn len(&self) -> usize {
        self.sums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sums.is_empty()
    }

    pub fn last(&self) -> Option<f64> {
        self.sums.last().copied()
    }
}

pub fn partial_sums(expansion: &EnergyExpansion) -> PartialSumSequence {
    PartialSumSequence::from_corrections(&expansion.corrections)
}

/// `100 |e_pert - e_ref| / |e_ref|`
pub fn percent_error(e_pert: f64, e_ref: f64) -> Result<f64> {
    if e_ref == 0.0 {
        return Err(Error::ZeroReference);
    }
    Ok(100.0 * (e_pert - e_ref).abs() / e_ref.abs())
}

/// Which pairs of partial sums the averaging rule may pick.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pairing {
    /// Any consecutive pair `(S_k, S_{k+1})`, `k ≥ 1`.
    #[default]
    Consecutive,
    /// Only pairs `(S_{2j}, S_{2j+1})`, i.e. one member of the even
    /// subsequence with its odd successor.
    EvenOdd,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilizedEstimate {
    pub value: f64,
    /// `k*`: the estimate averages `S_{k*}` and `S_{k*+1}`.
    pub index: usize,
}

/// Averages the two partial sums at the point where they come closest.
///
/// For a series whose partial sums alternate around the limit, the two
/// subsequences bracket the eigenvalue and their mean at the tightest
/// approach is the estimate. Ties go to the later pair. Returns `None` for
/// fewer than three sums.
pub fn stabilized_estimate(seq: &PartialSumSequence, pairing: Pairing) -> Option<StabilizedEstimate> {
    let s = &seq.sums;
    if s.len() < 3 {
        return None;
    }
    let step = match pairing {
        Pairing::Consecutive => 1,
        Pairing::EvenOdd => 2,
    };
    let first = match pairing {
        Pairing::Consecutive => 1,
        Pairing::EvenOdd => 2,
    };
    let mut best: Option<(usize, f64)> = None;
    for k in (first..s.len() - 1).step_by(step) {
        let gap = (s[k + 1] - s[k]).abs();
        if best.is_none_or(|(_, g)| gap <= g) {
            best = Some((k, gap));
        }
    }
    // EvenOdd with only S_0..S_2 has no admissible pair
    let (index, _) = best?;
    Some(StabilizedEstimate {
        value: 0.5 * (s[index] + s[index + 1]),
        index,
    })
}
