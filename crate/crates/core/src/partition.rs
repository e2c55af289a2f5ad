//! Level-k restricted partitions, riggings and rigged pairs.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, KVector, Result};

/// A partition with parts at most `k`, stored as row-length
/// multiplicities: `mult[α-1] = m_α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    mult: Vec<usize>,
}

impl Partition {
    pub fn new(k: usize, mult: Vec<usize>) -> Result<Self> {
        if k == 0 || mult.len() != k {
            return Err(Error::InvalidRiggedPair(format!(
                "multiplicity vector has length {}, expected k = {k}",
                mult.len()
            )));
        }
        Ok(Partition { mult })
    }

    pub fn empty(k: usize) -> Self {
        Partition { mult: vec![0; k] }
    }

    pub fn k(&self) -> usize {
        self.mult.len()
    }

    /// Number of rows of length `alpha` (1-based).
    pub fn m(&self, alpha: usize) -> usize {
        self.mult[alpha - 1]
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.mult
    }

    /// `Σ_α α·m_α`.
    pub fn weight(&self) -> i64 {
        self.mult
            .iter()
            .enumerate()
            .map(|(i, &m)| (i as i64 + 1) * m as i64)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    /// Row lengths in weakly decreasing order.
    pub fn rows(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.k())
            .rev()
            .flat_map(move |a| std::iter::repeat_n(a, self.m(a)))
    }

    /// `m_α + shift_α`, or `None` if some multiplicity would go negative.
    pub fn shifted(&self, shift: &KVector) -> Option<Partition> {
        assert_eq!(shift.k(), self.k());
        let mult = self
            .mult
            .iter()
            .zip(shift.as_slice())
            .map(|(&m, &d)| usize::try_from(m as i64 + d).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(Partition { mult })
    }
}

/// Lexicographic on the row lists, largest rows first.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rows().cmp(other.rows())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, r) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// Value of the bottom rigging `r[α]`: the last entry of the rows of
/// length `α`, or `∞` when there are no such rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bottom {
    Finite(i64),
    Infinite,
}

impl Bottom {
    /// `self ≥ bound`; `∞` exceeds every integer.
    pub fn at_least(self, bound: i64) -> bool {
        match self {
            Bottom::Finite(v) => v >= bound,
            Bottom::Infinite => true,
        }
    }

    /// `self = value`; `∞` equals no integer.
    pub fn equals(self, value: i64) -> bool {
        self == Bottom::Finite(value)
    }
}

/// Riggings of one partition: `rows[α-1]` is the weakly decreasing list
/// `r^{(α)}_1 ≥ … ≥ r^{(α)}_{m_α} ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Rigging {
    rows: Vec<Vec<i64>>,
}

impl Rigging {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidRiggedPair(format!(
                    "rigging of rows of length {} is not weakly decreasing: {row:?}",
                    i + 1
                )));
            }
            if row.last().is_some_and(|&x| x < 0) {
                return Err(Error::InvalidRiggedPair(format!(
                    "rigging of rows of length {} has a negative entry: {row:?}",
                    i + 1
                )));
            }
        }
        Ok(Rigging { rows })
    }

    pub fn zero(p: &Partition) -> Self {
        Rigging {
            rows: p.multiplicities().iter().map(|&m| vec![0; m]).collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// The list for rows of length `alpha` (1-based).
    pub fn row(&self, alpha: usize) -> &[i64] {
        &self.rows[alpha - 1]
    }

    pub fn fits(&self, p: &Partition) -> bool {
        self.rows.len() == p.k() && self.rows.iter().zip(p.multiplicities()).all(|(r, &m)| r.len() == m)
    }

    pub fn last(&self, alpha: usize) -> Bottom {
        last_rig(self, alpha)
    }

    pub fn first(&self, alpha: usize) -> Option<i64> {
        self.row(alpha).first().copied()
    }

    pub fn total(&self) -> i64 {
        self.rows.iter().flatten().sum()
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<i64>>) -> Self {
        Rigging { rows }
    }
}

/// `r^{(α)}_{m_α}` if `m_α ≥ 1`, else `∞`.
pub fn last_rig(rig: &Rigging, alpha: usize) -> Bottom {
    match rig.row(alpha).last() {
        Some(&v) => Bottom::Finite(v),
        None => Bottom::Infinite,
    }
}

/// `(μ, r; ν, s)`. Ordered by `(μ, ν)` as partitions, then by the
/// riggings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RiggedPair {
    pub mu: Partition,
    pub nu: Partition,
    pub r: Rigging,
    pub s: Rigging,
}

impl RiggedPair {
    pub fn new(mu: Partition, r: Rigging, nu: Partition, s: Rigging) -> Result<Self> {
        if mu.k() != nu.k() {
            return Err(Error::InvalidRiggedPair("μ and ν have different levels".into()));
        }
        if !r.fits(&mu) || !s.fits(&nu) {
            return Err(Error::InvalidRiggedPair(
                "rigging row counts do not match the multiplicities".into(),
            ));
        }
        Ok(RiggedPair { mu, nu, r, s })
    }

    pub fn empty(k: usize) -> Self {
        let e = Partition::empty(k);
        RiggedPair {
            r: Rigging::zero(&e),
            s: Rigging::zero(&e),
            mu: e.clone(),
            nu: e,
        }
    }

    pub fn k(&self) -> usize {
        self.mu.k()
    }

    /// Checks every structural invariant; used after deserialization.
    pub fn validate(&self) -> Result<()> {
        Rigging::new(self.r.rows.clone())?;
        Rigging::new(self.s.rows.clone())?;
        if self.mu.k() == 0 || self.mu.k() != self.nu.k() {
            return Err(Error::InvalidRiggedPair("bad level".into()));
        }
        if !self.r.fits(&self.mu) || !self.s.fits(&self.nu) {
            return Err(Error::InvalidRiggedPair(
                "rigging row counts do not match the multiplicities".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for RiggedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?}; {}, {:?})", self.mu, self.r.rows, self.nu, self.s.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(mult: &[usize]) -> Partition {
        Partition::new(mult.len(), mult.to_vec()).unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(part(&[0, 0]).weight(), 0);
        assert_eq!(part(&[1, 1]).weight(), 3);
        assert_eq!(part(&[2, 0, 1]).weight(), 5);
    }

    #[test]
    fn row_list_order() {
        // (1,1,1) < (2,1) lexicographically on rows.
        assert!(part(&[3, 0]) < part(&[1, 1]));
        assert!(part(&[0, 0]) < part(&[1, 0]));
        assert_eq!(part(&[2, 0, 1]).rows().collect::<Vec<_>>(), vec![3, 1, 1]);
    }

    #[test]
    fn last_rig_convention() {
        let r = Rigging::new(vec![vec![], vec![3, 1], vec![0]]).unwrap();
        assert_eq!(last_rig(&r, 1), Bottom::Infinite);
        assert_eq!(last_rig(&r, 2), Bottom::Finite(1));
        assert_eq!(last_rig(&r, 3), Bottom::Finite(0));
        assert!(Bottom::Infinite.at_least(i64::MAX));
        assert!(!Bottom::Infinite.equals(0));
    }

    #[test]
    fn rigging_validation() {
        assert!(Rigging::new(vec![vec![1, 2]]).is_err());
        assert!(Rigging::new(vec![vec![0, -1]]).is_err());
        let mu = part(&[2, 0]);
        let bad = Rigging::new(vec![vec![0], vec![]]).unwrap();
        assert!(RiggedPair::new(mu.clone(), bad, mu.clone(), Rigging::zero(&mu)).is_err());
    }

    #[test]
    fn shifting() {
        let p = part(&[1, 0, 2]);
        let e = KVector::from_vec(vec![-1, 1, 0]);
        assert_eq!(p.shifted(&e), Some(part(&[0, 1, 2])));
        assert_eq!(p.shifted(&KVector::from_vec(vec![0, -1, 0])), None);
    }
}
