//! Integer vectors indexed by `1..=k`.
//!
//! All arithmetic is overflow-checked and panics instead of wrapping.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KVector(Vec<i64>);

impl KVector {
    pub fn zero(k: usize) -> Self {
        KVector(vec![0; k])
    }

    pub fn from_vec(entries: Vec<i64>) -> Self {
        KVector(entries)
    }

    /// Builds the vector whose `α`-th entry is `f(α)`, `α = 1..=k`.
    pub fn from_fn(k: usize, f: impl FnMut(usize) -> i64) -> Self {
        KVector((1..=k).map(f).collect())
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Entry at the 1-based index `alpha`.
    pub fn at(&self, alpha: usize) -> i64 {
        self.0[alpha - 1]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    /// Componentwise `x⁺ = max(x, 0)`.
    pub fn pos(&self) -> Self {
        KVector(self.0.iter().map(|&x| x.max(0)).collect())
    }

    /// Componentwise `x⁻ = max(-x, 0)`.
    pub fn neg_part(&self) -> Self {
        KVector(
            self.0
                .iter()
                .map(|&x| x.checked_neg().expect("k-vector overflow").max(0))
                .collect(),
        )
    }

    pub fn scale(&self, c: i64) -> Self {
        KVector(
            self.0
                .iter()
                .map(|&x| x.checked_mul(c).expect("k-vector overflow"))
                .collect(),
        )
    }

    /// `self ≥ other` componentwise.
    pub fn ge(&self, other: &KVector) -> bool {
        self.check_len(other);
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn le(&self, other: &KVector) -> bool {
        other.ge(self)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    fn check_len(&self, other: &KVector) {
        assert_eq!(self.k(), other.k(), "k-vectors of different length");
    }

    fn zip_with(&self, other: &KVector, f: impl Fn(i64, i64) -> Option<i64>) -> KVector {
        self.check_len(other);
        KVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| f(a, b).expect("k-vector overflow"))
                .collect(),
        )
    }
}

impl Index<usize> for KVector {
    type Output = i64;

    /// 1-based.
    fn index(&self, alpha: usize) -> &i64 {
        &self.0[alpha - 1]
    }
}

impl Add for &KVector {
    type Output = KVector;
    fn add(self, rhs: &KVector) -> KVector {
        self.zip_with(rhs, i64::checked_add)
    }
}

impl Add for KVector {
    type Output = KVector;
    fn add(self, rhs: KVector) -> KVector {
        &self + &rhs
    }
}

impl Sub for &KVector {
    type Output = KVector;
    fn sub(self, rhs: &KVector) -> KVector {
        self.zip_with(rhs, i64::checked_sub)
    }
}

impl Sub for KVector {
    type Output = KVector;
    fn sub(self, rhs: KVector) -> KVector {
        &self - &rhs
    }
}

impl Neg for &KVector {
    type Output = KVector;
    fn neg(self) -> KVector {
        self.scale(-1)
    }
}

impl fmt::Display for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
