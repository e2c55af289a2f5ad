//! The parameter tuple `(k, l1, l2, l3, M, N)` and the `τ` lower bound.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Level, highest-weight labels and degree cutoffs.
///
/// Construction validates `0 ≤ l1, l2 ≤ k`, `0 ≤ l3 ≤ min(l1, l2)` and
/// `M, N ≥ 0`. Invalid labels are rejected, never clamped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct Params {
    k: usize,
    l1: i64,
    l2: i64,
    l3: i64,
    cutoff_m: i64,
    cutoff_n: i64,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    k: usize,
    l1: i64,
    l2: i64,
    l3: i64,
    #[serde(rename = "M")]
    cutoff_m: i64,
    #[serde(rename = "N")]
    cutoff_n: i64,
}

impl TryFrom<RawParams> for Params {
    type Error = Error;
    fn try_from(r: RawParams) -> Result<Self> {
        Params::new(r.k, r.l1, r.l2, r.l3, r.cutoff_m, r.cutoff_n)
    }
}

impl From<Params> for RawParams {
    fn from(p: Params) -> Self {
        RawParams {
            k: p.k,
            l1: p.l1,
            l2: p.l2,
            l3: p.l3,
            cutoff_m: p.cutoff_m,
            cutoff_n: p.cutoff_n,
        }
    }
}

impl Params {
    pub fn new(k: usize, l1: i64, l2: i64, l3: i64, cutoff_m: i64, cutoff_n: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParams("level k must be positive".into()));
        }
        let ki = k as i64;
        if !(0..=ki).contains(&l1) || !(0..=ki).contains(&l2) {
            return Err(Error::InvalidParams(format!(
                "labels must satisfy 0 <= l1, l2 <= k (k={k}, l1={l1}, l2={l2})"
            )));
        }
        if !(0..=l1.min(l2)).contains(&l3) {
            return Err(Error::InvalidParams(format!(
                "l3 must satisfy 0 <= l3 <= min(l1, l2) (l1={l1}, l2={l2}, l3={l3})"
            )));
        }
        if cutoff_m < 0 || cutoff_n < 0 {
            return Err(Error::InvalidParams(format!(
                "cutoffs must be non-negative (M={cutoff_m}, N={cutoff_n})"
            )));
        }
        Ok(Params {
            k,
            l1,
            l2,
            l3,
            cutoff_m,
            cutoff_n,
        })
    }

    /// Parameters with `l3 = min(l1, l2)`, where the `τ` bound is vacuous.
    pub fn unrestricted(k: usize, l1: i64, l2: i64, cutoff_m: i64, cutoff_n: i64) -> Result<Self> {
        Params::new(k, l1, l2, l1.min(l2), cutoff_m, cutoff_n)
    }

    pub fn k(&self) -> usize {
        self.k
    }
    pub fn l1(&self) -> i64 {
        self.l1
    }
    pub fn l2(&self) -> i64 {
        self.l2
    }
    pub fn l3(&self) -> i64 {
        self.l3
    }
    pub fn cutoff_m(&self) -> i64 {
        self.cutoff_m
    }
    pub fn cutoff_n(&self) -> i64 {
        self.cutoff_n
    }

    pub fn with_l3(&self, l3: i64) -> Result<Self> {
        Params::new(self.k, self.l1, self.l2, l3, self.cutoff_m, self.cutoff_n)
    }

    pub fn with_cutoffs(&self, cutoff_m: i64, cutoff_n: i64) -> Result<Self> {
        Params::new(self.k, self.l1, self.l2, self.l3, cutoff_m, cutoff_n)
    }

    /// The parameters of the `(a, c)` term on the right of the recursion:
    /// primed labels and cutoffs `(M, N-1)`.
    pub fn recursion_term(&self, a: i64, c: i64) -> Result<Self> {
        if self.cutoff_n < 1 {
            return Err(Error::Precondition("recursion needs N >= 1".into()));
        }
        let (l1p, l2p, l3p) = primed_labels(self.k, self.l1, a, c);
        Params::new(self.k, l1p, l2p, l3p, self.cutoff_m, self.cutoff_n - 1)
    }

    /// Every legal `(l1, l2, l3)` at level `k`, in lexicographic order.
    pub fn legal_labels(k: usize) -> impl Iterator<Item = (i64, i64, i64)> {
        let ki = k as i64;
        (0..=ki).flat_map(move |l1| (0..=ki).flat_map(move |l2| (0..=l1.min(l2)).map(move |l3| (l1, l2, l3))))
    }
}

/// `x⁺ = max(x, 0)`.
pub fn pos(x: i64) -> i64 {
    x.max(0)
}

/// `x⁻ = max(-x, 0)`.
pub fn neg_part(x: i64) -> i64 {
    (-x).max(0)
}

/// `(l1', l2', l3')` for a recursion term `(a, c)`:
/// `l1' = l1 + c - a - (l1 + c - k)⁺`, `l2' = k - c`, `l3' = l1' + l2' - k`.
pub fn primed_labels(k: usize, l1: i64, a: i64, c: i64) -> (i64, i64, i64) {
    let k = k as i64;
    let l1p = l1 + c - a - pos(l1 + c - k);
    let l2p = k - c;
    (l1p, l2p, l1p + l2p - k)
}

/// `τ^{(α,β)}[l1,l2,l3] = min(α,β) - (α-l1)⁺ - (β-l2)⁺ - l3`.
pub fn tau(alpha: usize, beta: usize, p: &Params) -> i64 {
    let (a, b) = (alpha as i64, beta as i64);
    a.min(b) - pos(a - p.l1) - pos(b - p.l2) - p.l3
}

/// The eight-term form `min(α, β, l1, l2, l1+β-α, l2+α-β, l1+l2-α, l1+l2-β) - l3`.
/// Agrees with [`tau`] for all legal labels.
pub fn tau_min_form(alpha: usize, beta: usize, p: &Params) -> i64 {
    let (a, b) = (alpha as i64, beta as i64);
    let (l1, l2) = (p.l1, p.l2);
    [a, b, l1, l2, l1 + b - a, l2 + a - b, l1 + l2 - a, l1 + l2 - b]
        .into_iter()
        .min()
        .unwrap()
        - p.l3
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Params::new(0, 0, 0, 0, 0, 0).is_err());
        assert!(Params::new(2, 3, 0, 0, 0, 0).is_err());
        assert!(Params::new(2, 1, 2, 2, 0, 0).is_err());
        assert!(Params::new(2, 1, 2, 1, -1, 0).is_err());
        assert!(Params::new(2, 1, 2, 1, 0, 3).is_ok());
    }

    #[test]
    fn tau_examples() {
        let p = Params::new(3, 1, 2, 0, 0, 0).unwrap();
        assert_eq!(tau(2, 2, &p), 1);
        let p = Params::new(1, 1, 1, 1, 0, 0).unwrap();
        assert_eq!(tau(1, 1, &p), 0);
    }

    #[test]
    fn tau_forms_agree_and_symmetry() {
        for k in 1..=5 {
            for (l1, l2, l3) in Params::legal_labels(k) {
                let p = Params::new(k, l1, l2, l3, 0, 0).unwrap();
                let swapped = Params::new(k, l2, l1, l3, 0, 0).unwrap();
                for a in 1..=k {
                    for b in 1..=k {
                        assert_eq!(tau(a, b, &p), tau_min_form(a, b, &p));
                        assert_eq!(tau(a, b, &p), tau(b, a, &swapped));
                        if l3 == l1.min(l2) {
                            assert!(tau(a, b, &p) <= 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn label_count() {
        // Σ_{l1,l2} (min(l1,l2)+1) at k = 3.
        assert_eq!(Params::legal_labels(3).count(), 30);
    }

    #[test]
    fn primed_labels_are_legal() {
        for k in 1..=5usize {
            for (l1, l2, l3) in Params::legal_labels(k) {
                for a in 0..=l3 {
                    for c in 0..=(l2 - a) {
                        let (p1, p2, p3) = primed_labels(k, l1, a, c);
                        assert_eq!(p1, (l1 + c - a).min(k as i64 - a));
                        assert!(Params::new(k, p1, p2, p3, 0, 0).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn serde_uses_upper_case_cutoffs() {
        let p = Params::new(2, 1, 2, 1, 3, 4).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"k":2,"l1":1,"l2":2,"l3":1,"M":3,"N":4}"#);
        assert_eq!(serde_json::from_str::<Params>(&s).unwrap(), p);
        assert!(serde_json::from_str::<Params>(r#"{"k":2,"l1":3,"l2":2,"l3":1,"M":3,"N":4}"#).is_err());
    }
}
