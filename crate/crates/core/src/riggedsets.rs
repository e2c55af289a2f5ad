//! Brute-force enumeration of the rigged-partition sets.
//!
//! This is the oracle every identity in the crate is checked against, so
//! it is written for obvious completeness rather than speed: every pair of
//! partitions of the requested weights is visited and every rigging within
//! the upper bounds is generated, then filtered by the defining conditions.
//!
//! # Weight bound for the total set
//!
//! Membership requires `P_k ≥ 0` and `Q_k ≥ 0`, which read
//! `n ≥ 2m - kM + (k-l1)` and `m ≥ 2n - kN + (k-l2)`. Substituting one into
//! the other gives `3m ≤ 2kM + kN` and `3n ≤ kM + 2kN`, so scanning
//! `m ≤ ⌊(2kM+kN)/3⌋`, `n ≤ ⌊(kM+2kN)/3⌋` finds every nonempty piece.

use std::collections::BTreeMap;

use crate::params::tau;
use crate::partition::last_rig;
use crate::vacancy::{vacancy_p, vacancy_q};
use crate::{Error, Params, Partition, Result, RiggedPair, Rigging};

/// A canonically ordered, duplicate-free list of rigged pairs of weights
/// `(m, n)`.
///
/// `rigging_cap` is `None` for the cutoff sets `R^{(M,N)}_{m,n}[l1,l2,l3]`
/// (and then the cutoffs in `params` apply). It is `Some(cap)` for a capped
/// slice of the infinite set `R_{m,n}[l1,l2,l3]`, in which case only the
/// labels in `params` are meaningful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiggedSet {
    pub params: Params,
    pub m: i64,
    pub n: i64,
    pub rigging_cap: Option<i64>,
    pub elements: Vec<RiggedPair>,
}

impl RiggedSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &RiggedPair) -> bool {
        self.elements.binary_search(x).is_ok()
    }
}

/// All level-`k` restricted partitions of `m`, in row-list lexicographic
/// order. Empty when `m < 0`.
pub fn enumerate_partitions(m: i64, k: usize) -> Vec<Partition> {
    assert!(k >= 1, "level must be positive");
    if m < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut mult = vec![0usize; k];
    fill_partitions(m, k, &mut mult, &mut out);
    out.sort();
    out
}

fn fill_partitions(rest: i64, alpha: usize, mult: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if alpha == 1 {
        mult[0] = rest as usize;
        out.push(Partition::new(mult.len(), mult.clone()).unwrap());
        return;
    }
    let a = alpha as i64;
    for count in 0..=rest / a {
        mult[alpha - 1] = count as usize;
        fill_partitions(rest - count * a, alpha - 1, mult, out);
    }
    mult[alpha - 1] = 0;
}

/// Weakly decreasing sequences of `len` integers in `[0, hi]`, emitted in
/// colexicographic order.
fn decreasing_sequences(len: usize, hi: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    if hi < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0i64; len];
    loop {
        out.push(cur.clone());
        // Increment the last position that can grow while staying ≤ its
        // predecessor, resetting everything after it.
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            let bound = if i == 0 { hi } else { cur[i - 1] };
            if cur[i] < bound {
                cur[i] += 1;
                for x in &mut cur[i + 1..] {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Cartesian product of per-α choices, as rigging row vectors.
fn riggings_within(p: &Partition, upper: impl Fn(usize) -> i64) -> Vec<Rigging> {
    let choices: Vec<Vec<Vec<i64>>> = (1..=p.k()).map(|a| decreasing_sequences(p.m(a), upper(a))).collect();
    let mut acc: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    for options in &choices {
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for prefix in &acc {
            for o in options {
                let mut row = prefix.clone();
                row.push(o.clone());
                next.push(row);
            }
        }
        acc = next;
    }
    acc.into_iter().map(Rigging::from_rows_unchecked).collect()
}

/// `r[α] + s[β] ≥ τ^{(α,β)}` for every `α, β`, with `∞` making a pair
/// vacuous.
pub fn satisfies_tau(x: &RiggedPair, p: &Params) -> bool {
    satisfies_tau_shifted(x, p, 0)
}

fn satisfies_tau_shifted(x: &RiggedPair, p: &Params, shift: i64) -> bool {
    let k = p.k();
    (1..=k).all(|a| match last_rig(&x.r, a) {
        crate::Bottom::Infinite => true,
        crate::Bottom::Finite(ra) => (1..=k).all(|b| last_rig(&x.s, b).at_least(tau(a, b, p) + shift - ra)),
    })
}

/// Membership in `R^{(M,N)}_{m,n}[l1,l2]`: vacancy numbers non-negative and
/// the first (largest) rigging of each row length within them. Ignores `l3`.
pub fn in_cutoff_set(x: &RiggedPair, p: &Params) -> bool {
    let pv = vacancy_p(&x.mu, &x.nu, p.cutoff_m(), p.l1());
    let qv = vacancy_q(&x.mu, &x.nu, p.cutoff_n(), p.l2());
    pv.is_nonneg()
        && qv.is_nonneg()
        && (1..=p.k()).all(|a| x.r.first(a).is_none_or(|r1| r1 <= pv[a]) && x.s.first(a).is_none_or(|s1| s1 <= qv[a]))
}

/// Membership in `R^{(M,N)}_{m,n}[l1,l2,l3]` for the pair's own weights.
pub fn is_member(x: &RiggedPair, p: &Params) -> bool {
    x.k() == p.k() && in_cutoff_set(x, p) && satisfies_tau(x, p)
}

/// `R^{(M,N)}_{m,n}[l1,l2,l3]`, empty when `m < 0` or `n < 0`.
pub fn enumerate_r(p: &Params, m: i64, n: i64) -> RiggedSet {
    enumerate_r_shifted(p, m, n, 0)
}

/// [`enumerate_r`] with every `τ` bound raised by `tau_shift`. Only for
/// fault-injection tests of the verifiers.
#[doc(hidden)]
pub fn enumerate_r_shifted(p: &Params, m: i64, n: i64, tau_shift: i64) -> RiggedSet {
    let k = p.k();
    let mut elements = Vec::new();
    for mu in enumerate_partitions(m, k) {
        for nu in enumerate_partitions(n, k) {
            let pv = vacancy_p(&mu, &nu, p.cutoff_m(), p.l1());
            let qv = vacancy_q(&mu, &nu, p.cutoff_n(), p.l2());
            if !pv.is_nonneg() || !qv.is_nonneg() {
                continue;
            }
            let rs = riggings_within(&mu, |a| pv[a]);
            let ss = riggings_within(&nu, |a| qv[a]);
            for r in &rs {
                for s in &ss {
                    let x = RiggedPair {
                        mu: mu.clone(),
                        nu: nu.clone(),
                        r: r.clone(),
                        s: s.clone(),
                    };
                    if satisfies_tau_shifted(&x, p, tau_shift) {
                        elements.push(x);
                    }
                }
            }
        }
    }
    elements.sort();
    elements.dedup();
    RiggedSet {
        params: *p,
        m,
        n,
        rigging_cap: None,
        elements,
    }
}

/// Membership in the (infinite) set `R_{m,n}[l1,l2,l3]`: only the `τ`
/// condition. When `l3 = min(l1, l2)` every well-formed pair qualifies.
pub fn is_member_plain(x: &RiggedPair, k: usize, l1: i64, l2: i64, l3: i64) -> Result<bool> {
    let p = Params::new(k, l1, l2, l3, 0, 0)?;
    x.validate()?;
    Ok(x.k() == k && satisfies_tau(x, &p))
}

/// The slice of `R_{m,n}[l1,l2,l3]` whose rigging entries are all at most
/// `cap`. Without a cap the set is infinite and [`Error::Unbounded`] is
/// returned.
pub fn enumerate_r_plain(k: usize, l1: i64, l2: i64, l3: i64, m: i64, n: i64, cap: Option<i64>) -> Result<RiggedSet> {
    let p = Params::new(k, l1, l2, l3, 0, 0)?;
    let cap = cap.ok_or(Error::Unbounded)?;
    let mut elements = Vec::new();
    for mu in enumerate_partitions(m, k) {
        for nu in enumerate_partitions(n, k) {
            let rs = riggings_within(&mu, |_| cap);
            let ss = riggings_within(&nu, |_| cap);
            for r in &rs {
                for s in &ss {
                    let x = RiggedPair {
                        mu: mu.clone(),
                        nu: nu.clone(),
                        r: r.clone(),
                        s: s.clone(),
                    };
                    if satisfies_tau(&x, &p) {
                        elements.push(x);
                    }
                }
            }
        }
    }
    elements.sort();
    Ok(RiggedSet {
        params: p,
        m,
        n,
        rigging_cap: Some(cap),
        elements,
    })
}

/// `(⌊(2kM+kN)/3⌋, ⌊(kM+2kN)/3⌋)`: no nonempty piece lies beyond these
/// weights.
pub fn weight_bounds(p: &Params) -> (i64, i64) {
    let k = p.k() as i64;
    let (big_m, big_n) = (p.cutoff_m(), p.cutoff_n());
    ((2 * k * big_m + k * big_n) / 3, (k * big_m + 2 * k * big_n) / 3)
}

/// Every nonempty graded piece of `R^{(M,N)}[l1,l2,l3]`.
pub fn enumerate_total(p: &Params) -> BTreeMap<(i64, i64), RiggedSet> {
    let (max_m, max_n) = weight_bounds(p);
    let mut out = BTreeMap::new();
    for m in 0..=max_m {
        for n in 0..=max_n {
            let set = enumerate_r(p, m, n);
            if !set.is_empty() {
                out.insert((m, n), set);
            }
        }
    }
    out
}

/// Total cardinality `|R^{(M,N)}[l1,l2,l3]|`.
pub fn total_cardinality(p: &Params) -> usize {
    enumerate_total(p).values().map(RiggedSet::len).sum()
}
