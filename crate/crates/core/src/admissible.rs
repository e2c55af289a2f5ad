//! Index sets `I, J ⊂ {1,…,k}` and the vectors built from them.
//!
//! Notation: `I = {u_1 < … < u_a}`, `J = {v_1 < … < v_b}`, `c = b - a`,
//! `p` the number of elements of `J` that are at most `l1`. The complement
//! `[l1+1, k] \ J` is labeled `v'_p < … < v'_t` (then `v'_i = k+1` for
//! `i < t`) when `l1 + b ≥ k`, and `v'_p < … < v'_1 < w_1 < …` otherwise.
//! The padding value `k+1` is kept literally: `κ` of anything above `k`
//! is the zero vector.

use std::fmt;

use crate::params::primed_labels;
use crate::{Error, KVector, Result};

/// A subset of `{1,…,k}`, stored as a strictly increasing list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    k: usize,
    members: Vec<usize>,
}

impl IndexSet {
    pub fn new(k: usize, members: Vec<usize>) -> Result<Self> {
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndexSet(format!(
                "members must be strictly increasing: {members:?}"
            )));
        }
        if members.first().is_some_and(|&x| x < 1) || members.last().is_some_and(|&x| x > k) {
            return Err(Error::InvalidIndexSet(format!(
                "members must lie in 1..={k}: {members:?}"
            )));
        }
        Ok(IndexSet { k, members })
    }

    pub fn empty(k: usize) -> Self {
        IndexSet { k, members: Vec::new() }
    }

    /// `[lo, hi] ∩ {1,…,k}`.
    pub fn interval(k: usize, lo: i64, hi: i64) -> Self {
        let lo = lo.max(1);
        let hi = hi.min(k as i64);
        IndexSet {
            k,
            members: (lo..=hi).map(|x| x as usize).collect(),
        }
    }

    /// Builds a set from arbitrary members, sorting and deduplicating.
    fn collect(k: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = items.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        IndexSet { k, members }
    }

    /// All `2^k` subsets, ordered by their bitmask.
    pub fn all(k: usize) -> Vec<IndexSet> {
        (0u64..1 << k)
            .map(|mask| IndexSet::collect(k, (1..=k).filter(|i| mask >> (i - 1) & 1 == 1)))
            .collect()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// The `i`-th smallest element, 1-based.
    pub fn nth(&self, i: usize) -> usize {
        self.members[i - 1]
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        IndexSet::collect(self.k, self.members.iter().chain(&other.members).copied())
    }

    pub fn difference(&self, other: &IndexSet) -> IndexSet {
        IndexSet::collect(self.k, self.members.iter().copied().filter(|&x| !other.contains(x)))
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.members.iter().all(|&x| !other.contains(x))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// `κ(S)_α = #{i ∈ S : i ≤ α}`; elements above `k` contribute nothing.
pub fn kappa_of(k: usize, items: impl IntoIterator<Item = usize>) -> KVector {
    let mut v = vec![0i64; k];
    for i in items {
        if (1..=k).contains(&i) {
            for x in &mut v[i - 1..] {
                *x += 1;
            }
        }
    }
    KVector::from_vec(v)
}

pub fn kappa(i: &IndexSet) -> KVector {
    kappa_of(i.k, i.members.iter().copied())
}

/// `κ[lo, hi]`, the staircase of an interval (empty when `lo > hi`).
pub fn kappa_interval(k: usize, lo: i64, hi: i64) -> KVector {
    kappa(&IndexSet::interval(k, lo, hi))
}

/// `ε(I)_α = [α ∈ I] - [α+1 ∈ I]`.
pub fn epsilon(i: &IndexSet) -> KVector {
    KVector::from_fn(i.k, |a| i.contains(a) as i64 - i.contains(a + 1) as i64)
}

/// `J ≥ J'` in the order `κ(J) ≥ κ(J')`.
pub fn set_geq(j: &IndexSet, jp: &IndexSet) -> bool {
    kappa(j).ge(&kappa(jp))
}

/// `J ≤ J'` in the same order.
pub fn set_leq(j: &IndexSet, jp: &IndexSet) -> bool {
    set_geq(jp, j)
}

/// The labeling of `[l1+1, k] \ J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    pub k: usize,
    pub l1: i64,
    /// `#{v ∈ J : v ≤ l1}`.
    pub p: usize,
    /// `max(1, l1 + b - k + 1)`.
    pub t: usize,
    /// `vprime[i-1] = v'_i` for `i = 1..=p`, padded with `k+1` below `t`.
    pub vprime: Vec<usize>,
    /// `w_1 < … < w_{k-l1-b}`, nonempty only when `l1 + b < k`.
    pub w: Vec<usize>,
}

impl Labeling {
    /// `v'_i`, 1-based. `v'_0` continues the labeled sequence: it is `w_1`,
    /// or `k+1` when there are no `w`.
    pub fn vp(&self, i: usize) -> usize {
        match i {
            0 => self.w.first().copied().unwrap_or(self.k + 1),
            _ => self.vprime[i - 1],
        }
    }
}

pub fn label_complement(j: &IndexSet, l1: i64) -> Labeling {
    let k = j.k;
    assert!((0..=k as i64).contains(&l1), "l1 out of range");
    let b = j.len() as i64;
    let p = j.members.iter().filter(|&&v| v as i64 <= l1).count();
    let comp: Vec<usize> = ((l1 as usize + 1)..=k).filter(|&x| !j.contains(x)).collect();
    debug_assert_eq!(comp.len() as i64, k as i64 - l1 - b + p as i64);
    let (t, vprime, w) = if l1 + b >= k as i64 {
        let t = (l1 + b - k as i64 + 1) as usize;
        let vprime = (1..=p).map(|i| if i < t { k + 1 } else { comp[p - i] }).collect();
        (t, vprime, Vec::new())
    } else {
        let vprime = (1..=p).map(|i| comp[p - i]).collect();
        (1, vprime, comp[p..].to_vec())
    };
    Labeling { k, l1, p, t, vprime, w }
}

fn admissibility_failure(i: &IndexSet, j: &IndexSet, l1: i64, l2: i64) -> Option<String> {
    let k = i.k as i64;
    if i.k != j.k {
        return Some("I and J have different levels".into());
    }
    if !(0..=k).contains(&l1) || !(0..=k).contains(&l2) {
        return Some(format!("labels out of range (l1={l1}, l2={l2})"));
    }
    let lab = label_complement(j, l1);
    let a = i.len();
    if a > lab.p {
        return Some(format!("|I| = {a} exceeds p = {}", lab.p));
    }
    if j.len() as i64 > l2 {
        return Some(format!("|J| = {} exceeds l2 = {l2}", j.len()));
    }
    for idx in 1..=a {
        let (u, v, vp) = (i.nth(idx), j.nth(idx), lab.vp(idx));
        if !(v <= u && u < vp) {
            return Some(format!("interleaving fails at i={idx}: v={v}, u={u}, v'={vp}"));
        }
    }
    None
}

/// `(l1, l2)`-admissibility: `a ≤ p`, `b ≤ l2` and `v_i ≤ u_i < v'_i`.
pub fn is_admissible(i: &IndexSet, j: &IndexSet, l1: i64, l2: i64) -> bool {
    admissibility_failure(i, j, l1, l2).is_none()
}

fn require_admissible(i: &IndexSet, j: &IndexSet, l1: i64, l2: i64) -> Result<Labeling> {
    match admissibility_failure(i, j, l1, l2) {
        None => Ok(label_complement(j, l1)),
        Some(reason) => Err(Error::NotAdmissible {
            i: i.to_string(),
            j: j.to_string(),
            reason,
        }),
    }
}

/// An admissible pair together with its labeling data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleData {
    pub i: IndexSet,
    pub j: IndexSet,
    pub l1: i64,
    pub l2: i64,
    pub labeling: Labeling,
}

impl AdmissibleData {
    pub fn new(i: &IndexSet, j: &IndexSet, l1: i64, l2: i64) -> Result<Self> {
        let labeling = require_admissible(i, j, l1, l2)?;
        Ok(AdmissibleData {
            i: i.clone(),
            j: j.clone(),
            l1,
            l2,
            labeling,
        })
    }

    pub fn a(&self) -> i64 {
        self.i.len() as i64
    }

    pub fn b(&self) -> i64 {
        self.j.len() as i64
    }

    pub fn c(&self) -> i64 {
        self.b() - self.a()
    }

    /// `(l1', l2', l3')` for this pair's `(a, c)`.
    pub fn primes(&self) -> (i64, i64, i64) {
        primed_labels(self.i.k, self.l1, self.a(), self.c())
    }
}

/// `(Ĩ, J̃)` for an `l1`-admissible pair. The identity when `l1 + c ≥ k`.
pub fn tilde_pair(i: &IndexSet, j: &IndexSet, l1: i64) -> Result<(IndexSet, IndexSet)> {
    let k = i.k;
    let lab = require_admissible(i, j, l1, k as i64)?;
    let (a, b) = (i.len(), j.len() as i64);
    let c = b - a as i64;
    if l1 + c >= k as i64 {
        return Ok((i.clone(), j.clone()));
    }
    let mut extra: Vec<usize> = (lab.t..=a).map(|x| lab.vp(x)).collect();
    if l1 + b < k as i64 {
        extra.extend(&lab.w);
    }
    let tilde_i = IndexSet::collect(k, i.members.iter().copied().chain(extra));
    let cut = lab.vp(a);
    let tilde_j = IndexSet::collect(k, j.members.iter().copied().filter(|&v| v < cut));
    Ok((tilde_i, tilde_j))
}

/// Why `(Ĩ, J̃)` fails the image conditions for `(a, c)`, if it does.
fn tilde_failure(ti: &IndexSet, tj: &IndexSet, l1: i64, a: usize) -> Option<String> {
    let k = ti.k;
    if ti.len() <= a {
        return Some(format!("|Ĩ| = {} leaves no u_(a+1) for a = {a}", ti.len()));
    }
    let next = ti.nth(a + 1);
    if (next as i64) < l1 + 1 {
        return Some(format!("u_(a+1) = {next} < l1 + 1"));
    }
    let expected_b = a as i64 + next as i64 - l1 - 1;
    if tj.len() as i64 != expected_b {
        return Some(format!("|J̃| = {} but a + u_(a+1) - l1 - 1 = {expected_b}", tj.len()));
    }
    if tj.members.last().is_some_and(|&v| v >= next) {
        return Some("max J̃ is not below u_(a+1)".into());
    }
    if a > 0 && tj.nth(a) as i64 > l1 {
        return Some("v_a > l1".into());
    }
    if (1..=a).any(|x| tj.nth(x) > ti.nth(x)) {
        return Some("v_i <= u_i fails".into());
    }
    debug_assert_eq!(tj.k, k);
    None
}

/// Whether `(Ĩ, J̃)` lies in the image of [`tilde_pair`] for cardinalities
/// `|I| = a`, `|J| = a + c` with `l1 + c < k`.
pub fn is_tilde_image(ti: &IndexSet, tj: &IndexSet, l1: i64, a: usize, c: i64) -> bool {
    let k = ti.k as i64;
    l1 + c < k && ti.len() as i64 == a as i64 + k - l1 - c && tilde_failure(ti, tj, l1, a).is_none()
}

/// Inverse of [`tilde_pair`] for pairs with `|J| - |I| = c`:
/// `I = {u_1,…,u_a}`, `J = J̃ ⊔ ([u_{a+1}, k] \ Ĩ)`. The identity when
/// `l1 + c ≥ k`.
pub fn untilde_pair(ti: &IndexSet, tj: &IndexSet, l1: i64, c: i64) -> Result<(IndexSet, IndexSet)> {
    let k = ti.k;
    if l1 + c >= k as i64 {
        return Ok((ti.clone(), tj.clone()));
    }
    if c < 0 {
        return Err(Error::Precondition(format!("c = {c} is negative")));
    }
    let extra = k as i64 - l1 - c;
    let a = ti.len() as i64 - extra;
    if a < 0 {
        return Err(Error::Precondition(format!(
            "|Ĩ| = {} is smaller than k - l1 - c = {extra}",
            ti.len()
        )));
    }
    let a = a as usize;
    if let Some(reason) = tilde_failure(ti, tj, l1, a) {
        return Err(Error::Precondition(reason));
    }
    let next = ti.nth(a + 1);
    let i = IndexSet::collect(k, ti.members[..a].iter().copied());
    let tail = IndexSet::interval(k, next as i64, k as i64).difference(ti);
    Ok((i, tj.union(&tail)))
}

/// The minimal `J` (in the `κ` order) with `|J| = a + c`, `(I, J)`
/// `l1`-admissible, and, when `l1 + c < k`, `Ĩ(I, J)` equal to `tilde_i`.
pub fn j_min(i: &IndexSet, c: i64, l1: i64, tilde_i: Option<&IndexSet>) -> Result<IndexSet> {
    let k = i.k;
    let a = i.len();
    if c < 0 {
        return Err(Error::Precondition(format!("c = {c} is negative")));
    }
    if l1 + c >= k as i64 {
        let b = a as i64 + c;
        if b > k as i64 {
            return Err(Error::Precondition(format!("a + c = {b} exceeds k")));
        }
        let head = (1..=a).map(|x| (i.nth(x) as i64).min(k as i64 - b + x as i64) as usize);
        let tail = IndexSet::interval(k, k as i64 - c + 1, k as i64);
        return Ok(IndexSet::collect(k, head.chain(tail.members)));
    }
    let ti = tilde_i.ok_or_else(|| Error::Precondition("l1 + c < k requires the tilde set Ĩ".into()))?;
    if ti.len() as i64 != a as i64 + k as i64 - l1 - c || ti.members[..a.min(ti.len())] != i.members[..] {
        return Err(Error::Precondition(format!(
            "Ĩ = {ti} is inconsistent with I = {i}, c = {c}, l1 = {l1}"
        )));
    }
    let next = ti.nth(a + 1);
    if (next as i64) < l1 + 1 {
        return Err(Error::Precondition(format!("u_(a+1) = {next} < l1 + 1")));
    }
    let head = (1..=a).map(|x| (i.nth(x) as i64).min(l1 - a as i64 + x as i64) as usize);
    let mid = IndexSet::interval(k, l1 + 1, next as i64 - 1);
    let tail = IndexSet::interval(k, next as i64, k as i64).difference(ti);
    Ok(IndexSet::collect(k, head.chain(mid.members).chain(tail.members)))
}

/// `I_max(J) = {v_1, …, v_min(l3, p)}`.
pub fn i_max(j: &IndexSet, l1: i64, l3: i64) -> IndexSet {
    let p = label_complement(j, l1).p;
    let top = (l3.max(0) as usize).min(p);
    IndexSet::collect(j.k, j.members[..top].iter().copied())
}

/// `ρ(I,J) = Σ_{i≤a} (κ(v_i) - κ(u_i)) + Σ_{a<i≤p} (κ(v_i) - κ(v'_i))`.
pub fn rho(i: &IndexSet, j: &IndexSet, l1: i64) -> Result<KVector> {
    let k = i.k;
    let lab = require_admissible(i, j, l1, k as i64)?;
    let a = i.len();
    let plus = kappa_of(k, j.members[..lab.p].iter().copied());
    let minus = kappa_of(k, i.members.iter().copied().chain((a + 1..=lab.p).map(|x| lab.vp(x))));
    Ok(&plus - &minus)
}

/// `σ(J) = κ[1, l2] - κ(J)`.
pub fn sigma(j: &IndexSet, l2: i64) -> Result<KVector> {
    if j.len() as i64 > l2 {
        return Err(Error::Precondition(format!("|J| = {} exceeds l2 = {l2}", j.len())));
    }
    Ok(&kappa_interval(j.k, 1, l2) - &kappa(j))
}

/// `Δr = κ(J) - 2κ(I) + κ[l1'+1, k] - κ[l1+1, k]`.
pub fn delta_r(i: &IndexSet, j: &IndexSet, l1: i64, _l2: i64) -> KVector {
    let k = i.k;
    let (a, c) = (i.len() as i64, j.len() as i64 - i.len() as i64);
    let (l1p, _, _) = primed_labels(k, l1, a, c);
    &(&(&kappa(j) - &kappa(i).scale(2)) + &kappa_interval(k, l1p + 1, k as i64)) - &kappa_interval(k, l1 + 1, k as i64)
}

/// `Δs = κ(I) - 2κ(J) + κ[1, l2] + κ[l2'+1, k]`.
pub fn delta_s(i: &IndexSet, j: &IndexSet, l1: i64, l2: i64) -> KVector {
    let k = i.k;
    let (a, c) = (i.len() as i64, j.len() as i64 - i.len() as i64);
    let (_, l2p, _) = primed_labels(k, l1, a, c);
    &(&(&kappa(i) - &kappa(j).scale(2)) + &kappa_interval(k, 1, l2)) + &kappa_interval(k, l2p + 1, k as i64)
}

/// `ρ'(I,J) = κ(Ĩ) - κ[l1'+1, k]`.
pub fn rho_prime(i: &IndexSet, j: &IndexSet, l1: i64) -> Result<KVector> {
    let k = i.k;
    let (ti, _) = tilde_pair(i, j, l1)?;
    let (l1p, _, _) = primed_labels(k, l1, i.len() as i64, j.len() as i64 - i.len() as i64);
    Ok(&kappa(&ti) - &kappa_interval(k, l1p + 1, k as i64))
}

/// `σ'(I,J) = κ(J) - κ(I) - κ[l2'+1, k]`.
pub fn sigma_prime(i: &IndexSet, j: &IndexSet, l1: i64) -> Result<KVector> {
    let k = i.k;
    require_admissible(i, j, l1, k as i64)?;
    let (_, l2p, _) = primed_labels(k, l1, i.len() as i64, j.len() as i64 - i.len() as i64);
    Ok(&(&kappa(j) - &kappa(i)) - &kappa_interval(k, l2p + 1, k as i64))
}

/// Closed form of `σ'(I, J_min)`: `(κ[k-b+1, k-c] - κ(I))⁺` when
/// `l1 + c ≥ k`, `(κ[l1-a+1, k-c] - κ(Ĩ))⁺` otherwise.
pub fn sigma_prime_at_min(i: &IndexSet, c: i64, l1: i64, tilde_i: Option<&IndexSet>) -> Result<KVector> {
    let k = i.k as i64;
    let a = i.len() as i64;
    if l1 + c >= k {
        let b = a + c;
        Ok((&kappa_interval(i.k, k - b + 1, k - c) - &kappa(i)).pos())
    } else {
        let ti = tilde_i.ok_or_else(|| Error::Precondition("missing Ĩ".into()))?;
        Ok((&kappa_interval(i.k, l1 - a + 1, k - c) - &kappa(ti)).pos())
    }
}
