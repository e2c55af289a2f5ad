//! Lower and upper subsets and the map `m_{I,J}` between them.
//!
//! For an admissible pair `(I, J)` with `|I| = a`, `|J| = b = a + c`, the
//! lower subset `R^{(M,N)}_{m,n}[l1,l2]_{I,J}` and the upper subset
//! `R^{(M,N-1)}_{m-a,n-b}[l1]^{I,J}` are cut out of the full cutoff sets by
//! bounds on the bottom riggings. [`map_m`] sends the upper subset onto the
//! lower one and [`map_m_inverse`] undoes it.

pub mod verify;

use crate::admissible::{delta_r, delta_s, epsilon, is_admissible, rho, rho_prime, sigma, sigma_prime};
use crate::params::primed_labels;
use crate::riggedsets::in_cutoff_set;
use crate::{Bottom, Error, IndexSet, KVector, Params, Partition, Result, RiggedPair, Rigging};

/// A bound on bottom riggings: `value[α]` with `marked[α-1]` meaning the
/// bound must hold with equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedBound {
    pub value: KVector,
    pub marked: Vec<bool>,
}

impl MarkedBound {
    /// Marks every `α` where `eps[α] == sign`.
    pub fn new(value: KVector, eps: &KVector, sign: i64) -> Self {
        let marked = eps.as_slice().iter().map(|&e| e == sign).collect();
        MarkedBound { value, marked }
    }

    pub fn is_marked(&self, alpha: usize) -> bool {
        self.marked[alpha - 1]
    }

    /// Whether the bottom rigging `b` of rows of length `alpha` satisfies
    /// the bound. `∞` satisfies every inequality and no equality.
    pub fn admits(&self, alpha: usize, b: Bottom) -> bool {
        if self.is_marked(alpha) {
            b.equals(self.value[alpha])
        } else {
            b.at_least(self.value[alpha])
        }
    }

    pub fn admits_all(&self, rig: &Rigging) -> bool {
        (1..=self.value.k()).all(|a| self.admits(a, rig.last(a)))
    }
}

/// `(ρ, σ)` bounds of the lower subset, marked where `ε = 1`.
pub fn lower_bounds(i: &IndexSet, j: &IndexSet, l1: i64, l2: i64) -> Result<(MarkedBound, MarkedBound)> {
    Ok((
        MarkedBound::new(rho(i, j, l1)?, &epsilon(i), 1),
        MarkedBound::new(sigma(j, l2)?, &epsilon(j), 1),
    ))
}

/// `(ρ', σ')` bounds of the upper subset, marked where `ε = -1`.
pub fn upper_bounds(i: &IndexSet, j: &IndexSet, l1: i64) -> Result<(MarkedBound, MarkedBound)> {
    Ok((
        MarkedBound::new(rho_prime(i, j, l1)?, &epsilon(i), -1),
        MarkedBound::new(sigma_prime(i, j, l1)?, &epsilon(j), -1),
    ))
}

/// Parameters of the set the upper subset lives in: primed labels and
/// cutoffs `(M, N_upper)`.
pub fn upper_params(i: &IndexSet, j: &IndexSet, l1: i64, cutoff_m: i64, cutoff_n_upper: i64) -> Result<Params> {
    let (a, b) = (i.len() as i64, j.len() as i64);
    let (l1p, l2p, l3p) = primed_labels(i.k(), l1, a, b - a);
    Params::new(i.k(), l1p, l2p, l3p, cutoff_m, cutoff_n_upper)
}

/// Membership in `R^{(M,N)}_{m,n}[l1,l2]_{I,J}`, where `(m, n)` are the
/// weights of `x`. False unless `(I, J)` is `(l1,l2)`-admissible. The `l3`
/// of `p` is ignored.
pub fn lower_member(x: &RiggedPair, i: &IndexSet, j: &IndexSet, p: &Params) -> bool {
    if x.k() != p.k() || i.k() != p.k() || j.k() != p.k() || !is_admissible(i, j, p.l1(), p.l2()) {
        return false;
    }
    let Ok((rb, sb)) = lower_bounds(i, j, p.l1(), p.l2()) else {
        return false;
    };
    rb.admits_all(&x.r) && sb.admits_all(&x.s) && in_cutoff_set(x, p)
}

/// Membership in `R^{(M,N-1)}_{m',n'}[l1]^{I,J}`, with the cutoffs of the
/// upper set given directly. False unless `(I, J)` is `l1`-admissible.
pub fn upper_member(x: &RiggedPair, i: &IndexSet, j: &IndexSet, l1: i64, cutoff_m: i64, cutoff_n_upper: i64) -> bool {
    let k = x.k();
    if i.k() != k || j.k() != k || !(0..=k as i64).contains(&l1) || !is_admissible(i, j, l1, k as i64) {
        return false;
    }
    let (Ok((rb, sb)), Ok(up)) = (upper_bounds(i, j, l1), upper_params(i, j, l1, cutoff_m, cutoff_n_upper)) else {
        return false;
    };
    rb.admits_all(&x.r) && sb.admits_all(&x.s) && in_cutoff_set(x, &up)
}

/// Applies `ε` to the multiplicities, shifts every surviving row by
/// `delta`, drops the bottom row where `ε = -1` and appends `bottom[α]`
/// where `ε = 1`.
fn transform(
    part: &Partition,
    rig: &Rigging,
    eps: &KVector,
    delta: &KVector,
    bottom: &KVector,
) -> Option<(Partition, Rigging)> {
    let new_part = part.shifted(eps)?;
    let rows = (1..=part.k())
        .map(|a| {
            let mut row: Vec<i64> = rig.row(a).iter().map(|&v| v + delta[a]).collect();
            match eps[a] {
                -1 => {
                    row.pop();
                }
                1 => row.push(bottom[a]),
                _ => {}
            }
            row
        })
        .collect();
    Some((new_part, Rigging::new(rows).ok()?))
}

/// `m_{I,J}`: sends an element of the upper subset (cutoffs `(M, N-1)`) to
/// the lower subset at cutoffs `(M, N)` with labels `(l1, l2)` from `p`.
///
/// The result is checked against [`lower_member`]; a mismatch is reported
/// as [`Error::Inconsistent`] rather than returned.
pub fn map_m(x: &RiggedPair, i: &IndexSet, j: &IndexSet, p: &Params) -> Result<RiggedPair> {
    let (l1, l2) = (p.l1(), p.l2());
    if p.cutoff_n() < 1 {
        return Err(Error::Precondition("the map needs N >= 1".into()));
    }
    if !is_admissible(i, j, l1, l2) {
        return Err(Error::NotAdmissible {
            i: i.to_string(),
            j: j.to_string(),
            reason: format!("not ({l1},{l2})-admissible"),
        });
    }
    if !upper_member(x, i, j, l1, p.cutoff_m(), p.cutoff_n() - 1) {
        return Err(Error::Precondition(format!(
            "{x} is not in the upper subset of ({i}, {j})"
        )));
    }
    let mismatch = |what: &str| Error::Inconsistent(format!("m_({i},{j}) of {x}: {what}"));
    let (mu, r) = transform(&x.mu, &x.r, &epsilon(i), &delta_r(i, j, l1, l2), &rho(i, j, l1)?)
        .ok_or_else(|| mismatch("μ side is malformed"))?;
    let (nu, s) = transform(&x.nu, &x.s, &epsilon(j), &delta_s(i, j, l1, l2), &sigma(j, l2)?)
        .ok_or_else(|| mismatch("ν side is malformed"))?;
    let y = RiggedPair { mu, nu, r, s };
    if !lower_member(&y, i, j, p) {
        return Err(mismatch(&format!("image {y} is not in the lower subset")));
    }
    Ok(y)
}

/// Inverse of [`map_m`]: sends an element of the lower subset back to the
/// upper subset, checked against [`upper_member`].
pub fn map_m_inverse(y: &RiggedPair, i: &IndexSet, j: &IndexSet, p: &Params) -> Result<RiggedPair> {
    let (l1, l2) = (p.l1(), p.l2());
    if p.cutoff_n() < 1 {
        return Err(Error::Precondition("the map needs N >= 1".into()));
    }
    if !lower_member(y, i, j, p) {
        return Err(Error::Precondition(format!(
            "{y} is not in the lower subset of ({i}, {j})"
        )));
    }
    let mismatch = |what: &str| Error::Inconsistent(format!("inverse m_({i},{j}) of {y}: {what}"));
    let (mu, r) = transform(
        &y.mu,
        &y.r,
        &-&epsilon(i),
        &-&delta_r(i, j, l1, l2),
        &rho_prime(i, j, l1)?,
    )
    .ok_or_else(|| mismatch("μ side is malformed"))?;
    let (nu, s) = transform(
        &y.nu,
        &y.s,
        &-&epsilon(j),
        &-&delta_s(i, j, l1, l2),
        &sigma_prime(i, j, l1)?,
    )
    .ok_or_else(|| mismatch("ν side is malformed"))?;
    let x = RiggedPair { mu, nu, r, s };
    if !upper_member(&x, i, j, l1, p.cutoff_m(), p.cutoff_n() - 1) {
        return Err(mismatch(&format!("preimage {x} is not in the upper subset")));
    }
    Ok(x)
}
