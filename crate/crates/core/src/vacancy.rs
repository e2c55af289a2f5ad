//! Vacancy numbers and the boundary conditions at zero cutoff.

use crate::params::pos;
use crate::{KVector, Params, Partition};

/// `P^{(M)}_{μ,ν}[l]_α = αM - (α-l)⁺ + Σ_β min(α,β)(m_β(ν) - 2 m_β(μ))`.
pub fn vacancy_p(mu: &Partition, nu: &Partition, cutoff: i64, l: i64) -> KVector {
    let k = mu.k();
    assert_eq!(k, nu.k(), "partitions of different level");
    KVector::from_fn(k, |alpha| {
        let a = alpha as i64;
        let coupling: i64 = (1..=k)
            .map(|beta| a.min(beta as i64) * (nu.m(beta) as i64 - 2 * mu.m(beta) as i64))
            .sum();
        a * cutoff - pos(a - l) + coupling
    })
}

/// `Q^{(N)}_{μ,ν}[l] = P^{(N)}_{ν,μ}[l]`.
pub fn vacancy_q(mu: &Partition, nu: &Partition, cutoff: i64, l: i64) -> KVector {
    vacancy_p(nu, mu, cutoff, l)
}

/// `(M > 0 or n - 2m ≥ k - l1) and (N > 0 or m - 2n ≥ k - l2)` with
/// `m = |μ|`, `n = |ν|`.
///
/// Given the upper bounds on the riggings, this is equivalent to
/// `P, Q ≥ 0`: the componentwise conditions reduce to `α = k`, and those
/// are automatic when the cutoff is positive.
pub fn boundary_ok(p: &Params, mu: &Partition, nu: &Partition) -> bool {
    let k = p.k() as i64;
    let (m, n) = (mu.weight(), nu.weight());
    (p.cutoff_m() > 0 || n - 2 * m >= k - p.l1()) && (p.cutoff_n() > 0 || m - 2 * n >= k - p.l2())
}
