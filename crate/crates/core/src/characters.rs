//! Graded characters: Gaussian binomials, the degree of a rigged pair, the
//! brute-force character of a rigged set, the fermionic sum, the
//! character recursion and the ŝl₂ coinvariant character.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::params::pos;
use crate::report::{Check, Failure, Point, Report, TermCount};
use crate::riggedsets::{enumerate_partitions, enumerate_total, weight_bounds, RiggedSet};
use crate::vacancy::{boundary_ok, vacancy_p, vacancy_q};
use crate::{Error, LaurentPoly, Params, Partition, Result, RiggedPair};

/// Images for `(z1, z2, q) ↦ (q^{-2} z², z^{-2}, q)`, with `z` on the
/// first axis.
const SL2_IMAGES: [[i64; 3]; 3] = [[2, 0, -2], [-2, 0, 0], [0, 0, 1]];

/// Variable names for printing ŝl₂ characters.
pub const SL2_NAMES: [&str; 3] = ["z", "z2", "q"];

fn gauss_cache() -> &'static Mutex<HashMap<(i64, i64), LaurentPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<(i64, i64), LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The Gaussian binomial `[m choose n]` in `q`; zero when `m < n`.
///
/// Computed with the q-Pascal rule `[m n] = [m-1 n-1] + q^n [m-1 n]`,
/// memoized across calls.
pub fn gauss_binomial(m: i64, n: i64) -> LaurentPoly {
    assert!(n >= 0, "lower index of a Gaussian binomial must be non-negative");
    if m < n {
        return LaurentPoly::zero();
    }
    if n == 0 || n == m {
        return LaurentPoly::one();
    }
    if let Some(hit) = gauss_cache().lock().unwrap().get(&(m, n)) {
        return hit.clone();
    }
    let value = &gauss_binomial(m - 1, n - 1) + &gauss_binomial(m - 1, n).shift([0, 0, n]);
    gauss_cache().lock().unwrap().insert((m, n), value.clone());
    value
}

/// `(q; q)_m = ∏_{i=1}^{m} (1 - q^i)`.
fn q_pochhammer(m: i64) -> LaurentPoly {
    (1..=m).fold(LaurentPoly::one(), |acc, i| {
        &acc * &(&LaurentPoly::one() - &LaurentPoly::monomial(1, [0, 0, i]))
    })
}

/// The Gaussian binomial from the product formula
/// `(q;q)_m / ((q;q)_n (q;q)_{m-n})`, by exact division.
pub fn gauss_binomial_by_division(m: i64, n: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::Precondition("n must be non-negative".into()));
    }
    if m < n {
        return Ok(LaurentPoly::zero());
    }
    q_pochhammer(m).div_exact_q(&(&q_pochhammer(n) * &q_pochhammer(m - n)))
}

/// `D_{μ,ν}[l1,l2] = Σ (α-l1)⁺ m_α(μ) + Σ (α-l2)⁺ m_α(ν)
///   + Σ_{α,β} min(α,β) (m_α(μ)m_β(μ) + m_α(ν)m_β(ν) - m_α(μ)m_β(ν))`.
pub fn degree_d(mu: &Partition, nu: &Partition, l1: i64, l2: i64) -> i64 {
    let k = mu.k();
    assert_eq!(k, nu.k(), "partitions of different level");
    let m = |a: usize| mu.m(a) as i64;
    let n = |a: usize| nu.m(a) as i64;
    let mut d = 0;
    for a in 1..=k {
        let ai = a as i64;
        d += pos(ai - l1) * m(a) + pos(ai - l2) * n(a);
        for b in 1..=k {
            let min = ai.min(b as i64);
            d += min * (m(a) * m(b) + n(a) * n(b) - m(a) * n(b));
        }
    }
    d
}

/// `d(μ,r;ν,s) = D_{μ,ν}[l1,l2] + Σ r + Σ s`.
pub fn rig_degree(x: &RiggedPair, l1: i64, l2: i64) -> i64 {
    degree_d(&x.mu, &x.nu, l1, l2) + x.r.total() + x.s.total()
}

/// `Σ_{x ∈ set} z1^m z2^n q^{d(x)}`.
pub fn char_of_set(set: &RiggedSet) -> LaurentPoly {
    let (l1, l2) = (set.params.l1(), set.params.l2());
    let mut out = LaurentPoly::zero();
    for x in &set.elements {
        out.add_term([set.m, set.n, rig_degree(x, l1, l2)], 1.into());
    }
    out
}

/// Brute-force character of `R^{(M,N)}[l1,l2,l3]`, summed over the
/// enumerated set.
pub fn char_r(p: &Params) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for set in enumerate_total(p).values() {
        out += &char_of_set(set);
    }
    out
}

/// The fermionic sum
/// `Σ_{μ,ν} z1^{|μ|} z2^{|ν|} q^{D_{μ,ν}} ∏_α [P_α + m_α, m_α] ∏_α [Q_α + n_α, n_α]`.
///
/// Zero when `l1 < 0` or `l2 < 0`. The sum runs over the same weight range
/// as the enumeration of the rigged sets.
pub fn fermionic_char(k: usize, l1: i64, l2: i64, cutoff_m: i64, cutoff_n: i64) -> Result<LaurentPoly> {
    if l1 < 0 || l2 < 0 {
        return Ok(LaurentPoly::zero());
    }
    let p = Params::unrestricted(k, l1, l2, cutoff_m, cutoff_n)?;
    let (max_m, max_n) = weight_bounds(&p);
    let mut out = LaurentPoly::zero();
    for m in 0..=max_m {
        let mus = enumerate_partitions(m, k);
        for n in 0..=max_n {
            for mu in &mus {
                for nu in enumerate_partitions(n, k) {
                    if !boundary_ok(&p, mu, &nu) {
                        continue;
                    }
                    let pv = vacancy_p(mu, &nu, cutoff_m, l1);
                    let qv = vacancy_q(mu, &nu, cutoff_n, l2);
                    let mut term = LaurentPoly::monomial(1, [m, n, degree_d(mu, &nu, l1, l2)]);
                    for a in 1..=k {
                        let (ma, na) = (mu.m(a) as i64, nu.m(a) as i64);
                        term = &term * &gauss_binomial(pv[a] + ma, ma);
                        term = &term * &gauss_binomial(qv[a] + na, na);
                        if term.is_zero() {
                            break;
                        }
                    }
                    out += &term;
                }
            }
        }
    }
    Ok(out)
}

/// Compares `χ^{(M,N)}[l1,l2,l3]` with
/// `Σ_{a ≤ l3, c ≤ l2-a} z1^a z2^{a+c} q^{a+c} χ^{(M,N-1)}[l1',l2',l3'](z1, q z2, q)`,
/// both sides computed from the enumerated sets.
pub fn char_recursion_check(p: &Params) -> Result<Report> {
    if p.cutoff_n() < 1 {
        return Err(Error::Precondition("the character recursion needs N >= 1".into()));
    }
    let lhs = char_r(p);
    let mut rhs = LaurentPoly::zero();
    let mut terms = Vec::new();
    let twist = [[1, 0, 0], [0, 1, 1], [0, 0, 1]];
    for a in 0..=p.l3() {
        for c in 0..=(p.l2() - a) {
            let q = p.recursion_term(a, c)?;
            let term = char_r(&q).substitute_monomial(twist).shift([a, a + c, a + c]);
            terms.push(TermCount::poly(a, c, &q, &term));
            rhs += &term;
        }
    }
    let passed = lhs == rhs;
    let failure = (!passed).then(|| Failure::Polynomial {
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        difference: (&lhs - &rhs).to_string(),
    });
    Ok(Report {
        check: Check::CharRecursion,
        point: Point::of(p),
        passed,
        examined: lhs.len(),
        terms,
        failure,
    })
}

/// Compares [`fermionic_char`] with the brute-force [`char_r`] at
/// `l3 = min(l1, l2)`.
pub fn fermionic_check(k: usize, l1: i64, l2: i64, cutoff_m: i64, cutoff_n: i64) -> Result<Report> {
    let p = Params::unrestricted(k, l1, l2, cutoff_m, cutoff_n)?;
    let fermionic = fermionic_char(k, l1, l2, cutoff_m, cutoff_n)?;
    let brute = char_r(&p);
    let passed = fermionic == brute;
    let failure = (!passed).then(|| Failure::Polynomial {
        lhs: fermionic.to_string(),
        rhs: brute.to_string(),
        difference: (&fermionic - &brute).to_string(),
    });
    Ok(Report {
        check: Check::Fermionic,
        point: Point::of(&p),
        passed,
        examined: brute.len(),
        terms: Vec::new(),
        failure,
    })
}

/// The character of the ŝl₂ coinvariant `L_{k,l}/a^{(M,N)} L_{k,l}` in
/// `(z, q)`, with `z` carried on the first axis:
/// `z^{-l} (χ^{(M+1,N)}[l, k-l] - q χ^{(M+1,N)}[l-1, k-l-1])` evaluated at
/// `(q^{-2} z², z^{-2}, q)`.
pub fn sl2_char(k: usize, l: i64, cutoff_m: i64, cutoff_n: i64) -> Result<LaurentPoly> {
    let ki = k as i64;
    if k == 0 || !(0..=ki).contains(&l) || cutoff_m < 0 || cutoff_n < 0 {
        return Err(Error::InvalidParams(format!(
            "sl2 character needs k >= 1, 0 <= l <= k, M, N >= 0 (k={k}, l={l}, M={cutoff_m}, N={cutoff_n})"
        )));
    }
    let first = fermionic_char(k, l, ki - l, cutoff_m + 1, cutoff_n)?;
    let second = fermionic_char(k, l - 1, ki - l - 1, cutoff_m + 1, cutoff_n)?.shift([0, 0, 1]);
    let out = (&first - &second).substitute_monomial(SL2_IMAGES).shift([-l, 0, 0]);
    if !out.is_free_of(1) {
        return Err(Error::Inconsistent(
            "ŝl₂ character has a nonzero second variable".into(),
        ));
    }
    Ok(out)
}
