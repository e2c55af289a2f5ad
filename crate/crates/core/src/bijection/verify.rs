//! Exhaustive verifiers for the recursion, the two decompositions and the
//! bijection. Every verifier returns a [`Report`]; a failed report carries
//! the first counterexample found in canonical order.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{lower_bounds, lower_member, map_m, map_m_inverse, upper_bounds, upper_member, upper_params};
use crate::admissible::{is_admissible, rho, rho_prime, sigma, sigma_prime};
use crate::characters::rig_degree;
use crate::json::{ElementDoc, PairDoc};
use crate::report::{Check, Failure, Point, Report, TermCount};
use crate::riggedsets::{enumerate_r_shifted, satisfies_tau, RiggedSet};
use crate::vacancy::{vacancy_p, vacancy_q};
use crate::{Error, IndexSet, LaurentPoly, Params, Result, RiggedPair};

type CacheMap = HashMap<(Params, i64, i64, i64), Arc<RiggedSet>>;

/// Memoized rigged sets, keyed by parameters, weights and `τ` shift.
/// Cheap to clone and safe to share between threads.
#[derive(Debug, Clone, Default)]
pub struct SetCache {
    inner: Arc<Mutex<CacheMap>>,
}

impl SetCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, p: &Params, m: i64, n: i64) -> Arc<RiggedSet> {
        self.get_shifted(p, m, n, 0)
    }

    fn get_shifted(&self, p: &Params, m: i64, n: i64, shift: i64) -> Arc<RiggedSet> {
        let key = (*p, m, n, shift);
        if let Some(hit) = self.inner.lock().expect("cache poisoned").get(&key) {
            return Arc::clone(hit);
        }
        let set = Arc::new(enumerate_r_shifted(p, m, n, shift));
        self.inner
            .lock()
            .expect("cache poisoned")
            .entry(key)
            .or_insert(set)
            .clone()
    }
}

fn unrestricted(p: &Params) -> Params {
    p.with_l3(p.l1().min(p.l2())).expect("l3 = min(l1, l2) is always legal")
}

fn report(check: Check, point: Point, examined: usize, terms: Vec<TermCount>, failure: Option<Failure>) -> Report {
    Report {
        check,
        point,
        passed: failure.is_none(),
        examined,
        terms,
        failure,
    }
}

/// `|R^{(M,N)}_{m,n}[l1,l2,l3]|` against
/// `Σ_{a ≤ l3, c ≤ l2-a} |R^{(M,N-1)}_{m-a,n-a-c}[l1',l2',l3']|`.
pub fn verify_recursion(p: &Params, m: i64, n: i64) -> Result<Report> {
    verify_recursion_cached(p, m, n, &SetCache::new())
}

pub fn verify_recursion_cached(p: &Params, m: i64, n: i64, cache: &SetCache) -> Result<Report> {
    recursion_impl(p, m, n, cache, 0)
}

/// [`verify_recursion`] with the `τ` bound of the left-hand side raised by
/// `tau_shift`. Only for fault-injection tests.
#[doc(hidden)]
pub fn verify_recursion_faulty(p: &Params, m: i64, n: i64, tau_shift: i64, cache: &SetCache) -> Result<Report> {
    recursion_impl(p, m, n, cache, tau_shift)
}

fn recursion_impl(p: &Params, m: i64, n: i64, cache: &SetCache, shift: i64) -> Result<Report> {
    if p.cutoff_n() < 1 {
        return Err(Error::Precondition("the recursion needs N >= 1".into()));
    }
    let lhs = cache.get_shifted(p, m, n, shift).len();
    let mut rhs = 0;
    let mut terms = Vec::new();
    for a in 0..=p.l3() {
        for c in 0..=(p.l2() - a) {
            let q = p.recursion_term(a, c)?;
            let count = cache.get(&q, m - a, n - a - c).len();
            rhs += count;
            terms.push(TermCount::count(a, c, &q, count));
        }
    }
    let failure = (lhs != rhs).then_some(Failure::Cardinality { lhs, rhs });
    Ok(report(Check::Recursion, Point::at(p, m, n), lhs, terms, failure))
}

/// Every `(l1,l2)`-admissible pair with `|I| ≤ l3`, `|J| ≤ l2`, in
/// `(I, J)` order of [`IndexSet::all`].
pub fn lower_pairs(p: &Params) -> Vec<(IndexSet, IndexSet)> {
    let all = IndexSet::all(p.k());
    let mut out = Vec::new();
    for i in all.iter().filter(|i| i.len() as i64 <= p.l3()) {
        for j in all.iter().filter(|j| j.len() as i64 <= p.l2()) {
            if is_admissible(i, j, p.l1(), p.l2()) {
                out.push((i.clone(), j.clone()));
            }
        }
    }
    out
}

/// Every `l1`-admissible pair with `|I| = a`, `|J| = a + c`.
pub fn upper_pairs(k: usize, l1: i64, a: i64, c: i64) -> Vec<(IndexSet, IndexSet)> {
    let all = IndexSet::all(k);
    let mut out = Vec::new();
    for i in all.iter().filter(|i| i.len() as i64 == a) {
        for j in all.iter().filter(|j| j.len() as i64 == a + c) {
            if is_admissible(i, j, l1, k as i64) {
                out.push((i.clone(), j.clone()));
            }
        }
    }
    out
}

fn bound_failure(
    x: &RiggedPair,
    pair: (&IndexSet, &IndexSet),
    bounds: (crate::KVector, crate::KVector),
    vacancies: (crate::KVector, crate::KVector),
    l1: i64,
    l2: i64,
) -> Option<Failure> {
    let (rb, sb) = bounds;
    let (pv, qv) = vacancies;
    (!rb.le(&pv) || !sb.le(&qv)).then(|| Failure::Bound {
        element: ElementDoc::new(x, l1, l2),
        pair: PairDoc::new(pair.0, pair.1),
        detail: format!("bounds ({rb}, {sb}) exceed vacancy numbers ({pv}, {qv})"),
    })
}

/// Checks that `R^{(M,N)}_{m,n}[l1,l2,l3]` is the disjoint union of the
/// lower subsets over `|I| ≤ l3`, `|J| ≤ l2`, and that every element of a
/// lower subset obeys `ρ ≤ P`, `σ ≤ Q`. The bound check needs `N ≥ 1`
/// and is skipped at `N = 0`.
///
/// Scans the whole of `R^{(M,N)}_{m,n}[l1,l2]`, so elements outside the
/// `l3` set that a lower subset wrongly covers are caught as well.
pub fn verify_lower_decomposition(p: &Params, m: i64, n: i64) -> Result<Report> {
    verify_lower_decomposition_cached(p, m, n, &SetCache::new())
}

pub fn verify_lower_decomposition_cached(p: &Params, m: i64, n: i64, cache: &SetCache) -> Result<Report> {
    let (l1, l2) = (p.l1(), p.l2());
    let pairs = lower_pairs(p);
    let bounds: Vec<_> = pairs
        .iter()
        .map(|(i, j)| Ok((rho(i, j, l1)?, sigma(j, l2)?)))
        .collect::<Result<_>>()?;
    let superset = cache.get(&unrestricted(p), m, n);
    let point = Point::at(p, m, n);
    for x in &superset.elements {
        let covering: Vec<usize> = (0..pairs.len())
            .filter(|&idx| lower_member(x, &pairs[idx].0, &pairs[idx].1, p))
            .collect();
        let expected = usize::from(satisfies_tau(x, p));
        if covering.len() != expected {
            let failure = Failure::Coverage {
                element: ElementDoc::new(x, l1, l2),
                expected,
                covering_pairs: covering
                    .iter()
                    .map(|&idx| PairDoc::new(&pairs[idx].0, &pairs[idx].1))
                    .collect(),
            };
            return Ok(report(
                Check::LowerDecomposition,
                point,
                superset.len(),
                Vec::new(),
                Some(failure),
            ));
        }
        for &idx in covering.iter().filter(|_| p.cutoff_n() >= 1) {
            let vac = (
                vacancy_p(&x.mu, &x.nu, p.cutoff_m(), l1),
                vacancy_q(&x.mu, &x.nu, p.cutoff_n(), l2),
            );
            let (i, j) = &pairs[idx];
            if let Some(f) = bound_failure(x, (i, j), bounds[idx].clone(), vac, l1, l2) {
                return Ok(report(
                    Check::LowerDecomposition,
                    point,
                    superset.len(),
                    Vec::new(),
                    Some(f),
                ));
            }
        }
    }
    Ok(report(
        Check::LowerDecomposition,
        point,
        superset.len(),
        Vec::new(),
        None,
    ))
}

/// Checks that `R^{(M,N_upper)}_{m',n'}[l1',l2',l3']` is the disjoint union
/// of the upper subsets `R[l1]^{I,J}` over `|I| = a`, `|J| = a + c`, and
/// that every element of an upper subset obeys `ρ' ≤ P`, `σ' ≤ Q`.
#[allow(clippy::too_many_arguments)]
pub fn verify_upper_decomposition(
    k: usize,
    l1: i64,
    a: i64,
    c: i64,
    cutoff_m: i64,
    cutoff_n_upper: i64,
    m_up: i64,
    n_up: i64,
) -> Result<Report> {
    verify_upper_decomposition_cached(k, l1, a, c, cutoff_m, cutoff_n_upper, m_up, n_up, &SetCache::new())
}

#[allow(clippy::too_many_arguments)]
pub fn verify_upper_decomposition_cached(
    k: usize,
    l1: i64,
    a: i64,
    c: i64,
    cutoff_m: i64,
    cutoff_n_upper: i64,
    m_up: i64,
    n_up: i64,
    cache: &SetCache,
) -> Result<Report> {
    let ki = k as i64;
    if !(0 <= a && a <= l1 && l1 <= ki && 0 <= c && a + c <= ki) {
        return Err(Error::Precondition(format!(
            "need 0 <= a <= l1 <= k and 0 <= c, a + c <= k (k={k}, l1={l1}, a={a}, c={c})"
        )));
    }
    let (l1p, l2p, l3p) = crate::params::primed_labels(k, l1, a, c);
    let pp = Params::new(k, l1p, l2p, l3p, cutoff_m, cutoff_n_upper)?;
    let point = Point {
        l1: Some(l1),
        a: Some(a),
        c: Some(c),
        ..Point::at(&pp, m_up, n_up)
    };
    let pairs = upper_pairs(k, l1, a, c);
    let bounds: Vec<_> = pairs
        .iter()
        .map(|(i, j)| Ok((rho_prime(i, j, l1)?, sigma_prime(i, j, l1)?)))
        .collect::<Result<_>>()?;
    let superset = cache.get(&unrestricted(&pp), m_up, n_up);
    for x in &superset.elements {
        let covering: Vec<usize> = (0..pairs.len())
            .filter(|&idx| upper_member(x, &pairs[idx].0, &pairs[idx].1, l1, cutoff_m, cutoff_n_upper))
            .collect();
        let expected = usize::from(satisfies_tau(x, &pp));
        if covering.len() != expected {
            let failure = Failure::Coverage {
                element: ElementDoc::new(x, l1p, l2p),
                expected,
                covering_pairs: covering
                    .iter()
                    .map(|&idx| PairDoc::new(&pairs[idx].0, &pairs[idx].1))
                    .collect(),
            };
            return Ok(report(
                Check::UpperDecomposition,
                point,
                superset.len(),
                Vec::new(),
                Some(failure),
            ));
        }
        for &idx in &covering {
            let vac = (
                vacancy_p(&x.mu, &x.nu, cutoff_m, l1p),
                vacancy_q(&x.mu, &x.nu, cutoff_n_upper, l2p),
            );
            let (i, j) = &pairs[idx];
            if let Some(f) = bound_failure(x, (i, j), bounds[idx].clone(), vac, l1p, l2p) {
                return Ok(report(
                    Check::UpperDecomposition,
                    point,
                    superset.len(),
                    Vec::new(),
                    Some(f),
                ));
            }
        }
    }
    Ok(report(
        Check::UpperDecomposition,
        point,
        superset.len(),
        Vec::new(),
        None,
    ))
}

/// The upper subset of `(I, J)` mapping into weights `(m, n)` at cutoffs
/// `(M, N)`, and the lower subset at `(m, n)`, both in canonical order.
pub fn subsets(
    p: &Params,
    i: &IndexSet,
    j: &IndexSet,
    m: i64,
    n: i64,
    cache: &SetCache,
) -> Result<(Vec<RiggedPair>, Vec<RiggedPair>)> {
    if p.cutoff_n() < 1 {
        return Err(Error::Precondition("upper subsets need N >= 1".into()));
    }
    let (a, b) = (i.len() as i64, j.len() as i64);
    let up = upper_params(i, j, p.l1(), p.cutoff_m(), p.cutoff_n() - 1)?;
    let upper = cache
        .get(&unrestricted(&up), m - a, n - b)
        .elements
        .iter()
        .filter(|x| upper_member(x, i, j, p.l1(), p.cutoff_m(), p.cutoff_n() - 1))
        .cloned()
        .collect();
    let lower = cache
        .get(&unrestricted(p), m, n)
        .elements
        .iter()
        .filter(|x| lower_member(x, i, j, p))
        .cloned()
        .collect();
    Ok((upper, lower))
}

/// Every `(l1,l2)`-admissible pair, without the `|I| ≤ l3` restriction.
pub fn admissible_pairs(p: &Params) -> Vec<(IndexSet, IndexSet)> {
    let all = IndexSet::all(p.k());
    let mut out = Vec::new();
    for i in &all {
        for j in &all {
            if is_admissible(i, j, p.l1(), p.l2()) {
                out.push((i.clone(), j.clone()));
            }
        }
    }
    out
}

/// For every `(l1,l2)`-admissible pair, checks that `m_{I,J}` is defined
/// on the whole upper subset, injective, has image exactly the lower subset
/// at weights `(m, n)`, and that the inverse map round-trips.
pub fn verify_bijection(p: &Params, m: i64, n: i64) -> Result<Report> {
    verify_bijection_cached(p, m, n, &SetCache::new())
}

pub fn verify_bijection_cached(p: &Params, m: i64, n: i64, cache: &SetCache) -> Result<Report> {
    let point = Point::at(p, m, n);
    let (l1, l2) = (p.l1(), p.l2());
    let mut examined = 0;
    for (i, j) in admissible_pairs(p) {
        let pair = || PairDoc::new(&i, &j);
        let (upper, lower) = subsets(p, &i, &j, m, n, cache)?;
        examined += upper.len();
        let up = upper_params(&i, &j, l1, p.cutoff_m(), p.cutoff_n() - 1)?;
        let mut images = Vec::with_capacity(upper.len());
        for x in &upper {
            match map_m(x, &i, &j, p) {
                Ok(y) => images.push(y),
                Err(e) => {
                    let failure = Failure::Image {
                        pair: pair(),
                        detail: e.to_string(),
                        element: Some(ElementDoc::new(x, up.l1(), up.l2())),
                    };
                    return Ok(report(Check::Bijection, point, examined, Vec::new(), Some(failure)));
                }
            }
        }
        images.sort();
        if let Some(w) = images.windows(2).find(|w| w[0] == w[1]) {
            let failure = Failure::Image {
                pair: pair(),
                detail: "two elements share an image".into(),
                element: Some(ElementDoc::new(&w[0], l1, l2)),
            };
            return Ok(report(Check::Bijection, point, examined, Vec::new(), Some(failure)));
        }
        if images != lower {
            let missing = lower.iter().find(|y| images.binary_search(y).is_err());
            let failure = Failure::Image {
                pair: pair(),
                detail: format!("image has {} elements, lower subset has {}", images.len(), lower.len()),
                element: missing.map(|y| ElementDoc::new(y, l1, l2)),
            };
            return Ok(report(Check::Bijection, point, examined, Vec::new(), Some(failure)));
        }
        for x in &upper {
            let y = map_m(x, &i, &j, p)?;
            let back = map_m_inverse(&y, &i, &j, p);
            if back.as_ref() != Ok(x) {
                let failure = Failure::Image {
                    pair: pair(),
                    detail: match back {
                        Ok(z) => format!("inverse returned {z}"),
                        Err(e) => format!("inverse failed: {e}"),
                    },
                    element: Some(ElementDoc::new(&y, l1, l2)),
                };
                return Ok(report(Check::Bijection, point, examined, Vec::new(), Some(failure)));
            }
        }
    }
    Ok(report(Check::Bijection, point, examined, Vec::new(), None))
}

/// The graded sum `Σ z1^{|μ|} z2^{|ν|} q^{d}` of a list of rigged pairs,
/// with degrees taken at labels `(l1, l2)`.
pub fn graded_sum(elements: &[RiggedPair], l1: i64, l2: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for x in elements {
        out.add_term([x.mu.weight(), x.nu.weight(), rig_degree(x, l1, l2)], 1.into());
    }
    out
}

/// For every `(l1,l2)`-admissible pair `(I, J)`: the graded sum over the
/// upper subset, with `z2 ↦ q z2` and multiplied by `z1^a z2^b q^b`, equals
/// the graded sum over the lower subset at weights `(m, n)`.
pub fn verify_grading(p: &Params, m: i64, n: i64) -> Result<Report> {
    verify_grading_cached(p, m, n, &SetCache::new())
}

pub fn verify_grading_cached(p: &Params, m: i64, n: i64, cache: &SetCache) -> Result<Report> {
    let point = Point::at(p, m, n);
    let twist = [[1, 0, 0], [0, 1, 1], [0, 0, 1]];
    let mut examined = 0;
    for (i, j) in admissible_pairs(p) {
        let (a, b) = (i.len() as i64, j.len() as i64);
        let up = upper_params(&i, &j, p.l1(), p.cutoff_m(), p.cutoff_n() - 1)?;
        let (upper, lower) = subsets(p, &i, &j, m, n, cache)?;
        examined += lower.len();
        let lhs = graded_sum(&upper, up.l1(), up.l2())
            .substitute_monomial(twist)
            .shift([a, b, b]);
        let rhs = graded_sum(&lower, p.l1(), p.l2());
        if lhs != rhs {
            let failure = Failure::Grading {
                pair: PairDoc::new(&i, &j),
                difference: (&lhs - &rhs).to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            };
            return Ok(report(Check::Grading, point, examined, Vec::new(), Some(failure)));
        }
    }
    Ok(report(Check::Grading, point, examined, Vec::new(), None))
}

/// Outcome of testing `d(m_{I,J}(x)) - d(x) = |ν'| + b` element by element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeShift {
    pub examined: usize,
    /// First violation: the pair, the upper element, observed and
    /// predicted shifts.
    pub violation: Option<(PairDoc, ElementDoc, i64, i64)>,
}

/// Records whether the per-element degree law holds at one grid point.
/// Nothing is asserted; this is an experiment.
pub fn degree_shift_experiment(p: &Params, m: i64, n: i64, cache: &SetCache) -> Result<DegreeShift> {
    let mut examined = 0;
    for (i, j) in admissible_pairs(p) {
        let b = j.len() as i64;
        let up = upper_params(&i, &j, p.l1(), p.cutoff_m(), p.cutoff_n() - 1)?;
        let (upper, _) = subsets(p, &i, &j, m, n, cache)?;
        for x in &upper {
            examined += 1;
            let y = map_m(x, &i, &j, p)?;
            let observed = rig_degree(&y, p.l1(), p.l2()) - rig_degree(x, up.l1(), up.l2());
            let predicted = x.nu.weight() + b;
            if observed != predicted {
                let doc = ElementDoc::new(x, up.l1(), up.l2());
                return Ok(DegreeShift {
                    examined,
                    violation: Some((PairDoc::new(&i, &j), doc, observed, predicted)),
                });
            }
        }
    }
    Ok(DegreeShift {
        examined,
        violation: None,
    })
}

/// Lower and upper bound vectors as marked bounds, for callers that want
/// to inspect them directly.
pub fn bounds_of(
    i: &IndexSet,
    j: &IndexSet,
    l1: i64,
    l2: i64,
) -> Result<(
    (super::MarkedBound, super::MarkedBound),
    (super::MarkedBound, super::MarkedBound),
)> {
    Ok((lower_bounds(i, j, l1, l2)?, upper_bounds(i, j, l1)?))
}
