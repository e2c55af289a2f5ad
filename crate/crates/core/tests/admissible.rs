use proptest::prelude::*;
use rigged_core::admissible::*;
use rigged_core::params::primed_labels;
use rigged_core::{IndexSet, KVector};

fn set(k: usize, m: &[usize]) -> IndexSet {
    IndexSet::new(k, m.to_vec()).unwrap()
}

/// Every `l1`-admissible pair at level `k`, with `l1 = 0..=k`.
fn admissible_pairs(k: usize) -> Vec<(i64, IndexSet, IndexSet)> {
    let all = IndexSet::all(k);
    let mut out = Vec::new();
    for l1 in 0..=k as i64 {
        for i in &all {
            for j in all.iter().filter(|j| is_admissible(i, j, l1, k as i64)) {
                out.push((l1, i.clone(), j.clone()));
            }
        }
    }
    out
}

#[test]
fn kappa_example_at_level_five() {
    assert_eq!(kappa(&set(5, &[2, 4, 5])), KVector::from_vec(vec![0, 1, 1, 2, 3]));
    assert_eq!(epsilon(&set(5, &[2, 4, 5])), KVector::from_vec(vec![-1, 1, -1, 0, 1]));
}

#[test]
fn kappa_epsilon_additivity_exhaustive() {
    for k in 1..=5 {
        let all = IndexSet::all(k);
        for a in &all {
            for b in all.iter().filter(|b| a.is_disjoint(b)) {
                let u = a.union(b);
                assert_eq!(kappa(&u), &kappa(a) + &kappa(b));
                assert_eq!(epsilon(&u), &epsilon(a) + &epsilon(b));
            }
        }
    }
}

#[test]
fn epsilon_is_the_difference_of_kappa_steps() {
    for k in 1..=5 {
        for i in IndexSet::all(k) {
            let kap = kappa(&i);
            let step = |a: usize| {
                if a == 0 || a > k {
                    0
                } else {
                    kap[a] - if a == 1 { 0 } else { kap[a - 1] }
                }
            };
            let expected = KVector::from_fn(k, |a| step(a) - if a < k { step(a + 1) } else { 0 });
            assert_eq!(epsilon(&i), expected, "{i}");
            let weight: i64 = (1..=k).map(|a| a as i64 * epsilon(&i)[a]).sum();
            assert_eq!(weight, i.len() as i64);
        }
    }
}

proptest! {
    #[test]
    fn kappa_is_a_sum_of_singletons(k in 1usize..=8, bits in 0u32..256) {
        let members: Vec<usize> = (1..=k).filter(|&x| bits & (1 << (x - 1)) != 0).collect();
        let i = IndexSet::new(k, members.clone()).unwrap();
        let mut kap = KVector::zero(k);
        let mut eps = KVector::zero(k);
        for x in members {
            kap = &kap + &kappa(&set(k, &[x]));
            eps = &eps + &epsilon(&set(k, &[x]));
        }
        prop_assert_eq!(kappa(&i), kap);
        prop_assert_eq!(epsilon(&i), eps);
    }
}

#[test]
fn tilde_maps_are_mutually_inverse() {
    for k in 1..=5 {
        let ki = k as i64;
        let mut images = 0;
        for (l1, i, j) in admissible_pairs(k) {
            let c = j.len() as i64 - i.len() as i64;
            let (ti, tj) = tilde_pair(&i, &j, l1).unwrap();
            if l1 + c < ki {
                assert!(is_tilde_image(&ti, &tj, l1, i.len(), c), "k={k} l1={l1} {i} {j}");
                let (l1p, _, _) = primed_labels(k, l1, i.len() as i64, c);
                assert_eq!(ti.len() as i64, ki - l1p);
                images += 1;
            } else {
                assert_eq!((&ti, &tj), (&i, &j));
            }
            assert_eq!(untilde_pair(&ti, &tj, l1, c).unwrap(), (i.clone(), j.clone()));
        }
        // Conversely every pair in the stated image set comes from an
        // admissible pair.
        let all = IndexSet::all(k);
        let mut found = 0;
        for l1 in 0..=ki {
            for a in 0..=k {
                for c in 0..(ki - l1).max(0) {
                    for ti in &all {
                        for tj in &all {
                            if !is_tilde_image(ti, tj, l1, a, c) {
                                continue;
                            }
                            found += 1;
                            let (i, j) = untilde_pair(ti, tj, l1, c).unwrap();
                            assert_eq!((i.len(), j.len() as i64), (a, a as i64 + c));
                            assert!(is_admissible(&i, &j, l1, ki));
                            assert_eq!(tilde_pair(&i, &j, l1).unwrap(), (ti.clone(), tj.clone()));
                        }
                    }
                }
            }
        }
        assert_eq!(found, images, "k={k}");
    }
}

#[test]
fn bound_vectors_are_nonnegative() {
    for k in 1..=5 {
        let ki = k as i64;
        for (l1, i, j) in admissible_pairs(k) {
            let r = rho(&i, &j, l1).unwrap();
            let rp = rho_prime(&i, &j, l1).unwrap();
            let sp = sigma_prime(&i, &j, l1).unwrap();
            assert!(r.is_nonneg(), "ρ k={k} l1={l1} {i} {j}: {r}");
            assert!(rp.is_nonneg() && rp[k] == 0, "ρ' k={k} l1={l1} {i} {j}: {rp}");
            assert!(sp.is_nonneg() && sp[k] == 0, "σ' k={k} l1={l1} {i} {j}: {sp}");
            for l2 in j.len() as i64..=ki {
                assert!(sigma(&j, l2).unwrap().is_nonneg());
                // The primed vectors are the lower bounds shifted back.
                assert_eq!(rp, &r - &delta_r(&i, &j, l1, l2));
                assert_eq!(sp, &sigma(&j, l2).unwrap() - &delta_s(&i, &j, l1, l2));
            }
        }
    }
}

#[test]
fn prime_definition_identity() {
    for k in 1..=5 {
        let ki = k as i64;
        for j in IndexSet::all(k) {
            for l1 in 0..=ki {
                let b = j.len() as i64;
                let lab = label_complement(&j, l1);
                let lhs = (&kappa(&j) - &kappa_interval(k, l1 + 1, l1 + b)).pos();
                let plus = kappa_of(k, j.members()[..lab.p].iter().copied());
                let minus = kappa_of(k, (1..=lab.p).map(|x| lab.vp(x)));
                assert_eq!(lhs, &plus - &minus, "k={k} l1={l1} J={j}");
            }
        }
    }
}

#[test]
fn j_min_is_minimal_and_matches_closed_form() {
    for k in 1..=5 {
        let ki = k as i64;
        let all = IndexSet::all(k);
        for (l1, i, j) in admissible_pairs(k) {
            let c = j.len() as i64 - i.len() as i64;
            let (ti, _) = tilde_pair(&i, &j, l1).unwrap();
            let tilde = (l1 + c < ki).then_some(&ti);
            let jm = j_min(&i, c, l1, tilde).unwrap();
            assert_eq!(jm.len(), j.len());
            assert!(
                is_admissible(&i, &jm, l1, ki),
                "J_min not admissible: k={k} l1={l1} {i} {jm}"
            );
            assert!(set_leq(&jm, &j), "J_min={jm} not below J={j}");
            if l1 + c < ki {
                assert_eq!(tilde_pair(&i, &jm, l1).unwrap().0, ti);
            }
            assert_eq!(
                sigma_prime(&i, &jm, l1).unwrap(),
                sigma_prime_at_min(&i, c, l1, tilde).unwrap(),
                "k={k} l1={l1} I={i} c={c}"
            );
            // No admissible J' with the same data lies strictly below.
            for jp in all
                .iter()
                .filter(|jp| jp.len() == j.len() && is_admissible(&i, jp, l1, ki))
            {
                if l1 + c >= ki || tilde_pair(&i, jp, l1).unwrap().0 == ti {
                    assert!(set_leq(&jm, jp));
                }
            }
        }
    }
}

#[test]
fn i_max_is_admissible_and_maximal() {
    for k in 1..=4 {
        let ki = k as i64;
        let all = IndexSet::all(k);
        for j in &all {
            for l1 in 0..=ki {
                for l3 in 0..=l1 {
                    let im = i_max(j, l1, l3);
                    assert!(is_admissible(&im, j, l1, ki));
                    for i in all
                        .iter()
                        .filter(|i| i.len() as i64 <= l3 && is_admissible(i, j, l1, ki))
                    {
                        assert!(i.len() <= im.len());
                    }
                }
            }
        }
    }
}
