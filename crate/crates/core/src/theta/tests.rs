use super::closure::partial_closure_last_op;
use super::strands::close_type_a_strand;
use super::*;
use crate::jw::jw;
use crate::qfield::delta;
use crate::rep::psi;
use crate::tldiag::{enumerate_basis, gen_s0, identity, TLMorphism};

fn rf(s: &str) -> RatFunc {
    s.parse().unwrap()
}

#[test]
fn admissibility_examples() {
    assert!(is_admissible(2, 2, 2));
    assert_eq!(ijk(2, 2, 2).unwrap(), (1, 1, 1));
    assert!(!is_admissible(1, 0, 2));
    assert!(ijk(1, 0, 2).is_err());
    assert!(is_admissible(3, 2, 1));
    assert_eq!(ijk(3, 2, 1).unwrap(), (0, 1, 2));
    assert!(!is_admissible(-1, 1, 0));
}

#[test]
fn closure_examples() {
    for eps in [1, -1] {
        assert_eq!(markov_closure(&identity(1, eps)).unwrap(), delta(eps));
        assert!(markov_closure(&gen_s0(1, eps).unwrap()).unwrap().is_zero());
        for n in 1..=4 {
            let d = jw(ProjectorKind::D, n, eps).unwrap();
            let sign = if eps > 0 && n % 2 == 1 { -1 } else { 1 };
            assert_eq!(markov_closure(&d).unwrap(), signed(sign, &RatFunc::q_sym(n as i64)));
        }
    }
    assert!(markov_closure(&cap_block(0, 1, 0, 1)).is_err());
}

#[test]
fn closure_agrees_with_matrix_trace() {
    for eps in [1, -1] {
        for d in enumerate_basis(3, 3) {
            let f = TLMorphism::from_diagram(d, eps);
            assert_eq!(markov_closure(&f).unwrap(), markov_closure_op(&psi(&f), eps));
        }
    }
}

#[test]
fn partial_closure_is_compatible_with_psi_and_iterates_to_full_closure() {
    for eps in [1, -1] {
        let mut fs: Vec<TLMorphism> =
            enumerate_basis(3, 3).into_iter().map(|d| TLMorphism::from_diagram(d, eps)).collect();
        fs.push((*jw(ProjectorKind::D, 3, eps).unwrap()).clone());
        for f in fs {
            let p = partial_closure_last(&f).unwrap();
            assert_eq!(psi(&p), partial_closure_last_op(&psi(&f), eps));
            let mut g = f.clone();
            while g.source() > 0 {
                g = partial_closure_last(&g).unwrap();
            }
            assert_eq!(g.scalar().unwrap_or_default(), markov_closure(&f).unwrap());
        }
    }
}

#[test]
fn theta_matrix_examples() {
    for eps in [1, -1] {
        assert_eq!(theta_matrix(1, 0, 1, eps).unwrap(), delta(eps));
        assert_eq!(theta_matrix(2, 1, 1, eps).unwrap(), rf("q^2 + q^-2"));
    }
    assert!(theta_matrix(1, 0, 2, 1).is_err());
    assert!(theta_matrix(1, 1, 2, 0).is_err());
}

/// The network assembled diagrammatically and closed, without the cyclic
/// rearrangement or batching.
fn theta_naive(a: usize, b: usize, c: usize, eps: i32) -> RatFunc {
    let (i, j, k) = ijk(a as i64, b as i64, c as i64).unwrap();
    let da = if a == 0 { identity(0, eps) } else { (*jw(ProjectorKind::D, a, eps).unwrap()).clone() };
    let ab = if b == 0 { identity(0, eps) } else { (*jw(ProjectorKind::A, b, eps).unwrap()).clone() };
    let ac = if c == 0 { identity(0, eps) } else { (*jw(ProjectorKind::A, c, eps).unwrap()).clone() };
    let n = da
        .tensor(&ab)
        .unwrap()
        .compose(&cap_block(j, k, i, eps))
        .unwrap()
        .compose(&ac)
        .unwrap()
        .compose(&cup_block(j, k, i, eps))
        .unwrap();
    let by_diagrams = markov_closure(&n).unwrap();
    assert_eq!(by_diagrams, markov_closure_op(&psi(&n), eps));
    by_diagrams
}

#[test]
fn theta_matrix_agrees_with_naive_closure() {
    for eps in [1, -1] {
        for a in 0..=3i64 {
            for b in 0..=3i64 {
                for c in 0..=3i64 {
                    if is_admissible(a, b, c) && a + b <= 4 {
                        let naive = theta_naive(a as usize, b as usize, c as usize, eps);
                        assert_eq!(theta_matrix(a, b, c, eps).unwrap(), naive, "({a},{b},{c}) eps={eps}");
                    }
                }
            }
        }
    }
}

#[test]
fn theta_2_2_2_fixture() {
    for eps in [1, -1] {
        // -eps (q^2 + q^-2)^2 / (q + q^-1)
        let expected = signed(-eps, &(&RatFunc::q_sym(2).pow(2) / &RatFunc::q_sym(1)));
        let m = theta_matrix(2, 2, 2, eps).unwrap();
        assert_eq!(m, expected);
        assert_eq!(theta_recursive(2, 2, 2, eps).unwrap(), m);
    }
}

#[test]
fn recursion_matches_oracle_on_small_triples() {
    for eps in [1, -1] {
        for a in 0..=3 {
            for b in 0..=3 {
                for c in 0..=3 {
                    let r = theta_recursive(a, b, c, eps).unwrap();
                    if is_admissible(a, b, c) {
                        assert_eq!(r, theta_matrix(a, b, c, eps).unwrap(), "({a},{b},{c}) eps={eps}");
                    } else {
                        assert!(r.is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn base_cases() {
    for eps in [1, -1] {
        for a in 1..=6i64 {
            let sign = if eps > 0 && a % 2 == 1 { -1 } else { 1 };
            assert_eq!(theta_recursive(a, 0, a, eps).unwrap(), signed(sign, &RatFunc::q_sym(a)));
        }
        assert!(theta_recursive(1, 0, 2, eps).unwrap().is_zero());
    }
}

#[test]
fn theta_1_1_2_is_the_quantum_three() {
    for eps in [1, -1] {
        let t = theta_matrix(1, 1, 2, eps).unwrap();
        assert_eq!(t, qint(3));
        assert_ne!(t, rf("q^2 + 2 + q^-2"));
        assert_eq!(theta_recursive(1, 1, 2, eps).unwrap(), t);
    }
}

#[test]
fn exchange_symmetry_and_eps_sign() {
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                if !is_admissible(a, b, c) {
                    continue;
                }
                for eps in [1, -1] {
                    assert_eq!(theta_matrix(a, b, c, eps).unwrap(), theta_matrix(a, c, b, eps).unwrap());
                }
                let (p, m) = (theta_matrix(a, b, c, 1).unwrap(), theta_matrix(a, b, c, -1).unwrap());
                assert!(p == m || p == -&m, "({a},{b},{c})");
            }
        }
    }
}

#[test]
fn strand_removal_identities_hold() {
    let limits = StrandLimits { close_type_a: 4, close_type_d: 3, relocate: 2, relocate_strands: 6 };
    for eps in [1, -1] {
        let r = strand_removal_identities(limits, eps).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.checks.len() > 8);
    }
}

#[test]
fn closing_a_type_a_strand_with_coefficient_n_over_n_minus_1_fails() {
    for eps in [1, -1] {
        let (lhs, _) = close_type_a_strand(2, eps);
        let a1 = jw_image_or_empty(ProjectorKind::A, 1, eps);
        let lower = a1.scale(&signed(-eps, &qint(2)));
        assert_ne!(lhs, lower);
    }
}

#[test]
fn d_absorbs_both_boxes_when_a_is_b_plus_c() {
    for eps in [1, -1] {
        for (b, c) in [(2, 2), (3, 1), (1, 3), (2, 1)] {
            let a = b + c;
            let sign = if eps > 0 && a % 2 == 1 { -1 } else { 1 };
            let closed = signed(sign, &RatFunc::q_sym(a));
            assert_eq!(theta_matrix(a, b, c, eps).unwrap(), closed);
            assert_eq!(theta_recursive(a, b, c, eps).unwrap(), closed);
        }
    }
}
