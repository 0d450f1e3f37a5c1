use super::*;
use crate::qfield::{delta, qint, signed, RatFunc};
use crate::tldiag::{enumerate_basis, gen_s0, gen_u, gen_u0, identity, TLMorphism};

fn rf(s: &str) -> RatFunc {
    s.parse().unwrap()
}

fn vec2(x: &str, y: &str) -> Vector {
    Vector::from_entries(2, [(0, rf(x)), (1, rf(y))])
}

#[test]
fn structure_map_examples() {
    let xy = Vector::basis(4, 1);
    let yx = Vector::basis(4, 2);
    assert_eq!(r_matrix(1).apply(&xy), yx);
    assert_eq!(hbar(1).apply(&xy), &yx - &xy.scale(&rf("q^-1")));
    assert_eq!(cap(1).apply(&yx).get(0), RatFunc::one());
    assert_eq!(cap(1).apply(&xy).get(0), rf("-q^-1"));
}

#[test]
fn structure_map_properties() {
    let id = LinOp::identity(2);
    for eps in [1, -1] {
        assert_eq!((&cap(eps) * &cup(eps)).get(0, 0), delta(eps));
        assert_eq!(&cup(eps) * &cap(eps), hbar(eps));
        let left = &cap(eps).kron(&id) * &id.kron(&cup(eps));
        let right = &id.kron(&cap(eps)) * &cup(eps).kron(&id);
        assert_eq!(left, id);
        assert_eq!(right, id);
        let dotted = &(&cap(eps) * &kappa().kron(&id)) * &cup(eps);
        assert!(dotted.is_zero());
        assert!((&cap(eps) * &b_operator(2, eps)).is_zero());
        assert!((&b_operator(2, eps) * &cup(eps)).is_zero());
        // right closure of one strand is the mu-weighted trace
        for i in 0..2 {
            for j in 0..2 {
                let f = LinOp::from_entries(2, 2, [(i, j, RatFunc::one())]);
                let closed = &(&cap(eps) * &f.kron(&id)) * &cup(eps);
                assert_eq!(closed.get(0, 0), (&mu(eps) * &f).trace());
            }
        }
        assert_eq!(mu(eps), irrep_action(1, eps, QGen::Kinv).scale(&RatFunc::from_int(-1)));
    }
}

#[test]
fn psi_examples() {
    for eps in [1, -1] {
        for n in 1..=3 {
            assert_eq!(psi(&identity(n, eps)), LinOp::identity(1 << n));
            let expected = kappa().kron(&LinOp::identity(1 << (n - 1)));
            assert_eq!(psi(&gen_s0(n, eps).unwrap()), expected);
        }
        for n in 2..=4 {
            for i in 1..n {
                let expected = LinOp::identity(1 << (i - 1)).kron(&hbar(eps)).kron(&LinOp::identity(1 << (n - i - 1)));
                assert_eq!(psi(&gen_u(i, n, eps).unwrap()), expected);
            }
        }
    }
    let u0 = psi(&gen_u0(2, 1).unwrap());
    let xx = Vector::basis(4, 0);
    assert_eq!(u0.apply(&xx), &Vector::basis(4, 3) - &xx.scale(&rf("q")));
}

#[test]
fn psi_entry_matches_columns() {
    for eps in [1, -1] {
        for d in enumerate_basis(2, 4) {
            let op = psi_diagram(&d, eps);
            for inp in 0..4 {
                for out in 0..16 {
                    let e = psi_entry(&d, eps, out, inp)
                        .map(|(s, x)| signed(s, &RatFunc::q_pow(x)))
                        .unwrap_or_default();
                    assert_eq!(op.get(out, inp), e);
                }
            }
        }
    }
}

#[test]
fn psi_is_multiplicative_on_hom_1_3_then_3_1() {
    for eps in [1, -1] {
        for f in enumerate_basis(1, 3) {
            for g in enumerate_basis(3, 1) {
                let f = TLMorphism::from_diagram(f.clone(), eps);
                let g = TLMorphism::from_diagram(g, eps);
                assert_eq!(psi(&f.compose(&g).unwrap()), &psi(&g) * &psi(&f));
            }
        }
    }
}

#[test]
fn b_operator_examples() {
    for eps in [1, -1] {
        let b1 = b_operator(1, eps);
        assert_eq!(b1, kappa().scale(&RatFunc::from_int(eps as i64)));
        assert_eq!(b1, b_on_irrep(1, eps));
        let v0 = vec2("1", if eps > 0 { "1" } else { "-1" });
        assert_eq!(b1.apply(&v0), v0);
    }
}

#[test]
fn b_operator_matches_coproduct_formula() {
    for eps in [1, -1] {
        let b = b_on_irrep(1, eps);
        let kinv = irrep_action(1, eps, QGen::Kinv);
        for n in 1..=4 {
            let mut total = LinOp::zero(1 << n, 1 << n);
            for i in 0..n {
                let mut term = LinOp::identity(1 << i).kron(&b);
                for _ in i + 1..n {
                    term = term.kron(&kinv);
                }
                total = &total + &term;
            }
            assert_eq!(total, b_operator(n, eps));
        }
    }
}

#[test]
fn special_vector_examples() {
    assert_eq!(special_vector(SpecialKind::V, 0, 1), vec2("1", "1"));
    assert_eq!(special_vector(SpecialKind::W, 0, 1), vec2("1", "-1"));
    assert_eq!(special_vector(SpecialKind::V, 2, -1), vec2("1", "-q^-2"));
}

#[test]
fn eigenbasis_examples() {
    let e1 = eigenbasis(1, 1);
    assert_eq!(e1, vec![(1, vec2("1", "1")), (-1, vec2("1", "-1"))]);
    for eps in [1, -1] {
        let mut labels: Vec<i64> = eigenbasis(2, eps).into_iter().map(|p| p.0).collect();
        labels.sort();
        assert_eq!(labels, vec![-2, 0, 0, 2]);
    }
    let top = eigenbasis(3, 1).into_iter().find(|p| p.0 == 3).unwrap().1;
    let expected = special_vector(SpecialKind::V, 0, 1)
        .kron(&special_vector(SpecialKind::V, 1, 1))
        .kron(&special_vector(SpecialKind::V, 2, 1));
    assert_eq!(top, expected);
}

#[test]
fn eigenvectors_have_their_labels() {
    for eps in [1, -1] {
        for n in 1..=4 {
            let b = b_operator(n, eps);
            for (m, z) in eigenbasis(n, eps) {
                assert_eq!(b.apply(&z), z.scale(&qint(m)), "n={n} eps={eps} m={m}");
            }
        }
    }
}

#[test]
fn json_shapes() {
    let op = LinOp::from_entries(2, 2, [(0, 1, rf("q")), (1, 0, rf("-1"))]);
    assert_eq!(op.to_json(), r#"{"dims":[2,2],"entries":[[0,1,"q"],[1,0,"-1"]]}"#);
    let back: MatrixJson = serde_json::from_str(&op.to_json()).unwrap();
    assert_eq!(LinOp::from(&back), op);
}
