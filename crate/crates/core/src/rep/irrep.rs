use super::linalg::LinOp;
use crate::qfield::{qint, signed, RatFunc};

/// Generators of the quantum group acting on an irreducible module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QGen {
    E,
    F,
    K,
    Kinv,
}

/// Matrix of `g` on the (m+1)-dimensional module of type `eps`, basis x_0..x_m:
/// K x_i = eps q^(m-2i) x_i, E x_i = [m-i+1] x_(i-1), F x_i = eps [i+1] x_(i+1) (i < m).
pub fn irrep_action(m: usize, eps: i32, g: QGen) -> LinOp {
    let d = m + 1;
    let mi = m as i64;
    let entries: Vec<(usize, usize, RatFunc)> = match g {
        QGen::K => (0..d).map(|i| (i, i, signed(eps, &RatFunc::q_pow(mi - 2 * i as i64)))).collect(),
        QGen::Kinv => (0..d).map(|i| (i, i, signed(eps, &RatFunc::q_pow(2 * i as i64 - mi)))).collect(),
        QGen::E => (1..d).map(|i| (i - 1, i, qint(mi - i as i64 + 1))).collect(),
        QGen::F => (0..m).map(|i| (i + 1, i, signed(eps, &qint(i as i64 + 1)))).collect(),
    };
    LinOp::from_entries(d, d, entries)
}

/// The coideal generator B = q^-1 E K^-1 + F on the (m+1)-dimensional module.
pub fn b_on_irrep(m: usize, eps: i32) -> LinOp {
    let e = irrep_action(m, eps, QGen::E);
    let kinv = irrep_action(m, eps, QGen::Kinv);
    let f = irrep_action(m, eps, QGen::F);
    &(&e * &kinv).scale(&RatFunc::q_pow(-1)) + &f
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn defining_relations() {
        let q2 = RatFunc::q_pow(2);
        let qq = rf("q - q^-1");
        for eps in [1, -1] {
            for m in 0..=4 {
                let e = irrep_action(m, eps, QGen::E);
                let f = irrep_action(m, eps, QGen::F);
                let k = irrep_action(m, eps, QGen::K);
                let ki = irrep_action(m, eps, QGen::Kinv);
                assert_eq!(&k * &ki, LinOp::identity(m + 1));
                assert_eq!(&k * &e, (&e * &k).scale(&q2));
                assert_eq!((&k * &f).scale(&q2), &f * &k);
                let lhs = &(&e * &f) - &(&f * &e);
                let rhs = (&k - &ki).scale(&(&RatFunc::one() / &qq));
                assert_eq!(lhs, rhs, "m={m} eps={eps}");
            }
        }
    }

    #[test]
    fn spin_half_examples() {
        for eps in [1, -1] {
            let k = irrep_action(1, eps, QGen::K);
            assert_eq!(k, LinOp::diagonal(&[signed(eps, &rf("q")), signed(eps, &rf("q^-1"))]));
            let e = irrep_action(1, eps, QGen::E);
            assert_eq!(e.get(0, 1), RatFunc::one());
            assert!(e.column(0).is_zero());
        }
    }
}
