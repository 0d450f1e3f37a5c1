//! The field Q(q): rationals, Laurent polynomials, reduced rational functions
//! and quantum integers.

pub(crate) mod batch;
mod intpoly;
mod laurent;
mod ratfunc;
mod text;

pub use laurent::LaurentPoly;
pub use ratfunc::{leading_sign, RatFunc};

use num_traits::One;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation at a pole")]
    Pole,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n); [-n] = -[n].
pub fn qint(n: i64) -> RatFunc {
    if n < 0 {
        return -qint(-n);
    }
    let terms = (0..n).map(|t| (n - 1 - 2 * t, Rational::one()));
    RatFunc::from_poly(LaurentPoly::from_terms(terms))
}

/// The loop value -eps (q + q^-1).
pub fn delta(eps: i32) -> RatFunc {
    let d = qint(2);
    if eps > 0 {
        -d
    } else {
        d
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `c` times eps, eps in {1, -1}.
pub fn signed(eps: i32, c: &RatFunc) -> RatFunc {
    if eps > 0 {
        c.clone()
    } else {
        -c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn qint_examples() {
        assert_eq!(qint(2), rf("q + q^-1"));
        assert!(qint(0).is_zero());
        assert_eq!(qint(-3), rf("-q^2 - 1 - q^-2"));
    }

    #[test]
    fn field_op_examples() {
        assert_eq!(&qint(2) * &qint(2), rf("q^2 + 2 + q^-2"));
        let quot = &qint(4) / &qint(2);
        assert_eq!(quot, rf("q^2 + q^-2"));
        assert_eq!(&quot * &qint(2), qint(4));
        assert_eq!(RatFunc::zero().inverse(), Err(QError::DivisionByZero));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(rf("q + q^-1").eval_at(&rat(1, 1)), Ok(rat(2, 1)));
        for n in 1..=10 {
            assert_eq!(qint(n).eval_at(&rat(1, 1)), Ok(rat(n, 1)));
        }
        let q_minus_1 = rf("q - 1");
        let f = &(&RatFunc::one() / &q_minus_1) * &q_minus_1;
        assert_eq!(f.eval_at(&rat(1, 1)), Ok(rat(1, 1)));
        assert_eq!((&RatFunc::one() / &q_minus_1).eval_at(&rat(1, 1)), Err(QError::Pole));
        assert_eq!(rf("q^-1").eval_at(&Rational::zero()), Err(QError::Pole));
    }

    #[test]
    fn two_times_qint_recurrence() {
        for n in 1..=12 {
            assert_eq!(&qint(2) * &qint(n), &qint(n + 1) + &qint(n - 1));
        }
    }
}
