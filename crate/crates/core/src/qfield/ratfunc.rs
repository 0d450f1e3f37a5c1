use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::intpoly;
use super::laurent::LaurentPoly;
use super::{QError, Rational};

/// Reduced fraction of Laurent polynomials.
///
/// Canonical form: `den` has lowest exponent 0, integer coefficients with
/// content 1 and a positive leading coefficient; `num` and `den` are coprime.
/// Zero is `0 / 1`. Structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    /// c * q^e.
    pub fn monomial(c: Rational, e: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(c, e))
    }

    /// q^e.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// q^e + q^-e.
    pub fn q_sym(e: i64) -> Self {
        Self::from_poly(LaurentPoly::from_terms([(e, Rational::one()), (-e, Rational::one())]))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QError> {
        if den.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Brings an arbitrary fraction with nonzero `den` to canonical form.
    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (dl, ds, dp) = den.to_primitive();
        let (nl, ns, np) = num.to_primitive();
        let g = if intpoly::degree(&dp) == 0 || intpoly::degree(&np) == 0 {
            None
        } else {
            Some(intpoly::gcd(&np, &dp))
        };
        let (np, dp) = match g {
            Some(g) if intpoly::degree(&g) > 0 => {
                (intpoly::div_exact(&np, &g), intpoly::div_exact(&dp, &g))
            }
            _ => (np, dp),
        };
        Self::assemble(nl - dl, ns / ds, &np, dp)
    }

    /// `scale * q^low * np / dp` with `dp` primitive, positive leading, coprime to `np`.
    fn assemble(low: i64, scale: Rational, np: &[BigInt], dp: Vec<BigInt>) -> Self {
        let num = LaurentPoly::from_int_poly(low, np).scale(&scale);
        Self { num, den: LaurentPoly::from_int_poly(0, &dp) }
    }

    /// Fraction known to be coprime; only normalizes the denominator.
    fn normalize_coprime(num: LaurentPoly, den: LaurentPoly) -> Self {
        let (dl, ds, dp) = den.to_primitive();
        let num = num.shift(-dl).scale(&ds.recip());
        Self { num, den: LaurentPoly::from_int_poly(0, &dp) }
    }

    /// Cancels common factors of a and b (both nonzero); returns (a/g, b/g).
    fn cancel(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        if a.is_monomial() || b.is_monomial() {
            return (a.clone(), b.clone());
        }
        let (al, as_, ap) = a.to_primitive();
        let (bl, bs, bp) = b.to_primitive();
        let g = intpoly::gcd(&ap, &bp);
        if intpoly::degree(&g) == 0 {
            return (a.clone(), b.clone());
        }
        let ap = intpoly::div_exact(&ap, &g);
        let bp = intpoly::div_exact(&bp, &g);
        (
            LaurentPoly::from_int_poly(al, &ap).scale(&as_),
            LaurentPoly::from_int_poly(bl, &bp).scale(&bs),
        )
    }

    pub fn inverse(&self) -> Result<Self, QError> {
        if self.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::normalize_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, QError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Multiplication by q^k.
    pub fn shift(&self, k: i64) -> Self {
        Self { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at q = q0.
    pub fn eval_at(&self, q0: &Rational) -> Result<Rational, QError> {
        let d = self.den.eval(q0)?;
        if d.is_zero() {
            return Err(QError::Pole);
        }
        Ok(self.num.eval(q0)? / d)
    }

    /// Sum of many terms with one reduction at the end.
    pub fn sum<'a, I: IntoIterator<Item = &'a RatFunc>>(items: I) -> Self {
        let mut num = LaurentPoly::zero();
        let mut den = LaurentPoly::one();
        for x in items {
            if x.is_zero() {
                continue;
            }
            if x.den == den {
                num = &num + &x.num;
            } else if x.den.is_one() {
                num = &num + &(&x.num * &den);
            } else {
                let (dx, dd) = Self::cancel(&x.den, &den);
                // lcm = den * dx
                num = &(&num * &dx) + &(&x.num * &dd);
                den = &den * &dx;
            }
        }
        Self::reduce(num, den)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from_poly(&self.num + &rhs.num);
            }
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let (d1, d2) = RatFunc::cancel(&self.den, &rhs.den);
        // self.den = g*d1, rhs.den = g*d2
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        RatFunc::reduce(num, &self.den * &d2)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        let (n1, d2) = RatFunc::cancel(&self.num, &rhs.den);
        let (n2, d1) = RatFunc::cancel(&rhs.num, &self.den);
        RatFunc::normalize_coprime(&n1 * &n2, &d1 * &d2)
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] to recover.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Sign of the leading coefficient of the numerator (0 for zero).
pub fn leading_sign(f: &RatFunc) -> i32 {
    match f.num.leading_coeff() {
        None => 0,
        Some(c) if c.is_positive() => 1,
        Some(_) => -1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::qint;

    #[test]
    fn canonical_denominator_is_primitive_and_positive() {
        // (2q)/(-4q^3 - 2q) = -1/(2q^2 + 1)
        let num = LaurentPoly::monomial(Rational::from_integer(2.into()), 1);
        let den = LaurentPoly::from_terms([
            (3, Rational::from_integer((-4).into())),
            (1, Rational::from_integer((-2).into())),
        ]);
        let f = RatFunc::new(num, den).unwrap();
        assert_eq!(f.to_string(), "(-1)/(2*q^2 + 1)");
    }

    #[test]
    fn sum_matches_pairwise_addition() {
        let xs: Vec<RatFunc> = (1..6).map(|n| RatFunc::one() / qint(n)).collect();
        let pairwise = xs.iter().fold(RatFunc::zero(), |a, b| &a + b);
        assert_eq!(RatFunc::sum(&xs), pairwise);
    }
}
