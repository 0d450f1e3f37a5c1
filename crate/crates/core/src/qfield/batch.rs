//! Families of rational functions over one common denominator, so that sums of
//! products need integer polynomial arithmetic only.

use std::ops::AddAssign;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::intpoly::{self, IntPoly};
use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::Rational;

/// Laurent polynomial with integer coefficients, dense from `low`; may carry
/// zero coefficients at either end.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntLaurent {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl IntLaurent {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntLaurent) -> IntLaurent {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntLaurent::default();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    coeffs[i + j] += x * y;
                }
            }
        }
        IntLaurent { low: self.low + other.low, coeffs }
    }

    /// sign * q^exp.
    pub fn monomial(sign: i32, exp: i64) -> IntLaurent {
        IntLaurent { low: exp, coeffs: vec![BigInt::from(sign)] }
    }

    /// Multiplication by sign * q^exp.
    pub fn shifted(&self, sign: i32, exp: i64) -> IntLaurent {
        let coeffs = if sign < 0 { self.coeffs.iter().map(|c| -c).collect() } else { self.coeffs.clone() };
        IntLaurent { low: self.low + exp, coeffs }
    }

    /// (q + q^-1)^k times `sign`.
    pub fn qsum_power(k: usize, sign: i32) -> IntLaurent {
        let mut coeffs = vec![BigInt::one()];
        for _ in 0..k {
            let mut next = vec![BigInt::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
            }
            coeffs = next;
        }
        // (q + q^-1)^k = Σ binom(k,i) q^(k-2i)
        let mut dense = vec![BigInt::zero(); 2 * k + 1];
        for (i, c) in coeffs.into_iter().enumerate() {
            dense[2 * i] = if sign < 0 { -c } else { c };
        }
        IntLaurent { low: -(k as i64), coeffs: dense }
    }

    fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_int_poly(self.low, &self.coeffs)
    }
}

impl AddAssign<&IntLaurent> for IntLaurent {
    fn add_assign(&mut self, rhs: &IntLaurent) {
        if rhs.coeffs.is_empty() {
            return;
        }
        if self.coeffs.is_empty() {
            *self = rhs.clone();
            return;
        }
        let low = self.low.min(rhs.low);
        let high = (self.low + self.coeffs.len() as i64).max(rhs.low + rhs.coeffs.len() as i64);
        if low < self.low || high > self.low + self.coeffs.len() as i64 {
            let mut coeffs = vec![BigInt::zero(); (high - low) as usize];
            for (i, c) in std::mem::take(&mut self.coeffs).into_iter().enumerate() {
                coeffs[(self.low - low) as usize + i] = c;
            }
            self.low = low;
            self.coeffs = coeffs;
        }
        let off = (rhs.low - self.low) as usize;
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[off + i] += c;
        }
    }
}

/// `values[i] = nums[i] / (scale * den)`, `den` a primitive integer polynomial.
#[derive(Clone, Debug)]
pub struct Batch {
    pub nums: Vec<IntLaurent>,
    scale: Rational,
    den: IntPoly,
}

impl Batch {
    pub fn new<'a, I: IntoIterator<Item = &'a RatFunc>>(values: I) -> Batch {
        let values: Vec<&RatFunc> = values.into_iter().collect();
        let mut dens: Vec<IntPoly> = Vec::new();
        for v in &values {
            let (_, _, d) = v.den().to_primitive();
            if !dens.contains(&d) {
                dens.push(d);
            }
        }
        let mut lcm: IntPoly = vec![BigInt::one()];
        for d in &dens {
            let g = intpoly::gcd(&lcm, d);
            lcm = intpoly::mul(&lcm, &intpoly::div_exact(d, &g));
        }
        let lcm = intpoly::primitive(lcm);
        // rational numerators over lcm, then one integer multiplier for all
        let scaled: Vec<LaurentPoly> = values
            .iter()
            .map(|v| {
                let (_, _, d) = v.den().to_primitive();
                let cof = intpoly::div_exact(&lcm, &d);
                // canonical denominators are primitive with low 0: v = num * cof / lcm
                v.num() * &LaurentPoly::from_int_poly(0, &cof)
            })
            .collect();
        let mult = scaled
            .iter()
            .flat_map(|p| p.terms().map(|(_, c)| c.denom().clone()).collect::<Vec<_>>())
            .fold(BigInt::one(), |a, d| a.lcm(&d));
        let m = Rational::from_integer(mult.clone());
        let nums = scaled
            .iter()
            .map(|p| {
                let Some(low) = p.low_exp() else { return IntLaurent::default() };
                let high = p.high_exp().unwrap();
                let coeffs = (low..=high).map(|e| (p.coeff(e) * &m).to_integer()).collect();
                IntLaurent { low, coeffs }
            })
            .collect();
        Batch { nums, scale: m, den: lcm }
    }

    /// The value `num / (self.scale * other.scale * self.den * other.den)`.
    pub fn product_value(&self, other: &Batch, num: &IntLaurent) -> RatFunc {
        let den = LaurentPoly::from_int_poly(0, &intpoly::mul(&self.den, &other.den))
            .scale(&(&self.scale * &other.scale));
        RatFunc::new(num.to_laurent(), den).expect("nonzero denominator")
    }

    /// The value `num / (scale * den)` over the product of several batches.
    pub fn joint_value(batches: &[&Batch], num: &IntLaurent) -> RatFunc {
        let mut den: IntPoly = vec![BigInt::one()];
        let mut scale = Rational::one();
        for b in batches {
            den = intpoly::mul(&den, &b.den);
            scale *= &b.scale;
        }
        let den = LaurentPoly::from_int_poly(0, &den).scale(&scale);
        RatFunc::new(num.to_laurent(), den).expect("nonzero denominator")
    }

    /// The value `num / (self.scale * self.den)`.
    pub fn value(&self, num: &IntLaurent) -> RatFunc {
        let den = LaurentPoly::from_int_poly(0, &self.den).scale(&self.scale);
        RatFunc::new(num.to_laurent(), den).expect("nonzero denominator")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::qint;

    #[test]
    fn batch_round_trips() {
        let vals: Vec<RatFunc> = vec![
            &RatFunc::from_int(3) / &qint(2),
            "(1/2*q)/(q^2 + 3)".parse().unwrap(),
            &qint(3) / &(&qint(2) * &qint(4)),
            RatFunc::zero(),
            "5/3*q^-4".parse().unwrap(),
        ];
        let b = Batch::new(&vals);
        for (v, n) in vals.iter().zip(&b.nums) {
            assert_eq!(&b.value(n), v);
        }
    }

    #[test]
    fn qsum_power_expands() {
        let p = IntLaurent::qsum_power(3, -1);
        let one = Batch::new([&RatFunc::one()]);
        assert_eq!(one.value(&p), -qint(2).pow(3));
    }
}
