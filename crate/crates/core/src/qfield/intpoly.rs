//! Dense integer polynomials, ascending coefficients, used only for gcd work.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type IntPoly = Vec<BigInt>;

pub(crate) fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(mut p: IntPoly) -> IntPoly {
    trim(&mut p);
    if p.is_empty() {
        return p;
    }
    let mut g = content(&p);
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in p.iter_mut() {
            *c = &*c / &g;
        }
    }
    p
}

/// lc(b)^(deg a - deg b + 1) * a mod b.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut r: IntPoly = a.to_vec();
    let db = degree(b);
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && degree(&r) >= db {
        let dr = degree(&r);
        let lr = r.last().unwrap().clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        trim(&mut r);
    }
    r
}

/// Greatest common divisor of two nonzero polynomials, primitive with positive
/// leading coefficient (primitive pseudo-remainder sequence).
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let (mut a, mut b) = (primitive(a.to_vec()), primitive(b.to_vec()));
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.is_empty() {
            return a;
        }
        if degree(&b) == 0 {
            return vec![BigInt::one()];
        }
        let r = primitive(pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
}

/// Exact quotient a / b over Z; panics if b does not divide a.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = degree(b);
    let lb = b.last().unwrap();
    let mut r: IntPoly = a.to_vec();
    if r.len() < b.len() {
        assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        return Vec::new();
    }
    let mut quot = vec![BigInt::zero(); r.len() - db];
    for k in (0..quot.len()).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let (qc, rem) = top.div_rem(lb);
        assert!(rem.is_zero(), "inexact polynomial division");
        for (i, bc) in b.iter().enumerate() {
            r[i + k] -= &qc * bc;
        }
        quot[k] = qc;
    }
    assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
    trim(&mut quot);
    quot
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> IntPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (1+q)(2-q) and (1+q)(3+q^2)
        let a = mul(&p(&[1, 1]), &p(&[2, -1]));
        let b = mul(&p(&[1, 1]), &p(&[3, 0, 1]));
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(gcd(&p(&[1, 0, 1]), &p(&[1, 1])), p(&[1]));
    }

    #[test]
    fn exact_division_round_trips() {
        let a = p(&[3, -2, 0, 7]);
        let b = p(&[-1, 4, 2]);
        assert_eq!(div_exact(&mul(&a, &b), &b), a);
    }
}
