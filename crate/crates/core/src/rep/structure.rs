//! Structure maps on V ⊗ V for the two-dimensional module V of type eps,
//! basis x = 0, y = 1.

use super::linalg::LinOp;
use crate::qfield::{signed, RatFunc};

/// cap(x⊗y) = -eps q^-1, cap(y⊗x) = 1, cap(x⊗x) = cap(y⊗y) = 0.
pub fn cap_value(left: usize, right: usize, eps: i32) -> Option<(i32, i64)> {
    match (left, right) {
        (0, 1) => Some((-eps, -1)),
        (1, 0) => Some((1, 0)),
        _ => None,
    }
}

/// cup(1) = x⊗y - eps q y⊗x.
pub fn cup_value(left: usize, right: usize, eps: i32) -> Option<(i32, i64)> {
    match (left, right) {
        (0, 1) => Some((1, 0)),
        (1, 0) => Some((-eps, 1)),
        _ => None,
    }
}

/// Closure weight mu = diag(-eps q^-1, -eps q) (equals -K^-1).
pub fn mu_value(bit: usize, eps: i32) -> (i32, i64) {
    if bit == 0 {
        (-eps, -1)
    } else {
        (-eps, 1)
    }
}

pub(crate) fn mono(sign: i32, exp: i64) -> RatFunc {
    signed(sign, &RatFunc::q_pow(exp))
}

pub fn kappa() -> LinOp {
    LinOp::from_entries(2, 2, [(1, 0, RatFunc::one()), (0, 1, RatFunc::one())])
}

/// R-matrix on V ⊗ V.
pub fn r_matrix(eps: i32) -> LinOp {
    let e = eps as i64;
    let diag = signed(eps, &RatFunc::q_pow(-e));
    let corr: RatFunc = "q^-1 - q".parse().unwrap();
    let mut entries = vec![(0, 0, diag.clone()), (3, 3, diag), (2, 1, RatFunc::one()), (1, 2, RatFunc::one())];
    if eps < 0 {
        entries.push((1, 1, corr));
    } else {
        entries.push((2, 2, corr));
    }
    LinOp::from_entries(4, 4, entries)
}

/// H̄ = R - eps q^-eps id.
pub fn hbar(eps: i32) -> LinOp {
    let c = signed(eps, &RatFunc::q_pow(-(eps as i64)));
    &r_matrix(eps) - &LinOp::identity(4).scale(&c)
}

/// Hom(V ⊗ V, k) as a 1 × 4 matrix.
pub fn cap(eps: i32) -> LinOp {
    let entries = (0..4).filter_map(|b| cap_value(b >> 1, b & 1, eps).map(|(s, e)| (0, b, mono(s, e))));
    LinOp::from_entries(1, 4, entries)
}

/// Hom(k, V ⊗ V) as a 4 × 1 matrix.
pub fn cup(eps: i32) -> LinOp {
    let entries = (0..4).filter_map(|b| cup_value(b >> 1, b & 1, eps).map(|(s, e)| (b, 0, mono(s, e))));
    LinOp::from_entries(4, 1, entries)
}

pub fn mu(eps: i32) -> LinOp {
    LinOp::diagonal(&[0, 1].map(|b| {
        let (s, e) = mu_value(b, eps);
        mono(s, e)
    }))
}

/// mu^{⊗n} diagonal entry at basis index `b`.
pub fn mu_power_entry(n: usize, b: usize, eps: i32) -> (i32, i64) {
    (0..n).fold((1, 0), |(s, e), t| {
        let (s2, e2) = mu_value(b >> (n - 1 - t) & 1, eps);
        (s * s2, e + e2)
    })
}
