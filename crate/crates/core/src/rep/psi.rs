//! The Schur-Weyl functor: diagrams to matrices on tensor powers of V.
//!
//! Bottom point p is input factor p (left to right), top point with
//! left-to-right index t is output factor t; factor 0 is the most significant
//! bit. A dot is a κ on the geometrically left leg of its arc.

use std::collections::BTreeMap;

use super::linalg::{LinOp, Vector};
use super::structure::{cap_value, cup_value, mono};
use crate::qfield::RatFunc;
use crate::tldiag::{Diagram, TLMorphism};

/// Signed monomial `sign * q^exp`.
pub type Mono = (i32, i64);

fn bit(x: usize, n: usize, factor: usize) -> usize {
    x >> (n - 1 - factor) & 1
}

/// Column `inp` of Ψ(d) as (output index, monomial) pairs.
pub fn psi_column(d: &Diagram, eps: i32, inp: usize) -> Vec<(usize, Mono)> {
    let (m, k) = (d.bottom(), d.top());
    let mut sign = 1;
    let mut exp = 0;
    let mut out = 0usize;
    let mut cups: Vec<(usize, usize, usize)> = Vec::new();
    let top_factor = |pos: usize| m + k - 1 - pos;
    for (&(i, j), &dot) in d.arcs().iter().zip(d.dots()) {
        let dot = dot as usize;
        if j < m {
            match cap_value(bit(inp, m, i) ^ dot, bit(inp, m, j), eps) {
                None => return Vec::new(),
                Some((s, e)) => {
                    sign *= s;
                    exp += e;
                }
            }
        } else if i < m {
            out |= (bit(inp, m, i) ^ dot) << (k - 1 - top_factor(j));
        } else {
            // larger position = smaller top index = left leg
            cups.push((k - 1 - top_factor(j), k - 1 - top_factor(i), dot));
        }
    }
    let mut col = vec![(out, (sign, exp))];
    for (lshift, rshift, dot) in cups {
        let mut next = Vec::with_capacity(2 * col.len());
        for &(o, (s, e)) in &col {
            for (a, b) in [(0, 1), (1, 0)] {
                let (s2, e2) = cup_value(a, b, eps).expect("cup support");
                next.push((o | (a ^ dot) << lshift | b << rshift, (s * s2, e + e2)));
            }
        }
        col = next;
    }
    col
}

/// Entry (out, inp) of Ψ(d).
pub fn psi_entry(d: &Diagram, eps: i32, out: usize, inp: usize) -> Option<Mono> {
    let (m, k) = (d.bottom(), d.top());
    let (mut sign, mut exp) = (1, 0);
    let top_factor = |pos: usize| m + k - 1 - pos;
    for (&(i, j), &dot) in d.arcs().iter().zip(d.dots()) {
        let dot = dot as usize;
        let (s, e) = if j < m {
            cap_value(bit(inp, m, i) ^ dot, bit(inp, m, j), eps)?
        } else if i < m {
            if bit(out, k, top_factor(j)) != bit(inp, m, i) ^ dot {
                return None;
            }
            (1, 0)
        } else {
            cup_value(bit(out, k, top_factor(j)) ^ dot, bit(out, k, top_factor(i)), eps)?
        };
        sign *= s;
        exp += e;
    }
    Some((sign, exp))
}

pub fn psi_diagram(d: &Diagram, eps: i32) -> LinOp {
    let (m, k) = (d.bottom(), d.top());
    let cols = (0..1usize << m)
        .map(|inp| {
            Vector::from_entries(1 << k, psi_column(d, eps, inp).into_iter().map(|(o, (s, e))| (o, mono(s, e))))
        })
        .collect();
    LinOp::from_columns(1 << k, cols)
}

fn scaled(c: &RatFunc, (s, e): Mono) -> RatFunc {
    let x = c.shift(e);
    if s < 0 {
        -x
    } else {
        x
    }
}

/// Ψ(f) as a 2^target × 2^source matrix.
pub fn psi(f: &TLMorphism) -> LinOp {
    let (m, k, eps) = (f.source(), f.target(), f.eps());
    let cols = (0..1usize << m)
        .map(|inp| {
            let mut acc: BTreeMap<usize, Vec<RatFunc>> = BTreeMap::new();
            for (d, c) in f.terms() {
                for (o, mn) in psi_column(d, eps, inp) {
                    acc.entry(o).or_default().push(scaled(c, mn));
                }
            }
            Vector::from_entries(1 << k, acc.into_iter().map(|(o, xs)| (o, RatFunc::sum(&xs))))
        })
        .collect();
    LinOp::from_columns(1 << k, cols)
}

/// Diagonal entry `b` of Ψ(f), for square f.
pub fn psi_diagonal_entry(f: &TLMorphism, b: usize) -> RatFunc {
    let terms: Vec<RatFunc> = f
        .terms()
        .filter_map(|(d, c)| psi_entry(d, f.eps(), b, b).map(|mn| scaled(c, mn)))
        .collect();
    RatFunc::sum(&terms)
}
