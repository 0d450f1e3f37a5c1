//! Right Markov closures as μ-weighted traces.

use crate::error::Result;
use crate::qfield::batch::{Batch, IntLaurent};
use crate::qfield::RatFunc;
use crate::rep::structure::{mono, mu_power_entry, mu_value};
use crate::rep::{psi_entry, LinOp};
use crate::tldiag::{cap_block, cup_block, TLMorphism, TlError};

/// tr(Ψ(f) · μ^{⊗n}) for f in Hom(n, n).
pub fn markov_closure(f: &TLMorphism) -> Result<RatFunc> {
    let n = square(f)?;
    let batch = Batch::new(f.terms().map(|t| t.1));
    let mut total = IntLaurent::default();
    for ((d, _), num) in f.terms().zip(&batch.nums) {
        let mut diag = IntLaurent::default();
        for b in 0..1usize << n {
            if let Some((s, e)) = psi_entry(d, f.eps(), b, b) {
                let (s2, e2) = mu_power_entry(n, b, f.eps());
                diag += &IntLaurent::monomial(s * s2, e + e2);
            }
        }
        total += &num.mul(&diag);
    }
    Ok(batch.value(&total))
}

/// tr(op · μ^{⊗n}) for a square matrix on n strands.
pub fn markov_closure_op(op: &LinOp, eps: i32) -> RatFunc {
    let n = op.rows().trailing_zeros() as usize;
    let terms: Vec<RatFunc> = (0..op.rows())
        .map(|b| {
            let (s, e) = mu_power_entry(n, b, eps);
            &op.get(b, b) * &mono(s, e)
        })
        .collect();
    RatFunc::sum(&terms)
}

/// Closes the last strand of f in Hom(n, n) to the right, giving Hom(n-1, n-1).
pub fn partial_closure_last(f: &TLMorphism) -> Result<TLMorphism> {
    let n = square(f)?;
    if n == 0 {
        return Err(TlError::IndexOutOfRange("no strand to close".into()).into());
    }
    let eps = f.eps();
    let cup = cup_block(n - 1, 1, 0, eps);
    let cap = cap_block(n - 1, 1, 0, eps);
    Ok(cup.compose(&f.tensor_right_identity(1))?.compose(&cap)?)
}

/// Matrix partial trace of the last factor weighted by μ.
pub(crate) fn partial_closure_last_op(op: &LinOp, eps: i32) -> LinOp {
    let dim = op.rows() / 2;
    let entries = op.entries().into_iter().filter(|(r, c, _)| r & 1 == c & 1).map(|(r, c, v)| {
        let (s, e) = mu_value(r & 1, eps);
        (r >> 1, c >> 1, &v * &mono(s, e))
    });
    LinOp::from_entries(dim, dim, entries)
}

fn square(f: &TLMorphism) -> Result<usize> {
    if f.source() != f.target() {
        return Err(TlError::ShapeMismatch { left: f.source(), right: f.target() }.into());
    }
    Ok(f.source())
}
