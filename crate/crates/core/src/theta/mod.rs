//! Type D theta networks: admissibility, Markov closures, the closed-diagram
//! matrix evaluation and the recursive evaluator.
//!
//! Θ(a,b,c) is the scalar of the closed network built from d_a, the type A
//! projectors a_b and a_c, and j = (a+c-b)/2, k = (a+b-c)/2, i = (b+c-a)/2
//! connecting strands; it is 0 on non-admissible triples.

mod closure;
mod strands;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

pub use closure::{markov_closure, markov_closure_op, partial_closure_last};
pub use strands::{strand_removal_identities, StrandLimits};

use crate::error::{Error, Result};
use crate::jw::{jw_image_or_empty, ProjectorKind};
use crate::qfield::batch::{Batch, IntLaurent};
use crate::qfield::{qint, signed, RatFunc};
use crate::rep::structure::mu_power_entry;
use crate::rep::{psi_column, LinOp};
use crate::tldiag::{cap_block, cup_block};

pub fn is_admissible(a: i64, b: i64, c: i64) -> bool {
    let (x, y, z) = (b + c - a, a + c - b, a + b - c);
    a >= 0 && b >= 0 && c >= 0 && x >= 0 && y >= 0 && z >= 0 && x % 2 == 0
}

/// (i, j, k) = ((b+c-a)/2, (a+c-b)/2, (a+b-c)/2) for an admissible triple.
pub fn ijk(a: i64, b: i64, c: i64) -> Result<(usize, usize, usize)> {
    if !is_admissible(a, b, c) {
        return Err(Error::Domain(format!("({a}, {b}, {c}) is not admissible")));
    }
    Ok((((b + c - a) / 2) as usize, ((a + c - b) / 2) as usize, ((a + b - c) / 2) as usize))
}

fn check_eps(eps: i32) -> Result<()> {
    if eps == 1 || eps == -1 {
        Ok(())
    } else {
        Err(Error::Domain(format!("eps must be 1 or -1, got {eps}")))
    }
}

/// Θ as the Markov closure of N = (d_a ⊗ a_b), then cap_block(j,k,i), then
/// a_c, then cup_block(j,k,i), on a+b strands, evaluated at matrix level.
///
/// Uses tr(μ^{⊗(a+b)} Ψ(N)) = tr(Ψ(a_c) · M) with
/// M = Ψ(cap) · (Ψ(d_a) ⊗ Ψ(a_b)) · μ^{⊗(a+b)} · Ψ(cup) acting on c strands.
pub fn theta_matrix(a: i64, b: i64, c: i64, eps: i32) -> Result<RatFunc> {
    check_eps(eps)?;
    let (i, j, k) = ijk(a, b, c)?;
    let (a, b, c) = (a as usize, b as usize, c as usize);
    let p = jw_image_or_empty(ProjectorKind::D, a, eps);
    let qb = jw_image_or_empty(ProjectorKind::A, b, eps);
    let qc = jw_image_or_empty(ProjectorKind::A, c, eps);
    let cup = cup_block(j, k, i, eps);
    let cap = cap_block(j, k, i, eps);
    let cup_d = cup.terms().next().expect("single diagram").0.clone();
    let cap_d = cap.terms().next().expect("single diagram").0.clone();

    let pb = Batch::new(p.columns().iter().flat_map(|v| v.entries().map(|e| e.1)));
    let qbb = Batch::new(qb.columns().iter().flat_map(|v| v.entries().map(|e| e.1)));
    let qcb = Batch::new(qc.columns().iter().flat_map(|v| v.entries().map(|e| e.1)));
    let pcols = batched_columns(&p, &pb);
    let qcols = batched_columns(&qb, &qbb);
    let ccols = batched_columns(&qc, &qcb);

    let n = a + b;
    let low_mask = (1usize << b) - 1;
    let mut total = IntLaurent::default();
    for e in 0..1usize << c {
        // column e of M, indexed by c-strand basis
        let mut col: HashMap<usize, IntLaurent> = HashMap::new();
        for (idx, (s0, e0)) in psi_column(&cup_d, eps, e) {
            let (s1, e1) = mu_power_entry(n, idx, eps);
            let (u, v) = (idx >> b, idx & low_mask);
            for (r1, x) in &pcols[u] {
                for (r2, y) in &qcols[v] {
                    let capped = psi_column(&cap_d, eps, r1 << b | r2);
                    let Some(&(out, (s2, e2))) = capped.first() else { continue };
                    let term = x.mul(y).shifted(s0 * s1 * s2, e0 + e1 + e2);
                    *col.entry(out).or_default() += &term;
                }
            }
        }
        // tr(Ψ(a_c) · M) picks Ψ(a_c)[e, r] · M[r, e]
        for (r, m) in col {
            if let Some(x) = ccols[r].iter().find(|(row, _)| *row == e).map(|t| &t.1) {
                total += &x.mul(&m);
            }
        }
    }
    Ok(Batch::joint_value(&[&pb, &qbb, &qcb], &total))
}

/// Column-wise (row, numerator) lists of `op` against its batch.
fn batched_columns(op: &LinOp, batch: &Batch) -> Vec<Vec<(usize, IntLaurent)>> {
    let mut nums = batch.nums.iter();
    op.columns()
        .iter()
        .map(|v| v.entries().map(|(r, _)| (r, nums.next().unwrap().clone())).collect())
        .collect()
}

type ThetaKey = (i64, i64, i64, i32);
static THETA: OnceLock<Mutex<HashMap<ThetaKey, RatFunc>>> = OnceLock::new();

/// (-eps)^n.
fn sign_pow(eps: i32, n: i64) -> i32 {
    if eps < 0 || n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Θ by recursion on b.
///
/// * non-admissible: 0;
/// * a = 0: (-eps)^b [b+1] (closure of a_b);
/// * i = 0, i.e. a = b + c (includes b = 0 and b = 1, c = a-1): d_a absorbs
///   both type A boxes, giving its closure (-eps)^a (q^a + q^-a);
/// * b = 1, c = a+1: (-eps)^c [c+1]/[c] (q^a + q^-a);
/// * b, c ≥ 2: -eps [c+1]/[c] Θ(a,b-1,c-1) + eps [k]^2/([b][b-1]) Θ(a,b-2,c);
/// * b ≥ 2, c ≤ 1: Θ(a,c,b).
pub fn theta_recursive(a: i64, b: i64, c: i64, eps: i32) -> Result<RatFunc> {
    check_eps(eps)?;
    Ok(theta_rec(a, b, c, eps))
}

fn theta_rec(a: i64, b: i64, c: i64, eps: i32) -> RatFunc {
    if !is_admissible(a, b, c) {
        return RatFunc::zero();
    }
    let cache = THETA.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache lock").get(&(a, b, c, eps)) {
        return v.clone();
    }
    let v = if a == 0 {
        signed(sign_pow(eps, b), &qint(b + 1))
    } else if a == b + c {
        signed(sign_pow(eps, a), &RatFunc::q_sym(a))
    } else if b == 1 {
        let ratio = &qint(c + 1) / &qint(c);
        signed(sign_pow(eps, c), &(&ratio * &RatFunc::q_sym(a)))
    } else if c >= 2 {
        let k = (a + b - c) / 2;
        let first = signed(-eps, &(&qint(c + 1) / &qint(c)));
        let second = signed(eps, &(&qint(k).pow(2) / &(&qint(b) * &qint(b - 1))));
        let t1 = &first * &theta_rec(a, b - 1, c - 1, eps);
        let t2 = &second * &theta_rec(a, b - 2, c, eps);
        &t1 + &t2
    } else {
        theta_rec(a, c, b, eps)
    };
    cache.lock().expect("cache lock").entry((a, b, c, eps)).or_insert(v).clone()
}

/// One row of a Θ table.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct ThetaRow {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub eps: i32,
    pub theta: RatFunc,
    /// Θ at q = 1 when finite.
    pub at_one: Option<String>,
}

impl ThetaRow {
    pub fn new(a: i64, b: i64, c: i64, eps: i32, theta: RatFunc) -> Self {
        let one = crate::qfield::rat(1, 1);
        let at_one = theta.eval_at(&one).ok().map(|r| r.to_string());
        Self { a, b, c, eps, theta, at_one }
    }
}

#[cfg(test)]
mod tests;
