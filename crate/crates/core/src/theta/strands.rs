//! Strand-removal identities as matrix identities under Ψ.

use super::closure::partial_closure_last_op;
use crate::error::{Error, Result};
use crate::jw::{jw_image_or_empty, ProjectorKind};
use crate::qfield::{qint, signed, RatFunc};
use crate::report::Report;
use crate::rep::{psi, LinOp};
use crate::tldiag::{cap_block, gen_u};

/// Parameter ranges for [`strand_removal_identities`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrandLimits {
    /// Closing one strand of a_n: 1 ≤ n ≤ this.
    pub close_type_a: usize,
    /// U_n d_n U_n against U_n d_{n-1}: 2 ≤ n ≤ this.
    pub close_type_d: usize,
    /// Relocating strands past two type A projectors: 1 ≤ i, j and
    /// k ≥ 0 with i, j, k ≤ this.
    pub relocate: usize,
    /// Skip relocation cases on more strands than this.
    pub relocate_strands: usize,
}

impl Default for StrandLimits {
    fn default() -> Self {
        Self { close_type_a: 5, close_type_d: 4, relocate: 3, relocate_strands: 7 }
    }
}

fn a_image(n: usize, eps: i32) -> LinOp {
    (*jw_image_or_empty(ProjectorKind::A, n, eps)).clone()
}

fn id(n: usize) -> LinOp {
    LinOp::identity(1 << n)
}

/// Right closure of the last strand of a_n equals -eps [n+1]/[n] a_{n-1}.
pub fn close_type_a_strand(n: usize, eps: i32) -> (LinOp, LinOp) {
    let lhs = partial_closure_last_op(&a_image(n, eps), eps);
    let coeff = signed(-eps, &(&qint(n as i64 + 1) / &qint(n as i64)));
    (lhs, a_image(n - 1, eps).scale(&coeff))
}

/// Both sides of U_n (d_n ⊗ 1) U_n = -eps (q^n+q^-n)/(q^(n-1)+q^(1-n)) U_n (d_{n-1} ⊗ 1⊗1).
pub fn close_type_d_strand(n: usize, eps: i32) -> Result<(LinOp, LinOp)> {
    let u = psi(&gen_u(n, n + 1, eps)?);
    let dn = jw_image_or_empty(ProjectorKind::D, n, eps).kron(&id(1));
    let dm = jw_image_or_empty(ProjectorKind::D, n - 1, eps).kron(&id(2));
    let coeff = signed(-eps, &(&RatFunc::q_sym(n as i64) / &RatFunc::q_sym(n as i64 - 1)));
    Ok((&(&u * &dn) * &u, (&u * &dm).scale(&coeff)))
}

/// Both sides of the relocation identity on i+2j+k-2 strands:
/// a_{i+k} · cap(i, j-1, k) · (a_{i+j-1} ⊗ 1) · (1 ⊗ a_{j+k}) =
/// eps^(j-1) [i]/[i+j-1] · a_{i+k} · cap(i-1, j-1, k+1) · (a_{i+j-2} ⊗ a_{j+k}).
pub fn relocate_strands(i: usize, j: usize, k: usize, eps: i32) -> Result<(LinOp, LinOp)> {
    if i == 0 || j == 0 {
        return Err(Error::Domain(format!("relocation needs i, j ≥ 1, got ({i}, {j}, {k})")));
    }
    let out = a_image(i + k, eps);
    let cap_l = psi(&cap_block(i, j - 1, k, eps));
    let cap_r = psi(&cap_block(i - 1, j - 1, k + 1, eps));
    let upper = a_image(i + j - 1, eps).kron(&id(j + k - 1));
    let lower = id(i + j - 2).kron(&a_image(j + k, eps));
    let lhs = &(&(&out * &cap_l) * &upper) * &lower;
    let sign = if eps < 0 && j % 2 == 0 { -1 } else { 1 };
    let coeff = signed(sign, &(&qint(i as i64) / &qint((i + j - 1) as i64)));
    let both = a_image(i + j - 2, eps).kron(&a_image(j + k, eps));
    let rhs = (&(&out * &cap_r) * &both).scale(&coeff);
    Ok((lhs, rhs))
}

pub fn strand_removal_identities(limits: StrandLimits, eps: i32) -> Result<Report> {
    let mut r = Report::new(format!("strand removal identities, eps = {eps}"));
    for n in 1..=limits.close_type_a {
        let (lhs, rhs) = close_type_a_strand(n, eps);
        r.check(format!("closing the last strand of a_{n} gives -eps[{}]/[{n}] a_{}", n + 1, n - 1), lhs == rhs);
    }
    for n in 2..=limits.close_type_d {
        let (lhs, rhs) = close_type_d_strand(n, eps)?;
        r.check(format!("U_{n} d_{n} U_{n} = c U_{n} d_{}", n - 1), lhs == rhs);
    }
    for i in 1..=limits.relocate {
        for j in 1..=limits.relocate {
            for k in 0..=limits.relocate {
                if i + j < 2 || i + 2 * j + k - 2 > limits.relocate_strands {
                    continue;
                }
                let (lhs, rhs) = relocate_strands(i, j, k, eps)?;
                r.check(format!("strand relocation at (i, j, k) = ({i}, {j}, {k})"), lhs == rhs);
            }
        }
    }
    Ok(r)
}
