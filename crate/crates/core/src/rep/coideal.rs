use super::linalg::{LinOp, Vector};
use super::structure::mono;
use crate::qfield::{signed, RatFunc};

/// B acting on V^{⊗n}: Σ_i id^{⊗(i-1)} ⊗ B ⊗ (K^-1)^{⊗(n-i)}, where B swaps x
/// and y with sign eps and K^-1 = diag(eps q^-1, eps q).
pub fn b_operator(n: usize, eps: i32) -> LinOp {
    let dim = 1usize << n;
    let cols = (0..dim)
        .map(|b| {
            let entries = (0..n).map(|i| {
                // factors after i carry K^-1
                let (mut sign, mut exp) = (eps, 0i64);
                for t in i + 1..n {
                    sign *= eps;
                    exp += if b >> (n - 1 - t) & 1 == 0 { -1 } else { 1 };
                }
                (b ^ 1 << (n - 1 - i), mono(sign, exp))
            });
            Vector::from_entries(dim, entries)
        })
        .collect();
    LinOp::from_columns(dim, cols)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    V,
    W,
}

/// v_n = x + eps q^(eps n) y, w_n = x - eps q^(-eps n) y.
pub fn special_vector(kind: SpecialKind, n: i64, eps: i32) -> Vector {
    let e = eps as i64;
    let ycoef = match kind {
        SpecialKind::V => signed(eps, &RatFunc::q_pow(e * n)),
        SpecialKind::W => signed(-eps, &RatFunc::q_pow(-e * n)),
    };
    Vector::from_entries(2, [(0, RatFunc::one()), (1, ycoef)])
}

/// Eigenvectors of B on V^{⊗n} with integer labels m (eigenvalue [m]):
/// (1, v_0), (-1, w_0), and (m, z) ↦ (eps m + 1, z ⊗ v_m), (eps m - 1, z ⊗ w_m).
pub fn eigenbasis(n: usize, eps: i32) -> Vec<(i64, Vector)> {
    assert!(n >= 1, "eigenbasis needs n >= 1");
    let mut cur = vec![
        (1, special_vector(SpecialKind::V, 0, eps)),
        (-1, special_vector(SpecialKind::W, 0, eps)),
    ];
    let e = eps as i64;
    for _ in 1..n {
        cur = cur
            .into_iter()
            .flat_map(|(m, z)| {
                let v = z.kron(&special_vector(SpecialKind::V, m, eps));
                let w = z.kron(&special_vector(SpecialKind::W, m, eps));
                [(e * m + 1, v), (e * m - 1, w)]
            })
            .collect();
    }
    cur
}

/// The columns of `eigenbasis(n, eps)` as a matrix.
pub fn eigenbasis_matrix(n: usize, eps: i32) -> LinOp {
    LinOp::from_columns(1 << n, eigenbasis(n, eps).into_iter().map(|p| p.1).collect())
}
