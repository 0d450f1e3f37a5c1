//! Linear algebra over Q(q): quantum group modules, the coideal generator B on
//! tensor powers, the Schur-Weyl functor Ψ, the exact eigenbasis of B and the
//! fusion rule.

mod coideal;
mod fusion;
mod irrep;
mod linalg;
mod psi;
mod rank;
pub mod structure;

pub use coideal::{b_operator, eigenbasis, eigenbasis_matrix, special_vector, SpecialKind};
pub use fusion::{fuse, hom_dim, FusionVector};
pub use irrep::{b_on_irrep, irrep_action, QGen};
pub use linalg::{LinOp, MatrixJson, Vector};
pub use psi::{psi, psi_column, psi_diagonal_entry, psi_diagram, psi_entry, Mono};
pub use rank::{rank, rank_at};
pub use structure::{cap, cup, hbar, kappa, mu, r_matrix};

#[cfg(test)]
mod tests;
