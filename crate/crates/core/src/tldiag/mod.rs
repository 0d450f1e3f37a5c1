//! Type B Temperley-Lieb blob diagrams: basis, stacking with loop and dot
//! reduction, generators and the sign involution.

mod diagram;
mod generators;
mod json;
mod morphism;

pub use diagram::{enumerate_basis, Diagram, Stacked};
pub use generators::{cap_block, cup_block, gen_s0, gen_u, gen_u0, hecke_image, identity, Hecke};
pub use json::{MorphismJson, TermJson};
pub use morphism::TLMorphism;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TlError {
    #[error("shape mismatch: {left} vs {right} points")]
    ShapeMismatch { left: usize, right: usize },
    #[error("eps mismatch")]
    EpsMismatch,
    #[error("closure violation: {0}")]
    ClosureViolation(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
}
