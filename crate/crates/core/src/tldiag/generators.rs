use super::diagram::Diagram;
use super::morphism::TLMorphism;
use super::TlError;
use crate::qfield::{signed, RatFunc};

pub fn identity(n: usize, eps: i32) -> TLMorphism {
    TLMorphism::from_diagram(Diagram::identity(n), eps)
}

/// Identity with a dot on the first strand.
pub fn gen_s0(n: usize, eps: i32) -> Result<TLMorphism, TlError> {
    if n == 0 {
        return Err(TlError::IndexOutOfRange("s0 needs at least one strand".into()));
    }
    let mut dots = vec![false; n];
    dots[0] = true;
    Ok(TLMorphism::from_diagram(Diagram::identity(n).with_dots(dots), eps))
}

fn u_diagram(i: usize, n: usize, dotted: bool) -> Result<Diagram, TlError> {
    if i == 0 || i >= n {
        return Err(TlError::IndexOutOfRange(format!("U_{i} on {n} strands")));
    }
    let top = |t: usize| 2 * n - 1 - t;
    let mut arcs = vec![(i - 1, i), (top(i), top(i - 1))];
    let mut dots = vec![dotted, dotted];
    for s in (0..n).filter(|&s| s != i - 1 && s != i) {
        arcs.push((s, top(s)));
        dots.push(false);
    }
    Diagram::new(n, n, arcs, dots)
}

/// Cup-cap on strands i, i+1 (1-based), 1 ≤ i ≤ n-1.
pub fn gen_u(i: usize, n: usize, eps: i32) -> Result<TLMorphism, TlError> {
    Ok(TLMorphism::from_diagram(u_diagram(i, n, false)?, eps))
}

/// U_0 = s0 U_1 s0: cup-cap on strands 1, 2 with both arcs dotted.
pub fn gen_u0(n: usize, eps: i32) -> Result<TLMorphism, TlError> {
    Ok(TLMorphism::from_diagram(u_diagram(1, n, true)?, eps))
}

/// id_j ⊗ (k nested cups) ⊗ id_i in Hom(j+i, j+2k+i).
pub fn cup_block(j: usize, k: usize, i: usize, eps: i32) -> TLMorphism {
    let (m, t) = (j + i, j + 2 * k + i);
    let top = |x: usize| m + t - 1 - x;
    let mut arcs = Vec::with_capacity(j + k + i);
    arcs.extend((0..j).map(|s| (s, top(s))));
    arcs.extend((0..i).map(|s| (j + s, top(j + 2 * k + s))));
    arcs.extend((0..k).map(|u| (top(j + 2 * k - 1 - u), top(j + u))));
    let dots = vec![false; arcs.len()];
    TLMorphism::from_diagram(Diagram::new(m, t, arcs, dots).expect("cup block is planar"), eps)
}

/// id_j ⊗ (k nested caps) ⊗ id_i in Hom(j+2k+i, j+i).
pub fn cap_block(j: usize, k: usize, i: usize, eps: i32) -> TLMorphism {
    let (m, t) = (j + 2 * k + i, j + i);
    let top = |x: usize| m + t - 1 - x;
    let mut arcs = Vec::with_capacity(j + k + i);
    arcs.extend((0..j).map(|s| (s, top(s))));
    arcs.extend((0..i).map(|s| (j + 2 * k + s, top(j + s))));
    arcs.extend((0..k).map(|u| (j + u, j + 2 * k - 1 - u)));
    let dots = vec![false; arcs.len()];
    TLMorphism::from_diagram(Diagram::new(m, t, arcs, dots).expect("cap block is planar"), eps)
}

/// Generators of the type B Hecke algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hecke {
    S0,
    /// H_i, 1-based.
    H(usize),
}

/// s0 ↦ s0, H_i ↦ U_i + eps q^(-eps) id.
pub fn hecke_image(g: Hecke, n: usize, eps: i32) -> Result<TLMorphism, TlError> {
    match g {
        Hecke::S0 => gen_s0(n, eps),
        Hecke::H(i) => {
            let c = signed(eps, &RatFunc::q_pow(-(eps as i64)));
            Ok(&gen_u(i, n, eps)? + &identity(n, eps).scale(&c))
        }
    }
}
