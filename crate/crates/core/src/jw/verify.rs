use std::sync::Arc;

use super::{jw, jw_d_recursive, jw_image, jw_or_empty, ProjectorKind};
use crate::error::{Error, Result};
use crate::qfield::{rat, signed, RatFunc};
use crate::report::Report;
use crate::rep::{eigenbasis, rank, special_vector, LinOp, SpecialKind, Vector};
use crate::tldiag::{gen_s0, gen_u, gen_u0, Diagram, TLMorphism};

/// Characterizing properties of a projector of `kind` on `p.source()` strands:
/// idempotent, nonzero, killed by every U_i on both sides, plus the s0
/// eigenvalue for type B and U_0-annihilation, σ-invariance and s0-conjugation
/// invariance for type D.
pub fn check_projector(p: &TLMorphism, kind: ProjectorKind) -> Report {
    let n = p.source();
    let eps = p.eps();
    let mut r = Report::new(format!("{kind} projector on {n} strands, eps = {eps}"));
    r.check("p·p = p", &(p * p) == p);
    r.check("p ≠ 0", !p.is_zero());
    for i in 1..n {
        let u = gen_u(i, n, eps).expect("valid index");
        r.check(format!("U_{i}·p = 0"), (&u * p).is_zero());
        r.check(format!("p·U_{i} = 0"), (p * &u).is_zero());
    }
    let s0 = gen_s0(n, eps).expect("n >= 1");
    if let Some(eta) = kind.eta() {
        let target = p.scale(&RatFunc::from_int(eta as i64));
        r.check(format!("s0·p = {eta:+}p"), (&s0 * p) == target);
        r.check(format!("p·s0 = {eta:+}p"), (p * &s0) == target);
    }
    if kind == ProjectorKind::D {
        if n >= 2 {
            let u0 = gen_u0(n, eps).expect("n >= 2");
            r.check("U_0·p = 0", (&u0 * p).is_zero());
            r.check("p·U_0 = 0", (p * &u0).is_zero());
        }
        r.check("σ(p) = p", &p.sigma() == p);
        r.check("s0·p·s0 = p", &(&(&s0 * p) * &s0) == p);
        r.check("p has only even-dot diagrams", p.is_type_d());
    }
    r
}

pub fn verify_characterization(kind: ProjectorKind, n: usize, eps: i32) -> Result<Report> {
    Ok(check_projector(&*jw(kind, n, eps)?, kind))
}

fn embed(p: &TLMorphism, n: usize) -> TLMorphism {
    p.tensor_right_identity(n - p.source())
}

/// Box absorption, orthogonality of the two type B projectors, the symmetry
/// formula b_η = ½(d + η s0 d), and absorption of the type A projector by d.
pub fn structural_identities(n: usize, eps: i32) -> Result<Report> {
    let mut r = Report::new(format!("structural identities, n = {n}, eps = {eps}"));
    let d = jw(ProjectorKind::D, n, eps)?;
    let s0 = gen_s0(n, eps)?;
    let half = RatFunc::from_rational(rat(1, 2));
    for eta in [1, -1] {
        let kind = ProjectorKind::b(eta);
        let other = ProjectorKind::b(-eta);
        let bn = jw(kind, n, eps)?;
        for m in 1..=n {
            let bm = embed(&*jw(kind, m, eps)?, n);
            r.check(format!("{kind}_{n}·({kind}_{m}⊗id) = {kind}_{n}"), &(&*bn * &bm) == &*bn);
            r.check(format!("({kind}_{m}⊗id)·{kind}_{n} = {kind}_{n}"), &(&bm * &*bn) == &*bn);
            let om = embed(&*jw(other, m, eps)?, n);
            r.check(format!("{kind}_{n}·({other}_{m}⊗id) = 0"), (&*bn * &om).is_zero());
            r.check(format!("({other}_{m}⊗id)·{kind}_{n} = 0"), (&om * &*bn).is_zero());
        }
        let sym = (&*d + &(&s0 * &*d).scale(&RatFunc::from_int(eta as i64))).scale(&half);
        r.check(format!("½(d_{n} {} s0·d_{n}) = {kind}_{n}", if eta > 0 { "+" } else { "-" }), sym == *bn);
    }
    let a = jw(ProjectorKind::A, n, eps)?;
    r.check(format!("d_{n}·a_{n} = d_{n}"), &(&*d * &*a) == &*d);
    r.check(format!("a_{n}·d_{n} = d_{n}"), &(&*a * &*d) == &*d);
    Ok(r)
}

/// Agreement of the two type D constructions, σ(b_+) = b_-, the ⟨1, s0⟩
/// component of b_±, and the U_n · U_n trace identities for b_± and d.
pub fn recursion_identities(n: usize, eps: i32) -> Result<Report> {
    let mut r = Report::new(format!("recursion identities, n = {n}, eps = {eps}"));
    let d = jw(ProjectorKind::D, n, eps)?;
    r.check(format!("b+_{n} + b-_{n} = d_{n} (own recursion)"), *d == *jw_d_recursive(n, eps)?);
    let bp = jw(ProjectorKind::BPlus, n, eps)?;
    let bm = jw(ProjectorKind::BMinus, n, eps)?;
    r.check(format!("σ(b+_{n}) = b-_{n}"), bp.sigma() == *bm);
    let id = Diagram::identity(n);
    let mut dots = vec![false; n];
    dots[0] = true;
    let dotted = id.with_dots(dots);
    let half = RatFunc::from_rational(rat(1, 2));
    for (eta, b) in [(1, &bp), (-1, &bm)] {
        let ok = b.coefficient(&id) == half && b.coefficient(&dotted) == signed(eta, &half);
        r.check(format!("⟨1,s0⟩-component of {}_{n} is ½(1 {} s0)", ProjectorKind::b(eta), if eta > 0 { "+" } else { "-" }), ok);
    }
    // U_n X U_n = -eps (q^n + q^-n)/(q^(n-1) + q^-(n-1)) U_n Y on n+1 strands
    let un = gen_u(n, n + 1, eps)?;
    let coeff = signed(-eps, &(&RatFunc::q_sym(n as i64) / &RatFunc::q_sym(n as i64 - 1)));
    let mut kinds = vec![ProjectorKind::BPlus, ProjectorKind::BMinus];
    if n >= 2 {
        kinds.push(ProjectorKind::D);
    }
    for kind in kinds {
        let x = embed(&jw_or_empty(kind, n, eps), n + 1);
        let y = embed(&jw_or_empty(kind, n - 1, eps), n + 1);
        let lhs = &(&un * &x) * &un;
        let rhs = (&un * &y).scale(&coeff);
        r.check(format!("U_{n}·{kind}_{n}·U_{n} = c·U_{n}·{kind}_{}", n - 1), lhs == rhs);
    }
    Ok(r)
}

/// Ψ of a type B or D projector with the eigenvectors spanning its image.
pub struct ProjectorImage {
    pub op: Arc<LinOp>,
    /// (label, vector) pairs the image is expected to be spanned by.
    pub spanning: Vec<(i64, Vector)>,
    pub report: Report,
}

/// The eigenvector built from v_0 (start = 1) or w_0 (start = -1) by always
/// extending towards the label of largest absolute value.
pub fn extremal_vector(start: i64, n: usize, eps: i32) -> (i64, Vector) {
    let e = eps as i64;
    let first = if start > 0 { SpecialKind::V } else { SpecialKind::W };
    let mut label = start;
    let mut z = special_vector(first, 0, eps);
    for _ in 1..n {
        let (next, kind) = if (e * label + 1).abs() > (e * label - 1).abs() {
            (e * label + 1, SpecialKind::V)
        } else {
            (e * label - 1, SpecialKind::W)
        };
        z = z.kron(&special_vector(kind, label, eps));
        label = next;
    }
    (label, z)
}

pub fn projector_image(kind: ProjectorKind, n: usize, eps: i32) -> Result<ProjectorImage> {
    let starts: Vec<i64> = match kind {
        ProjectorKind::A => return Err(Error::Domain("projector_image is defined for b+, b-, d".into())),
        // s0 acts on v_0 by eps and on w_0 by -eps
        ProjectorKind::BPlus | ProjectorKind::BMinus => vec![(kind.eta().unwrap() * eps) as i64],
        ProjectorKind::D => vec![1, -1],
    };
    let op = jw_image(kind, n, eps)?;
    let spanning: Vec<(i64, Vector)> = starts.iter().map(|&s| extremal_vector(s, n, eps)).collect();
    let mut r = Report::new(format!("image of {kind}_{n}, eps = {eps}"));
    r.check("Ψ(p)² = Ψ(p)", &(&*op * &*op) == &*op);
    r.check(format!("rank Ψ(p) = {}", spanning.len()), rank(op.columns()) == spanning.len());
    for (label, v) in &spanning {
        r.check(format!("Ψ(p) fixes the label {label} vector"), op.apply(v) == *v);
    }
    let labels: Vec<i64> = spanning.iter().map(|p| p.0).collect();
    let basis = eigenbasis(n, eps);
    for (label, v) in &spanning {
        r.check(format!("label {label} vector is in the eigenbasis"), basis.iter().any(|(l, z)| l == label && z == v));
    }
    let others = basis.iter().filter(|(l, _)| !labels.contains(l));
    r.check("Ψ(p) annihilates all other eigenvectors", others.into_iter().all(|(_, z)| op.apply(z).is_zero()));
    Ok(ProjectorImage { op, spanning, report: r })
}
