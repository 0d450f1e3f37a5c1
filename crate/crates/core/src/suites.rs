//! Verification suites shared by the command line and the acceptance tests.

use num_integer::binomial;

use crate::error::Result;
use crate::jw::{projector_image, recursion_identities, structural_identities, verify_characterization, ProjectorKind};
use crate::qfield::{delta, qint, rat, signed, RatFunc};
use crate::report::Report;
use crate::rep::{
    b_operator, cap, cup, eigenbasis, eigenbasis_matrix, fuse, hbar, hom_dim, kappa, psi, r_matrix, rank,
    rank_at, FusionVector, LinOp, Vector,
};
use crate::theta::{
    is_admissible, markov_closure, strand_removal_identities, theta_matrix, theta_recursive, StrandLimits,
};
use crate::tldiag::{enumerate_basis, gen_s0, gen_u, hecke_image, identity, Hecke, TLMorphism};

/// The operations the relation checks need, for diagrams and matrices alike.
trait Algebra: Clone + PartialEq {
    /// Product with `rhs` applied first.
    fn times(&self, rhs: &Self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn scaled(&self, c: &RatFunc) -> Self;
    fn unit(&self) -> Self;
    fn vanishes(&self) -> bool;
}

impl Algebra for TLMorphism {
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn scaled(&self, c: &RatFunc) -> Self {
        self.scale(c)
    }
    fn unit(&self) -> Self {
        identity(self.source(), self.eps())
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl Algebra for LinOp {
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn scaled(&self, c: &RatFunc) -> Self {
        self.scale(c)
    }
    fn unit(&self) -> Self {
        LinOp::identity(self.rows())
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

fn prod<T: Algebra>(xs: &[&T]) -> T {
    xs[1..].iter().fold(xs[0].clone(), |acc, x| acc.times(x))
}

/// s0 and U_1..U_{n-1} (u[i-1] = U_i).
fn tl_checks<T: Algebra>(r: &mut Report, tag: &str, s0: &T, u: &[T], eps: i32) {
    let d = delta(eps);
    for (x, ui) in u.iter().enumerate() {
        let i = x + 1;
        r.check(format!("{tag}: U_{i}² = δU_{i}"), ui.times(ui) == ui.scaled(&d));
        if let Some(next) = u.get(x + 1) {
            r.check(format!("{tag}: U_{i}U_{}U_{i} = U_{i}", i + 1), prod(&[ui, next, ui]) == *ui);
            r.check(format!("{tag}: U_{}U_{i}U_{} = U_{}", i + 1, i + 1, i + 1), prod(&[next, ui, next]) == *next);
        }
        for (y, uj) in u.iter().enumerate().skip(x + 2) {
            r.check(format!("{tag}: U_{i}U_{} = U_{}U_{i}", y + 1, y + 1), ui.times(uj) == uj.times(ui));
        }
        if i == 1 {
            r.check(format!("{tag}: U_1 s0 U_1 = 0"), prod(&[ui, s0, ui]).vanishes());
        } else {
            r.check(format!("{tag}: s0 U_{i} = U_{i} s0"), s0.times(ui) == ui.times(s0));
        }
    }
    r.check(format!("{tag}: s0² = 1"), s0.times(s0) == s0.unit());
}

/// s0 and H_1..H_{n-1} (h[i-1] = H_i).
fn hecke_checks<T: Algebra>(r: &mut Report, tag: &str, s0: &T, h: &[T]) {
    let c: RatFunc = "q^-1 - q".parse().expect("valid literal");
    for (x, hi) in h.iter().enumerate() {
        let i = x + 1;
        let quad = hi.unit().plus(&hi.scaled(&c));
        r.check(format!("{tag}: H_{i}² = 1 + (q^-1 - q)H_{i}"), hi.times(hi) == quad);
        if let Some(next) = h.get(x + 1) {
            r.check(format!("{tag}: H_{i}H_{}H_{i} = H_{}H_{i}H_{}", i + 1, i + 1, i + 1), prod(&[hi, next, hi]) == prod(&[next, hi, next]));
        }
        for (y, hj) in h.iter().enumerate().skip(x + 2) {
            r.check(format!("{tag}: H_{i}H_{} = H_{}H_{i}", y + 1, y + 1), hi.times(hj) == hj.times(hi));
        }
        if i == 1 {
            r.check(format!("{tag}: s0H_1s0H_1 = H_1s0H_1s0"), prod(&[s0, hi, s0, hi]) == prod(&[hi, s0, hi, s0]));
        } else {
            r.check(format!("{tag}: s0 H_{i} = H_{i} s0"), s0.times(hi) == hi.times(s0));
        }
    }
    r.check(format!("{tag}: s0² = 1"), s0.times(s0) == s0.unit());
}

fn at_position(op: &LinOp, i: usize, n: usize) -> LinOp {
    LinOp::identity(1 << (i - 1)).kron(op).kron(&LinOp::identity(1 << (n - i - 1)))
}

/// Temperley-Lieb and Hecke relations on n strands, diagrammatically and as
/// matrices, together with Ψ(image of H_i) = R on factors i, i+1.
pub fn algebra_relations(n: usize, eps: i32) -> Result<Report> {
    let mut r = Report::new(format!("algebra relations, n = {n}, eps = {eps}"));
    let s0 = gen_s0(n, eps)?;
    let u: Vec<TLMorphism> = (1..n).map(|i| gen_u(i, n, eps)).collect::<std::result::Result<_, _>>()?;
    tl_checks(&mut r, "diagrams", &s0, &u, eps);
    let (ps0, pu): (LinOp, Vec<LinOp>) = (psi(&s0), u.iter().map(psi).collect());
    tl_checks(&mut r, "matrices", &ps0, &pu, eps);

    let hs0 = hecke_image(Hecke::S0, n, eps)?;
    let h: Vec<TLMorphism> = (1..n).map(|i| hecke_image(Hecke::H(i), n, eps)).collect::<std::result::Result<_, _>>()?;
    hecke_checks(&mut r, "Hecke in diagrams", &hs0, &h);
    let ks0 = kappa().kron(&LinOp::identity(1 << (n - 1)));
    let rh: Vec<LinOp> = (1..n).map(|i| at_position(&r_matrix(eps), i, n)).collect();
    hecke_checks(&mut r, "Hecke via R-matrix", &ks0, &rh);
    r.check("Ψ(s0) = κ ⊗ 1", psi(&hs0) == ks0);
    for (x, hi) in h.iter().enumerate() {
        r.check(format!("Ψ(U_{0} + eps q^-eps) = R on factors {0}, {1}", x + 1, x + 2), psi(hi) == rh[x]);
    }
    Ok(r)
}

/// Snake identities, circle values, H̄ = cup∘cap and the reflection equation.
pub fn skein_relations(eps: i32) -> Report {
    let mut r = Report::new(format!("cup and cap relations, eps = {eps}"));
    let id = LinOp::identity(2);
    let (cp, cu) = (cap(eps), cup(eps));
    r.check("(cap ⊗ 1)(1 ⊗ cup) = 1", &cp.kron(&id) * &id.kron(&cu) == id);
    r.check("(1 ⊗ cap)(cup ⊗ 1) = 1", &id.kron(&cp) * &cu.kron(&id) == id);
    r.check("circle = -eps(q + q^-1)", (&cp * &cu).get(0, 0) == delta(eps));
    r.check("dotted circle = 0", (&(&cp * &kappa().kron(&id)) * &cu).is_zero());
    r.check("H̄ = cup ∘ cap", &cu * &cp == hbar(eps));
    r.check("cap ∘ B = 0", (&cp * &b_operator(2, eps)).is_zero());
    r.check("B ∘ cup = 0", (&b_operator(2, eps) * &cu).is_zero());
    let rr = &hbar(eps) + &LinOp::identity(4).scale(&RatFunc::q_pow(-1));
    let k = kappa().kron(&id);
    let lhs = &(&(&k * &rr) * &k) * &rr;
    let rhs = &(&(&rr * &k) * &rr) * &k;
    r.check("reflection equation for H̄ + q^-1", lhs == rhs);
    r
}

/// Rank of `vectors`: a specialization first, exact elimination if it is not full.
fn rank_certified(vectors: &[Vector], full: usize) -> usize {
    let q0 = rat(3, 2);
    match rank_at(vectors, &q0) {
        Ok(k) if k == full => k,
        _ => rank(vectors),
    }
}

pub fn basis_count(n: usize) -> Report {
    let mut r = Report::new(format!("basis count, n = {n}"));
    let count = enumerate_basis(n, n).len() as u64;
    r.check(format!("|basis of End({n})| = {count} = binom({}, {n})", 2 * n), count == binomial(2 * n as u64, n as u64));
    r
}

/// Ψ(f ∘ g) = Ψ(g)Ψ(f) on all basis pairs of End(n), and B commutes with every image.
pub fn homomorphism(n: usize, eps: i32) -> Result<Report> {
    let mut r = Report::new(format!("Ψ is a homomorphism, n = {n}, eps = {eps}"));
    let basis: Vec<TLMorphism> = enumerate_basis(n, n).into_iter().map(|d| TLMorphism::from_diagram(d, eps)).collect();
    let images: Vec<LinOp> = basis.iter().map(psi).collect();
    let mut ok = 0;
    for (f, pf) in basis.iter().zip(&images) {
        for (g, pg) in basis.iter().zip(&images) {
            if psi(&f.compose(g)?) == pg * pf {
                ok += 1;
            }
        }
    }
    let total = basis.len() * basis.len();
    r.check(format!("{ok} of {total} basis pairs compose compatibly"), ok == total);
    let b = b_operator(n, eps);
    r.check("B commutes with every Ψ(D)", images.iter().all(|p| &b * p == p * &b));
    Ok(r)
}

pub fn psi_rank(n: usize, eps: i32) -> Report {
    let mut r = Report::new(format!("faithfulness, n = {n}, eps = {eps}"));
    let flat: Vec<Vector> = enumerate_basis(n, n)
        .into_iter()
        .map(|d| psi(&TLMorphism::from_diagram(d, eps)).flatten())
        .collect();
    let full = binomial(2 * n as u64, n as u64) as usize;
    let k = rank_certified(&flat, full);
    r.check(format!("rank of the flattened images = {k}, expected {full}"), k == full);
    r
}

/// B z = [m] z on the eigenbasis, label multiplicities binom(n, k) at n - 2k,
/// and invertibility of the basis matrix.
pub fn eigen_structure(n: usize, eps: i32) -> Report {
    let mut r = Report::new(format!("eigenbasis, n = {n}, eps = {eps}"));
    let b = b_operator(n, eps);
    let basis = eigenbasis(n, eps);
    r.check("B z = [m] z for every eigenvector", basis.iter().all(|(m, z)| b.apply(z) == z.scale(&qint(*m))));
    for k in 0..=n {
        let label = n as i64 - 2 * k as i64;
        let count = basis.iter().filter(|p| p.0 == label).count() as u64;
        r.check(format!("label {label} has multiplicity binom({n}, {k})"), count == binomial(n as u64, k as u64));
    }
    let m = eigenbasis_matrix(n, eps);
    r.check("eigenbasis matrix is invertible", rank_certified(m.columns(), 1 << n) == 1 << n);
    r
}

/// Clebsch-Gordan decompositions and Hom-space dimensions over the coideal.
pub fn fusion_counts(max_n: usize) -> Report {
    let mut r = Report::new("fusion and Hom counting");
    let pm2 = FusionVector::from_pairs([(2, 1), (-2, 1)]);
    let out = fuse(&pm2, &[2, 2]);
    let mults: Vec<u64> = out.iter().map(|p| p.1).collect();
    r.check(format!("(L([2]) ⊕ L([-2])) ⊗ V_2 ⊗ V_2 = {out}"), mults == [1, 2, 4, 4, 4, 2, 1] && out.get(6) == 1 && out.get(-6) == 1);
    let v2 = fuse(&FusionVector::single(0), &[2]);
    let once = fuse(&pm2, &[2]);
    r.check("dim Hom((L([2]) ⊕ L([-2])) ⊗ V_2, V_2) = 4", hom_dim(&once, &v2) == 4);
    r.check("dim Hom((L([2]) ⊕ L([-2])) ⊗ V_2, L([2]) ⊕ L([-2])) = 2", hom_dim(&once, &pm2) == 2);
    for n in 1..=max_n {
        let vn = fuse(&FusionVector::single(0), &vec![1; n]);
        let sum: u64 = (0..=n as u64).map(|k| binomial(n as u64, k).pow(2)).sum();
        let two_n = binomial(2 * n as u64, n as u64);
        r.check(format!("dim End(V^{n}) = Σ binom({n},k)² = binom({}, {n})", 2 * n), hom_dim(&vn, &vn) == sum && sum == two_n);
    }
    r
}

/// Characterization, structural and recursion identities of the type B and D
/// projectors, plus their images under Ψ up to `image_n` strands.
pub fn projector_suite(n: usize, image_n: usize, eps: i32) -> Result<Report> {
    let mut r = Report::new(format!("projectors, n = {n}, eps = {eps}"));
    for kind in [ProjectorKind::BPlus, ProjectorKind::BMinus, ProjectorKind::D] {
        prefixed(&mut r, verify_characterization(kind, n, eps)?);
    }
    prefixed(&mut r, structural_identities(n, eps)?);
    prefixed(&mut r, recursion_identities(n, eps)?);
    if n <= image_n {
        for kind in [ProjectorKind::BPlus, ProjectorKind::BMinus, ProjectorKind::D] {
            prefixed(&mut r, projector_image(kind, n, eps)?.report);
        }
    }
    Ok(r)
}

fn prefixed(r: &mut Report, sub: Report) {
    for c in sub.checks {
        r.check(format!("{}: {}", sub.title, c.name), c.passed);
    }
}

/// Recursion against the matrix evaluation on all triples with entries ≤ max.
pub fn theta_equivalence(max: i64, eps: i32) -> Result<Report> {
    let mut r = Report::new(format!("Θ recursion against matrix evaluation, entries ≤ {max}, eps = {eps}"));
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                if is_admissible(a, b, c) {
                    let ok = theta_recursive(a, b, c, eps)? == theta_matrix(a, b, c, eps)?;
                    r.check(format!("Θ({a},{b},{c})"), ok);
                }
            }
        }
    }
    Ok(r)
}

/// (-eps)^n.
fn sign_pow(eps: i32, n: i64) -> i32 {
    if eps > 0 && n % 2 != 0 {
        -1
    } else {
        1
    }
}

/// Closed forms for b ≤ 1 against the matrix evaluation, 1 ≤ a ≤ max:
/// Θ(a,0,a) = Θ(a,1,a-1) = (-eps)^a (q^a + q^-a) and, for a ≥ 2,
/// Θ(a-1,1,a) = (-eps)^a [a+1]/[a] (q^(a-1) + q^(1-a)).
pub fn theta_base_cases(max: i64, eps: i32) -> Result<Report> {
    let mut r = Report::new(format!("Θ base cases, a ≤ {max}, eps = {eps}"));
    for a in 1..=max {
        let t = signed(sign_pow(eps, a), &RatFunc::q_sym(a));
        r.check(format!("Θ({a},0,{a})"), theta_matrix(a, 0, a, eps)? == t);
        r.check(format!("Θ({a},1,{})", a - 1), theta_matrix(a, 1, a - 1, eps)? == t);
        if a >= 2 {
            let up = signed(sign_pow(eps, a), &(&(&qint(a + 1) / &qint(a)) * &RatFunc::q_sym(a - 1)));
            r.check(format!("Θ({},1,{a})", a - 1), theta_matrix(a - 1, 1, a, eps)? == up);
        }
    }
    Ok(r)
}

/// The closed form (-eps)^a [a]/[a-1] (q^(a-1) + q^(1-a)) for Θ(a-1,1,a),
/// 2 ≤ a ≤ max, against the matrix evaluation.
pub fn theta_third_case_lower_ratio(max: i64, eps: i32) -> Result<Report> {
    let mut r = Report::new(format!("Θ(a-1,1,a) against (-eps)^a [a]/[a-1] (q^(a-1) + q^(1-a)), eps = {eps}"));
    for a in 2..=max {
        let t = signed(sign_pow(eps, a), &(&(&qint(a) / &qint(a - 1)) * &RatFunc::q_sym(a - 1)));
        r.check(format!("Θ({},1,{a})", a - 1), theta_matrix(a - 1, 1, a, eps)? == t);
    }
    Ok(r)
}

fn theta_or_zero(a: i64, b: i64, c: i64, eps: i32) -> Result<RatFunc> {
    if is_admissible(a, b, c) {
        theta_matrix(a, b, c, eps)
    } else {
        Ok(RatFunc::zero())
    }
}

/// The step Θ(a,b,c) = -eps [c]/[c-1] Θ(a,b-1,c-1) + eps [k]²/([b][b-1]) Θ(a,b-2,c)
/// on matrix values, for admissible triples with a ≥ 1, b, c ≥ 2, entries ≤ max.
pub fn theta_step_lower_ratio(max: i64, eps: i32) -> Result<Report> {
    let mut r = Report::new(format!("Θ step with first coefficient -eps [c]/[c-1], eps = {eps}"));
    for a in 1..=max {
        for b in 2..=max {
            for c in 2..=max {
                if !is_admissible(a, b, c) {
                    continue;
                }
                let k = (a + b - c) / 2;
                let first = signed(-eps, &(&qint(c) / &qint(c - 1)));
                let second = signed(eps, &(&qint(k).pow(2) / &(&qint(b) * &qint(b - 1))));
                let step = &(&first * &theta_or_zero(a, b - 1, c - 1, eps)?) + &(&second * &theta_or_zero(a, b - 2, c, eps)?);
                r.check(format!("Θ({a},{b},{c})"), theta_matrix(a, b, c, eps)? == step);
            }
        }
    }
    Ok(r)
}

/// Closure of d_n equals (-eps)^n (q^n + q^-n).
pub fn trace_formula(max_n: usize, eps: i32) -> Result<Report> {
    let mut r = Report::new(format!("closure of d_n, n ≤ {max_n}, eps = {eps}"));
    for n in 1..=max_n {
        let d = crate::jw::jw(ProjectorKind::D, n, eps)?;
        let expected = signed(sign_pow(eps, n as i64), &RatFunc::q_sym(n as i64));
        r.check(format!("closure of d_{n}"), markov_closure(&d)? == expected);
    }
    Ok(r)
}

pub fn theta_suite(max: usize, eps: i32) -> Result<Report> {
    let mut r = Report::new(format!("Θ networks, max = {max}, eps = {eps}"));
    let m = max as i64;
    prefixed(&mut r, theta_equivalence(m, eps)?);
    prefixed(&mut r, theta_base_cases(m, eps)?);
    prefixed(&mut r, trace_formula(max + 2, eps)?);
    let limits = StrandLimits { close_type_a: max + 1, close_type_d: max, ..StrandLimits::default() };
    prefixed(&mut r, strand_removal_identities(limits, eps)?);
    Ok(r)
}

pub fn relations_suite(max_n: usize, eps: i32) -> Result<Report> {
    let mut r = Report::new(format!("relations, n ≤ {max_n}, eps = {eps}"));
    for n in 1..=max_n {
        prefixed(&mut r, algebra_relations(n, eps)?);
    }
    prefixed(&mut r, skein_relations(eps));
    Ok(r)
}

/// Homomorphism checks up to `max_n`, faithfulness up to `rank_n`, basis
/// counts and eigenbases up to 6, fusion counts.
pub fn schur_weyl_suite(max_n: usize, rank_n: usize, eps: i32) -> Result<Report> {
    let mut r = Report::new(format!("Schur-Weyl, n ≤ {max_n}, rank n ≤ {rank_n}, eps = {eps}"));
    for n in 1..=6 {
        prefixed(&mut r, basis_count(n));
        prefixed(&mut r, eigen_structure(n, eps));
    }
    for n in 1..=max_n {
        prefixed(&mut r, homomorphism(n, eps)?);
    }
    for n in 1..=rank_n {
        prefixed(&mut r, psi_rank(n, eps));
    }
    prefixed(&mut r, fusion_counts(6));
    Ok(r)
}

pub fn projector_suites(max_n: usize, eps: i32) -> Result<Report> {
    let mut r = Report::new(format!("projectors, n ≤ {max_n}, eps = {eps}"));
    for n in 1..=max_n {
        prefixed(&mut r, projector_suite(n, 4, eps)?);
    }
    Ok(r)
}
