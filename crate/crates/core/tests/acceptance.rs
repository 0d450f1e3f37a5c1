//! Acceptance criteria 1-9, one PASS/FAIL line each, exact equality throughout.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.
//! Lines marked "known" check closed forms that disagree with the network
//! values; they are expected to fail and the test asserts that they do.

use blobtl::jw::{jw, projector_image, ProjectorKind};
use blobtl::qfield::{qint, rat, signed, RatFunc};
use blobtl::report::Report;
use blobtl::suites;
use blobtl::tldiag::{gen_s0, gen_u, identity};

struct Line {
    id: &'static str,
    what: &'static str,
    report: Report,
    expect_pass: bool,
}

fn merged(title: &str, parts: impl IntoIterator<Item = Report>) -> Report {
    let mut r = Report::new(title);
    for p in parts {
        for c in p.checks {
            r.check(format!("{}: {}", p.title, c.name), c.passed);
        }
    }
    r
}

const EPS: [i32; 2] = [1, -1];

fn criterion_1() -> Report {
    merged("relations", EPS.iter().flat_map(|&e| (1..=4).map(move |n| suites::algebra_relations(n, e).unwrap())))
}

fn criterion_2() -> Report {
    let counts = (1..=6).map(suites::basis_count);
    let ranks = EPS.iter().flat_map(|&e| (1..=4).map(move |n| suites::psi_rank(n, e)));
    merged("Schur-Weyl", counts.chain(ranks))
}

fn criterion_3() -> Report {
    merged("homomorphism", EPS.iter().flat_map(|&e| (1..=3).map(move |n| suites::homomorphism(n, e).unwrap())))
}

fn criterion_4() -> Report {
    merged("eigenbasis", EPS.iter().flat_map(|&e| (1..=6).map(move |n| suites::eigen_structure(n, e))))
}

fn example_two_strand(eps: i32) -> Report {
    let mut r = Report::new(format!("six-term b+_2, eps = {eps}"));
    let b = jw(ProjectorKind::BPlus, 2, eps).unwrap();
    let s0 = gen_s0(2, eps).unwrap();
    let u1 = gen_u(1, 2, eps).unwrap();
    let c = signed(eps, &(&RatFunc::one() / &(&RatFunc::from_int(2) * &qint(2))));
    let half = RatFunc::from_rational(rat(1, 2));
    let cupcaps = &(&(&u1 + &(&s0 * &u1)) + &(&u1 * &s0)) + &(&(&s0 * &u1) * &s0);
    let expected = &(&identity(2, eps) + &s0).scale(&half) + &cupcaps.scale(&c);
    r.check("½(1 + s0) + eps/(2[2]) (U_1 + s0U_1 + U_1s0 + s0U_1s0)", *b == expected && b.len() == 6);
    r
}

fn criterion_5() -> Report {
    let suites = EPS.iter().flat_map(|&e| (1..=5).map(move |n| suites::projector_suite(n, 0, e).unwrap()));
    merged("projectors", suites.chain(EPS.iter().map(|&e| example_two_strand(e))))
}

fn criterion_6() -> Report {
    let mut parts = Vec::new();
    for eps in EPS {
        for n in 1..=4 {
            for kind in [ProjectorKind::BPlus, ProjectorKind::BMinus, ProjectorKind::D] {
                let img = projector_image(kind, n, eps).unwrap();
                let mut r = img.report.clone();
                if kind == ProjectorKind::D {
                    let mut labels: Vec<i64> = img.spanning.iter().map(|p| p.0).collect();
                    labels.sort();
                    r.check("image labels are -n and n", labels == [-(n as i64), n as i64]);
                }
                parts.push(r);
            }
        }
    }
    merged("images", parts)
}

fn criterion_7a() -> Report {
    merged("Θ equivalence", EPS.iter().map(|&e| suites::theta_equivalence(4, e).unwrap()))
}

fn criterion_7b() -> Report {
    merged("Θ base cases", EPS.iter().map(|&e| suites::theta_base_cases(4, e).unwrap()))
}

fn criterion_7b_alternative() -> Report {
    merged("Θ(a-1,1,a) with [a]/[a-1]", EPS.iter().map(|&e| suites::theta_third_case_lower_ratio(4, e).unwrap()))
}

fn criterion_7_step_alternative() -> Report {
    merged("Θ step with [c]/[c-1]", EPS.iter().map(|&e| suites::theta_step_lower_ratio(4, e).unwrap()))
}

fn criterion_7c() -> Report {
    merged("trace formula", EPS.iter().map(|&e| suites::trace_formula(6, e).unwrap()))
}

fn criterion_8() -> Report {
    suites::fusion_counts(6)
}

fn criterion_9() -> Report {
    merged("cup and cap relations", EPS.iter().map(|&e| suites::skein_relations(e)))
}

#[test]
fn acceptance_criteria() {
    let lines = vec![
        Line { id: "1", what: "TL and Hecke relations, diagrams and matrices, n ≤ 4", report: criterion_1(), expect_pass: true },
        Line { id: "2", what: "basis counts n ≤ 6, full rank of flattened images n ≤ 4", report: criterion_2(), expect_pass: true },
        Line { id: "3", what: "Ψ respects composition on all basis pairs, n ≤ 3", report: criterion_3(), expect_pass: true },
        Line { id: "4", what: "eigenbasis labels, multiplicities and invertibility, n ≤ 6", report: criterion_4(), expect_pass: true },
        Line { id: "5", what: "projector characterization and identities n ≤ 5, six-term b+_2", report: criterion_5(), expect_pass: true },
        Line { id: "6", what: "projector images and eigenlines, n ≤ 4", report: criterion_6(), expect_pass: true },
        Line { id: "7a", what: "Θ recursion equals matrix evaluation, entries ≤ 4", report: criterion_7a(), expect_pass: true },
        Line { id: "7b", what: "Θ base cases (1), (2) and Θ(a-1,1,a) = (-eps)^a [a+1]/[a] (q^(a-1)+q^(1-a))", report: criterion_7b(), expect_pass: true },
        Line { id: "7b-known", what: "known: Θ(a-1,1,a) = (-eps)^a [a]/[a-1] (q^(a-1)+q^(1-a))", report: criterion_7b_alternative(), expect_pass: false },
        Line { id: "7-step-known", what: "known: Θ step with -eps [c]/[c-1]", report: criterion_7_step_alternative(), expect_pass: false },
        Line { id: "7c", what: "closure of d_n = (-eps)^n (q^n + q^-n), n ≤ 6", report: criterion_7c(), expect_pass: true },
        Line { id: "8", what: "fusion multiplicities and Hom dimensions", report: criterion_8(), expect_pass: true },
        Line { id: "9", what: "snake, circles, H̄ = cup∘cap, reflection equation", report: criterion_9(), expect_pass: true },
    ];
    let seven: Vec<&Line> = lines.iter().filter(|l| l.id.starts_with('7')).collect();
    let seven_passed = seven.iter().all(|l| l.report.passed());
    let mut unexpected = Vec::new();
    for l in &lines {
        let passed = l.report.passed();
        let n = l.report.checks.len();
        let failed = l.report.failures().count();
        println!("{} {:<15} {} ({n} checks, {failed} failed)", if passed { "PASS" } else { "FAIL" }, l.id, l.what);
        for c in l.report.failures().take(5) {
            println!("       failed: {}", c.name);
        }
        if passed != l.expect_pass {
            unexpected.push(l.id);
        }
        if l.id == "7c" {
            println!("{} {:<15} criterion 7 overall", if seven_passed { "PASS" } else { "FAIL" }, "7");
        }
    }
    assert!(unexpected.is_empty(), "unexpected outcome for {unexpected:?}");
}
