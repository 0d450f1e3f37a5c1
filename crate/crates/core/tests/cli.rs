use blobtl::cli::run;
use blobtl::rep::FusionVector;
use blobtl::tldiag::TLMorphism;

fn argv(s: &str) -> Vec<String> {
    std::iter::once("blobtl".to_string()).chain(s.split_whitespace().map(String::from)).collect()
}

#[test]
fn theta_both_methods_agree() {
    let out = run(argv("theta 2 1 1 --eps 1 --method both"));
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "q^2 + q^-2\n");
}

#[test]
fn theta_table_and_json() {
    let out = run(argv("theta --table 2 --eps -1 --method both"));
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "a\tb\tc\teps\ttheta\ttheta(1)");
    assert_eq!(lines.len(), 12);
    let out = run(argv("theta 1 1 2 --format json"));
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["theta"], "q^2 + 1 + q^-2");
    assert_eq!(v["at_one"], "3");
}

#[test]
fn decompose_example() {
    let out = run(vec!["blobtl", "decompose", "--labels", "2,-2", "--tensor", "2,2", "--eps", "1"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "{6:1,4:2,2:4,0:4,-2:4,-4:2,-6:1}\n");
    let out = run(vec!["blobtl", "decompose", "--labels", "2,-2", "--tensor", "2", "--format", "json"]);
    let v: FusionVector = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v.to_string(), "{4:1,2:1,0:2,-2:1,-4:1}");
}

#[test]
fn basis_count() {
    let out = run(argv("basis --hom 2 2"));
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("6 diagrams in Hom(2, 2)\n"));
    assert_eq!(out.stdout.lines().count(), 7);
    let out = run(argv("basis --hom 1 3 --format json"));
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["count"], 6);
    assert_eq!(run(argv("basis --hom 1 2")).code, 1);
}

#[test]
fn trace_and_projector() {
    assert_eq!(run(argv("trace --n 3 --eps 1")).stdout, "-q^3 - q^-3\n");
    let out = run(argv("jw --kind d --n 2 --eps -1 --format json"));
    assert_eq!(out.code, 0);
    let d = TLMorphism::from_json(out.stdout.trim()).unwrap();
    assert_eq!(d.source(), 2);
    assert!(d.is_type_d());
    let text = run(argv("jw --kind b+ --n 2"));
    assert!(text.stdout.starts_with("b+_2, eps = 1, 6 terms\n"));
}

#[test]
fn verify_exit_codes() {
    let out = run(argv("verify --suite relations --max-n 2"));
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("0 failed"));
    let out = run(argv("verify --suite theta --max-n 2 --eps -1 --format json"));
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v[0]["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn usage_and_domain_errors() {
    let out = run(argv("theta 2 1 1 --bogus"));
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("Usage"));
    assert_eq!(run(argv("jw --kind a --n 2 --eps 2")).code, 1);
    assert_eq!(run(argv("theta 1 0 2 --method matrix")).code, 1);
    assert_eq!(run(argv("jw --kind a --n 0")).code, 1);
    let help = run(argv("--help"));
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("verify"));
}

#[test]
fn output_is_deterministic() {
    for cmd in ["jw --kind d --n 3 --eps -1 --format json", "theta --table 3 --method both", "basis --hom 3 3"] {
        assert_eq!(run(argv(cmd)), run(argv(cmd)));
    }
}
