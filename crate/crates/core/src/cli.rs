//! Command-line front end. [`run`] parses argv and returns the exit code with
//! the buffered output; exit codes are 0 on success, 1 on usage or domain
//! errors and 2 when a verification fails.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jw::{jw, ProjectorKind};
use crate::report::Report;
use crate::rep::{fuse, FusionVector};
use crate::suites;
use crate::theta::{is_admissible, markov_closure, theta_matrix, theta_recursive, ThetaRow};
use crate::tldiag::enumerate_basis;

#[derive(Debug, Parser)]
#[command(name = "blobtl", version, about = "Type B/D Temperley-Lieb calculus over Q(q)")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Rec,
    Matrix,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Relations,
    Jw,
    SchurWeyl,
    Theta,
    All,
}

fn parse_eps(s: &str) -> std::result::Result<i32, String> {
    match s {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(format!("eps must be 1 or -1, got {s}")),
    }
}

fn parse_kind(s: &str) -> std::result::Result<ProjectorKind, String> {
    s.parse().map_err(|_| format!("kind must be one of a, b+, b-, d; got {s}"))
}

fn parse_list<T: std::str::FromStr>(s: &str) -> std::result::Result<Vec<T>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse().map_err(|_| format!("cannot parse {x:?} in {s:?}"))).collect()
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a Jones-Wenzl projector.
    Jw {
        #[arg(long, value_parser = parse_kind)]
        kind: ProjectorKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_eps)]
        eps: i32,
    },
    /// Evaluate a theta network, or a table of all admissible triples.
    Theta {
        #[arg(required_unless_present = "table", num_args = 3, value_names = ["A", "B", "C"])]
        triple: Vec<i64>,
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_eps)]
        eps: i32,
        #[arg(long, value_enum, default_value_t = Method::Rec)]
        method: Method,
        /// Tabulate every admissible triple with entries up to this bound.
        #[arg(long, conflicts_with = "triple")]
        table: Option<i64>,
    },
    /// Decompose a sum of one-dimensional modules tensored with irreducibles.
    Decompose {
        /// Comma-separated labels of the starting one-dimensional modules.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list::<i64>)]
        labels: std::vec::Vec<i64>,
        /// Comma-separated highest weights to tensor with, in order.
        #[arg(long, default_value = "", value_parser = parse_list::<u64>)]
        tensor: std::vec::Vec<u64>,
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_eps)]
        eps: i32,
    },
    /// Enumerate the diagram basis of Hom(M, K).
    Basis {
        #[arg(long, num_args = 2, value_names = ["M", "K"])]
        hom: Vec<usize>,
    },
    /// Markov closure of the type D projector on N strands.
    Trace {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_eps)]
        eps: i32,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Size bound; defaults: relations 4, jw 5, schur-weyl 3 (rank 4), theta 4.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_eps)]
        eps: i32,
    },
}

/// Exit code and buffered streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { code: 1, stdout: String::new(), stderr: text },
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable") + "\n"
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::Jw { kind, n, eps } => {
            let p = jw(*kind, *n, *eps)?;
            Ok(Outcome::ok(match fmt {
                Format::Json => p.to_json() + "\n",
                Format::Text => {
                    let mut s = format!("{kind}_{n}, eps = {eps}, {} terms\n", p.len());
                    for (d, c) in p.terms() {
                        s += &format!("{c}\t{d}\n");
                    }
                    s
                }
            }))
        }
        Command::Theta { triple, eps, method, table } => theta(triple, *eps, *method, *table, fmt),
        Command::Decompose { labels, tensor, eps: _ } => {
            let start = FusionVector::from_pairs(labels.iter().map(|&l| (l, 1)));
            let out = fuse(&start, tensor);
            Ok(Outcome::ok(match fmt {
                Format::Json => json(&out),
                Format::Text => format!("{out}\n"),
            }))
        }
        Command::Basis { hom } => {
            let (m, k) = (hom[0], hom[1]);
            if (m + k) % 2 != 0 {
                return Err(Error::Domain(format!("Hom({m}, {k}) needs an even number of points")));
            }
            let basis = enumerate_basis(m, k);
            Ok(Outcome::ok(match fmt {
                Format::Json => {
                    #[derive(Serialize)]
                    struct D {
                        arcs: Vec<[usize; 2]>,
                        dots: Vec<u8>,
                    }
                    #[derive(Serialize)]
                    struct B {
                        source: usize,
                        target: usize,
                        count: usize,
                        diagrams: Vec<D>,
                    }
                    let diagrams = basis
                        .iter()
                        .map(|d| D {
                            arcs: d.arcs().iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
                            dots: d.dots().iter().map(|&b| b as u8).collect(),
                        })
                        .collect();
                    json(&B { source: m, target: k, count: basis.len(), diagrams })
                }
                Format::Text => {
                    let mut s = format!("{} diagrams in Hom({m}, {k})\n", basis.len());
                    for d in &basis {
                        s += &format!("{d}\n");
                    }
                    s
                }
            }))
        }
        Command::Trace { n, eps } => {
            let v = markov_closure(&*jw(ProjectorKind::D, *n, *eps)?)?;
            Ok(Outcome::ok(match fmt {
                Format::Json => {
                    #[derive(Serialize)]
                    struct T {
                        n: usize,
                        eps: i32,
                        closure: crate::qfield::RatFunc,
                    }
                    json(&T { n: *n, eps: *eps, closure: v })
                }
                Format::Text => format!("{v}\n"),
            }))
        }
        Command::Verify { suite, max_n, eps } => verify(*suite, *max_n, *eps, fmt),
    }
}

fn theta(triple: &[i64], eps: i32, method: Method, table: Option<i64>, fmt: Format) -> Result<Outcome> {
    let triples: Vec<(i64, i64, i64)> = match table {
        Some(max) => {
            let mut t = Vec::new();
            for a in 0..=max {
                for b in 0..=max {
                    for c in 0..=max {
                        if is_admissible(a, b, c) {
                            t.push((a, b, c));
                        }
                    }
                }
            }
            t
        }
        None => vec![(triple[0], triple[1], triple[2])],
    };
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for &(a, b, c) in &triples {
        let value = match method {
            Method::Rec => theta_recursive(a, b, c, eps)?,
            Method::Matrix => theta_matrix(a, b, c, eps)?,
            Method::Both => {
                let m = theta_matrix(a, b, c, eps)?;
                if theta_recursive(a, b, c, eps)? != m {
                    mismatches.push((a, b, c));
                }
                m
            }
        };
        rows.push(ThetaRow::new(a, b, c, eps, value));
    }
    let stdout = match (fmt, table) {
        (Format::Json, Some(_)) => json(&rows),
        (Format::Json, None) => json(&rows[0]),
        (Format::Text, None) => format!("{}\n", rows[0].theta),
        (Format::Text, Some(_)) => {
            let mut s = String::from("a\tb\tc\teps\ttheta\ttheta(1)\n");
            for r in &rows {
                let one = r.at_one.as_deref().unwrap_or("pole");
                s += &format!("{}\t{}\t{}\t{}\t{}\t{}\n", r.a, r.b, r.c, r.eps, r.theta, one);
            }
            s
        }
    };
    if mismatches.is_empty() {
        return Ok(Outcome::ok(stdout));
    }
    let stderr = mismatches
        .iter()
        .map(|(a, b, c)| format!("recursion and matrix evaluation differ at ({a}, {b}, {c})\n"))
        .collect();
    Ok(Outcome { code: 2, stdout, stderr })
}

fn verify(suite: Suite, max_n: Option<usize>, eps: i32, fmt: Format) -> Result<Outcome> {
    let suites = match suite {
        Suite::All => vec![Suite::Relations, Suite::Jw, Suite::SchurWeyl, Suite::Theta],
        s => vec![s],
    };
    let mut reports: Vec<Report> = Vec::new();
    for s in suites {
        reports.push(match s {
            Suite::Relations => suites::relations_suite(max_n.unwrap_or(4), eps)?,
            Suite::Jw => suites::projector_suites(max_n.unwrap_or(5), eps)?,
            Suite::SchurWeyl => {
                let n = max_n.unwrap_or(3);
                suites::schur_weyl_suite(n, n + 1, eps)?
            }
            Suite::Theta => suites::theta_suite(max_n.unwrap_or(4), eps)?,
            Suite::All => unreachable!("expanded above"),
        });
    }
    let passed = reports.iter().all(Report::passed);
    let stdout = match fmt {
        Format::Json => json(&reports),
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
    };
    Ok(Outcome { code: if passed { 0 } else { 2 }, stdout, stderr: String::new() })
}
