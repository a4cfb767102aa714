//! Argument handling and rendering for the `weylcode` binary.
//!
//! [`run`] never touches the process: it returns the exit status and both
//! output streams, so the binary and the tests share one code path.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use weylcode::cosets::{construct_w_mu, enumerate_coset_codes, min_rep, rl_decomposition};
use weylcode::orbits::{
    attached_orbit_certificate, semiwhittaker_verdict, torus_exponents, u_level,
};
use weylcode::partitions::{dominance_compare, transpose};
use weylcode::verify::{run_suite, Options, CHECKS, DEFAULT_MAX_N, DEFAULT_MAX_RANK};
use weylcode::weyl::act_on_root;
use weylcode::{
    Composition, CosetCode, DescendingCode, Error, Permutation, Root, SortedPartition, Verdict,
    Word,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "weylcode",
    version,
    about = "Type-A Weyl group codes, coset representatives and orbit certificates"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

/// A Weyl element given either in one-line notation or as a word.
#[derive(Debug, Args)]
struct Element {
    /// One-line images, e.g. "3 1 2".
    #[arg(long, conflicts_with = "word")]
    perm: Option<Permutation>,
    /// Word in the simple reflections, e.g. "s2 s1"; needs --rank.
    #[arg(long, requires = "rank")]
    word: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
}

impl Element {
    fn resolve(&self) -> Result<Permutation, Failure> {
        match (&self.perm, &self.word, self.rank) {
            (Some(p), None, None) => Ok(p.clone()),
            (Some(p), None, Some(r)) if r + 1 >= p.size() => Ok(p.extend(r)),
            (Some(p), None, Some(r)) => Err(Failure::usage(format!(
                "--perm has {} points, more than --rank {r} allows",
                p.size()
            ))),
            (None, Some(w), Some(r)) => Ok(Word::parse(r, w)?.evaluate()),
            _ => Err(Failure::usage("give --perm, or --word with --rank")),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Word and permutation of a descending code.
    Decode {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        code: String,
    },
    /// Descending code of a permutation or word.
    Encode {
        #[command(flatten)]
        element: Element,
    },
    /// All minimal coset representatives for a parabolic.
    Cosets {
        #[arg(long)]
        parabolic: Composition,
    },
    /// Minimal representative of the coset of an element.
    Minrep {
        #[arg(long)]
        parabolic: Composition,
        #[command(flatten)]
        element: Element,
    },
    /// Image of a root, e.g. --root a1+a2 or --root "-a3".
    Act {
        #[command(flatten)]
        element: Element,
        #[arg(long, allow_hyphen_values = true)]
        root: Root,
    },
    /// The distinguished representative for a sorted partition.
    Wmu {
        #[arg(long)]
        mu: SortedPartition,
    },
    /// R_l levels of the simple roots of λ; the code defaults to w_μ.
    Rl {
        #[arg(long)]
        mu: SortedPartition,
        #[arg(long)]
        lambda: Option<Composition>,
        /// Rendered coset code for the transpose of μ.
        #[arg(long)]
        code: Option<String>,
    },
    /// Vanishing verdict and support for (μ, λ).
    Support {
        #[arg(long)]
        mu: SortedPartition,
        #[arg(long)]
        lambda: Composition,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Dominance and verdict for every orbit against μ.
    Orbit {
        #[arg(long)]
        mu: SortedPartition,
    },
    /// Exponents of the torus attached to an orbit.
    Ho {
        #[arg(long)]
        orbit: SortedPartition,
    },
    /// Positive roots of weight at least the level.
    Ulevel {
        #[arg(long)]
        orbit: SortedPartition,
        #[arg(long)]
        level: usize,
    },
    /// Transpose of a composition.
    Transpose {
        #[arg(long)]
        lambda: Composition,
    },
    /// Dominance relation of λ against μ.
    Dominance {
        #[arg(long)]
        lambda: SortedPartition,
        #[arg(long)]
        mu: SortedPartition,
    },
    /// Exhaustive checks; exit status 1 if any fails.
    Verify {
        #[arg(long, default_value_t = DEFAULT_MAX_RANK)]
        max_rank: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        /// Run only checks whose name contains this text.
        #[arg(long)]
        check: Option<String>,
        /// Corrupt one seeded input per check, to see failures reported.
        #[arg(long)]
        mutation_seed: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    Vanishes,
    Nonvanishing,
}

#[derive(Debug)]
struct Failure {
    status: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            status: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::usage(e.to_string())
    }
}

/// What a command produced: the two renderings plus the exit status.
struct Rendered {
    text: String,
    json: Value,
    status: i32,
    note: Option<String>,
}

impl Rendered {
    fn ok(text: impl Into<String>, json: impl Serialize) -> Self {
        Self {
            text: text.into(),
            json: serde_json::to_value(json).expect("serialisable"),
            status: EXIT_OK,
            note: None,
        }
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output {
                    status: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Output {
                    status: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    match execute(&cli.command) {
        Ok(r) => {
            let mut stdout = match cli.format {
                Format::Text => r.text,
                Format::Json => serde_json::to_string_pretty(&r.json).expect("serialisable"),
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Output {
                status: r.status,
                stdout,
                stderr: r.note.map(|n| format!("{n}\n")).unwrap_or_default(),
            }
        }
        Err(f) => Output {
            status: f.status,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn lines<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\n")
}

fn execute(command: &Command) -> Result<Rendered, Failure> {
    let rendered = match command {
        Command::Decode { rank, code } => {
            let code: DescendingCode = code.parse()?;
            if code.rank() != *rank {
                return Err(Error::RankMismatch(*rank, code.rank()).into());
            }
            let word = code.word();
            Rendered::ok(word.to_string(), word)
        }
        Command::Encode { element } => {
            let code = DescendingCode::encode(&element.resolve()?);
            Rendered::ok(code.to_string(), code)
        }
        Command::Cosets { parabolic } => {
            let codes = enumerate_coset_codes(parabolic);
            Rendered::ok(lines(&codes), codes)
        }
        Command::Minrep { parabolic, element } => {
            let code = min_rep(&element.resolve()?, parabolic)?;
            Rendered::ok(code.to_string(), code)
        }
        Command::Act { element, root } => {
            let w = element.resolve()?;
            if root.min_rank() > w.rank() {
                return Err(Error::InvalidRoot(root.i(), root.j(), w.rank()).into());
            }
            let image = act_on_root(&w, root);
            Rendered::ok(image.to_string(), image)
        }
        Command::Wmu { mu } => {
            let code = construct_w_mu(mu);
            Rendered::ok(code.to_string(), code)
        }
        Command::Rl { mu, lambda, code } => {
            let lambda = lambda.clone().unwrap_or_else(|| mu.to_composition());
            let code = match code {
                Some(text) => CosetCode::parse_rendered(&mu.transpose().to_composition(), text)?,
                None => construct_w_mu(mu),
            };
            let decomposition = rl_decomposition(&code, &lambda)?;
            Rendered::ok(decomposition.to_string(), decomposition)
        }
        Command::Support { mu, lambda, expect } => {
            let report = semiwhittaker_verdict(mu, lambda)?;
            let text = support_text(&report);
            let mut out = Rendered::ok(text, &report);
            let broken = report.invariant_violations();
            if !broken.is_empty() {
                out.status = EXIT_FAILED;
                out.note = Some(broken.join("\n"));
            }
            if let Some(expect) = expect {
                let want = match expect {
                    Expect::Vanishes => Verdict::Vanishes,
                    Expect::Nonvanishing => Verdict::Nonvanishing,
                };
                if report.verdict != want {
                    out.status = EXIT_FAILED;
                    out.note = Some(format!("expected {want}, got {}", report.verdict));
                }
            }
            out
        }
        Command::Orbit { mu } => {
            let cert = attached_orbit_certificate(mu);
            let mut out = Rendered::ok(cert.to_string(), &cert);
            if !cert.is_consistent() {
                out.status = EXIT_FAILED;
                out.note = Some("certificate is inconsistent".to_string());
            }
            out
        }
        Command::Ho { orbit } => {
            let torus = torus_exponents(orbit);
            Rendered::ok(torus.to_string(), &torus.exponents)
        }
        Command::Ulevel { orbit, level } => {
            let set = u_level(orbit, *level);
            let roots: Vec<String> = set.iter().map(ToString::to_string).collect();
            Rendered::ok(lines(&roots), set)
        }
        Command::Transpose { lambda } => {
            let t = transpose(lambda);
            Rendered::ok(t.to_string(), t)
        }
        Command::Dominance { lambda, mu } => {
            let v = dominance_compare(lambda, mu)?;
            let at = |x: Option<usize>| x.map_or("none".to_string(), |i| i.to_string());
            let text = format!(
                "relation: {}\na_exceeds_at: {}\nb_exceeds_at: {}",
                v.relation,
                at(v.a_exceeds_at),
                at(v.b_exceeds_at)
            );
            Rendered::ok(text, v)
        }
        Command::Verify {
            max_rank,
            max_n,
            check,
            mutation_seed,
        } => verify(*max_rank, *max_n, check.as_deref(), *mutation_seed)?,
    };
    Ok(rendered)
}

fn support_text(report: &weylcode::SupportReport) -> String {
    let mut out = vec![
        format!("mu: {}", report.mu),
        format!("lambda: {}", report.lambda),
        format!("verdict: {}", report.verdict),
        format!(
            "violation_index: {}",
            report
                .violation_index
                .map_or("none".to_string(), |l| l.to_string())
        ),
        format!("support: {}", report.support.len()),
    ];
    out.extend(report.support.iter().map(|c| format!("  {c}")));
    out.push(format!("refined_support: {}", report.refined_support.len()));
    out.extend(report.refined_support.iter().map(|c| format!("  {c}")));
    out.join("\n")
}

fn verify(
    max_rank: usize,
    max_n: usize,
    filter: Option<&str>,
    seed: Option<u64>,
) -> Result<Rendered, Failure> {
    if max_rank < 1 || max_n < 1 {
        return Err(Failure::usage("--max-rank and --max-n must be at least 1"));
    }
    if let Some(f) = filter {
        if !CHECKS.iter().any(|c| c.contains(f)) {
            return Err(Failure::usage(format!(
                "no check matches {f:?}; checks are {}",
                CHECKS.join(", ")
            )));
        }
    }
    let opts = Options {
        mutation: seed,
        ..Options::default()
    };
    let reports = run_suite(max_rank, max_n, filter, opts);
    let mut text = Vec::new();
    for r in &reports {
        text.push(format!(
            "{} {} scope={} cases={} failures={} ms={}",
            if r.passed() { "PASS" } else { "FAIL" },
            r.check,
            r.scope,
            r.cases,
            r.failures.len(),
            r.ms
        ));
        for f in &r.failures {
            text.push(format!("  {}", json!(f)));
        }
    }
    let failed = reports.iter().any(|r| !r.passed());
    let mut out = Rendered::ok(text.join("\n"), &reports);
    if failed {
        out.status = EXIT_FAILED;
    }
    Ok(out)
}
