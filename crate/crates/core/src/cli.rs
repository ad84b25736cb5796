//! Command-line front end.
//!
//! Every subcommand prints one JSON document (or a plain rendering with
//! `--output plain`) and exits with 0 on success or a positive verdict, 1 on
//! a negative verdict and 2 on usage or input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::band::{membership_h3, normal_form};
use crate::birman::{check_diagram, eta, max_singularities};
use crate::burau::burau_eval;
use crate::presentation::{verify_relations, RelationReport, RelationSetName};
use crate::solver::{cross_check, decide, Method};
use crate::words::{Mode, Word};

/// Singular letters accepted by the solvers.
pub const SOLVER_MAX_SING: usize = 64;
/// Largest `--max-len` accepted by `selftest`.
pub const MAX_LEN_CAP: usize = 256;

#[derive(Parser, Debug)]
#[command(name = "sb3", version, about = "Decide equalities in the singular braid monoid SB3 and group SG3")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Output::Json, global = true)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Burau,
    Recursion,
    Pinch,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SetArg {
    Classical,
    Reduced,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether two words are equal.
    Eq {
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        #[arg(allow_hyphen_values = true)]
        w1: String,
        #[arg(allow_hyphen_values = true)]
        w2: String,
    },
    /// Band normal form of a braid word.
    Nf {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Singular Burau matrix of a monoid word.
    Burau {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Membership of a braid word in H3 = <s1, (s2 s1)^3>.
    Member {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Birman expansion of a monoid word and the diagram check.
    Birman {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Check a relation set with the equality deciders.
    CheckRelations {
        #[arg(long, value_enum, default_value_t = SetArg::All)]
        set: SetArg,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Cross-check the three deciders on seeded random pairs.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 16)]
        max_len: usize,
    },
}

/// Exit code plus the text written to stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn input_error(msg: impl Into<String>) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {}\n", msg.into()) }
    }
}

fn methods(arg: MethodArg) -> Vec<Method> {
    match arg {
        MethodArg::Burau => vec![Method::Burau],
        MethodArg::Recursion => vec![Method::Recursion],
        MethodArg::Pinch => vec![Method::Pinch],
        MethodArg::All => Method::ALL.to_vec(),
    }
}

fn parse_word(label: &str, text: &str, mode: Mode) -> Result<Word, Outcome> {
    Word::parse(text, mode).map_err(|e| Outcome::input_error(format!("{label}: {e}")))
}

fn render<T: Serialize>(output: Output, value: &T, plain: impl FnOnce() -> String) -> String {
    match output {
        Output::Json => serde_json::to_string(value).expect("serializable") + "\n",
        Output::Plain => plain(),
    }
}

fn show(w: &str) -> &str {
    if w.is_empty() {
        "1"
    } else {
        w
    }
}

#[derive(Serialize)]
struct EqOutput {
    equal: bool,
    methods: BTreeMap<&'static str, bool>,
    trace: Vec<String>,
}

fn cmd_eq(output: Output, method: MethodArg, w1: &str, w2: &str) -> Outcome {
    let (a, b) = match (parse_word("w1", w1, Mode::Group), parse_word("w2", w2, Mode::Group)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    let sing = a.tau_letters().max(b.tau_letters());
    if sing > SOLVER_MAX_SING {
        return Outcome::input_error(format!(
            "{sing} singular letters exceed the solver cap of {SOLVER_MAX_SING}"
        ));
    }
    let group_input = a.to_monoid().is_err() || b.to_monoid().is_err();
    let mut chosen = methods(method);
    if group_input && method == MethodArg::All {
        chosen = vec![Method::Pinch];
    }
    let mut out = EqOutput { equal: true, methods: BTreeMap::new(), trace: Vec::new() };
    for m in chosen {
        let v = match decide(m, &a, &b) {
            Ok(v) => v,
            Err(e) => return Outcome::input_error(e.to_string()),
        };
        out.methods.insert(m.as_str(), v.equal);
        out.trace.extend(v.trace.into_iter().map(|line| format!("{}: {line}", m.as_str())));
    }
    let verdicts: Vec<bool> = out.methods.values().copied().collect();
    out.equal = verdicts.iter().all(|&e| e);
    let mut stderr = String::new();
    if verdicts.iter().any(|&e| e) && !out.equal {
        stderr = "warning: deciders disagree\n".to_string();
    }
    let stdout = render(output, &out, || {
        let mut s = format!("{} {} {}\n", show(w1), if out.equal { "=" } else { "!=" }, show(w2));
        for (m, e) in &out.methods {
            s += &format!("  {m}: {}\n", if *e { "equal" } else { "not equal" });
        }
        for line in &out.trace {
            s += &format!("  {line}\n");
        }
        s
    });
    Outcome { code: if out.equal { 0 } else { 1 }, stdout, stderr }
}

#[derive(Serialize)]
struct NfOutput {
    delta: i64,
    tail: String,
}

fn cmd_nf(output: Output, word: &str) -> Outcome {
    let w = match parse_word("word", word, Mode::Monoid) {
        Ok(w) => w,
        Err(e) => return e,
    };
    match normal_form(&w) {
        Ok(nf) => {
            let out = NfOutput { delta: nf.delta_exp, tail: nf.tail_string() };
            Outcome::ok(0, render(output, &out, || format!("{nf}\n")))
        }
        Err(e) => Outcome::input_error(e.to_string()),
    }
}

#[derive(Serialize)]
struct BurauOutput {
    m11: String,
    m12: String,
    m21: String,
    m22: String,
    det: String,
    e: i64,
    m: i64,
}

fn cmd_burau(output: Output, word: &str) -> Outcome {
    let w = match parse_word("word", word, Mode::Monoid) {
        Ok(w) => w,
        Err(e) => return e,
    };
    match burau_eval(&w) {
        Ok(img) => {
            let [m11, m12, m21, m22] = img.matrix.entries().map(|e| e.to_string());
            let out = BurauOutput {
                m11,
                m12,
                m21,
                m22,
                det: img.matrix.det().to_string(),
                e: img.exponent_sum,
                m: img.singular_count,
            };
            Outcome::ok(
                0,
                render(output, &out, || {
                    format!("{}\ndet = {}\ne = {}, m = {}\n", img.matrix, out.det, out.e, out.m)
                }),
            )
        }
        Err(e) => Outcome::input_error(e.to_string()),
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum MemberOutput {
    Yes { member: bool, k: i64, l: i64 },
    No { member: bool },
}

fn cmd_member(output: Output, word: &str) -> Outcome {
    let w = match parse_word("word", word, Mode::Monoid) {
        Ok(w) => w,
        Err(e) => return e,
    };
    match membership_h3(&w) {
        Ok(Some(wit)) => {
            let out = MemberOutput::Yes { member: true, k: wit.k, l: wit.l };
            Outcome::ok(
                0,
                render(output, &out, || format!("member: s1^{} (s2 s1)^{}\n", wit.k, 3 * wit.l)),
            )
        }
        Ok(None) => {
            let out = MemberOutput::No { member: false };
            Outcome::ok(1, render(output, &out, || "not a member\n".to_string()))
        }
        Err(e) => Outcome::input_error(e.to_string()),
    }
}

#[derive(Serialize)]
struct EtaTerm {
    coeff: i64,
    braid: String,
}

#[derive(Serialize)]
struct BirmanOutput {
    eta: Vec<EtaTerm>,
    diagram_ok: bool,
}

fn cmd_birman(output: Output, word: &str) -> Outcome {
    let w = match parse_word("word", word, Mode::Monoid) {
        Ok(w) => w,
        Err(e) => return e,
    };
    let result = eta(&w).and_then(|sum| Ok((sum, check_diagram(&w)?)));
    let (sum, diagram_ok) = match result {
        Ok(r) => r,
        Err(e) => return Outcome::input_error(e.to_string()),
    };
    let out = BirmanOutput {
        eta: sum.iter().map(|(nf, c)| EtaTerm { coeff: c, braid: nf.to_string() }).collect(),
        diagram_ok,
    };
    let stdout = render(output, &out, || {
        let terms: Vec<String> = out.eta.iter().map(|t| format!("{:+} [{}]", t.coeff, t.braid)).collect();
        let expansion = if terms.is_empty() { "0".to_string() } else { terms.join(" ") };
        format!("eta = {expansion}\ndiagram: {}\n", if diagram_ok { "commutes" } else { "FAILS" })
    });
    Outcome::ok(if diagram_ok { 0 } else { 1 }, stdout)
}

fn cmd_check_relations(output: Output, set: SetArg, method: MethodArg) -> Outcome {
    let sets = match set {
        SetArg::Classical => vec![RelationSetName::Classical],
        SetArg::Reduced => vec![RelationSetName::Reduced],
        SetArg::All => vec![RelationSetName::Classical, RelationSetName::Reduced],
    };
    let reports: Vec<RelationReport> = sets
        .iter()
        .flat_map(|&s| methods(method).into_iter().map(move |m| verify_relations(s, m)))
        .collect();
    let passed = reports.iter().all(|r| r.passed());
    let stdout = render(output, &reports, || {
        let mut s = String::new();
        for r in &reports {
            s += &format!(
                "{} / {}: {}/{} relations hold\n",
                r.set.as_str(),
                r.method.as_str(),
                r.checked - r.failures.len(),
                r.checked
            );
            for f in &r.failures {
                s += &format!("  FAILED {}: {} = {}\n", f.label, show(&f.lhs), show(&f.rhs));
            }
        }
        s
    });
    Outcome::ok(if passed { 0 } else { 1 }, stdout)
}

#[derive(Serialize)]
struct SelftestOutput<'a> {
    seed: u64,
    samples: u64,
    max_len: usize,
    equal_pairs: u64,
    unequal_pairs: u64,
    failures: usize,
    disagreements: &'a [crate::solver::Disagreement],
}

fn cmd_selftest(output: Output, seed: u64, samples: u64, max_len: usize) -> Outcome {
    if max_len > MAX_LEN_CAP {
        return Outcome::input_error(format!("--max-len {max_len} exceeds {MAX_LEN_CAP}"));
    }
    let report = cross_check(seed, samples, max_len);
    let out = SelftestOutput {
        seed,
        samples,
        max_len,
        equal_pairs: report.equal_pairs,
        unequal_pairs: report.unequal_pairs,
        failures: report.disagreements.len(),
        disagreements: &report.disagreements,
    };
    let stdout = render(output, &out, || {
        let mut s = format!(
            "seed {seed}, {samples} pairs, length <= {max_len}: {} equal, {} unequal, {} failures\n",
            out.equal_pairs, out.unequal_pairs, out.failures
        );
        for d in &report.disagreements {
            s += &format!(
                "  #{}: {} vs {} (burau {}, recursion {}, pinch {})\n",
                d.index,
                show(&d.w1),
                show(&d.w2),
                d.burau.equal,
                d.recursion.equal,
                d.pinch.equal
            );
        }
        s
    });
    Outcome::ok(if report.passed() { 0 } else { 1 }, stdout)
}

/// Parse `argv` (including the program name) and run the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(0, text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let o = cli.output;
    match cli.command {
        Command::Eq { method, w1, w2 } => cmd_eq(o, method, &w1, &w2),
        Command::Nf { word } => cmd_nf(o, &word),
        Command::Burau { word } => cmd_burau(o, &word),
        Command::Member { word } => cmd_member(o, &word),
        Command::Birman { word } => {
            let sing = Word::parse(&word, Mode::Monoid).map(|w| w.tau_letters()).unwrap_or(0);
            if sing > max_singularities() {
                return Outcome::input_error(format!(
                    "{sing} singular letters exceed the cap of {} (set SB3_MAX_SING to raise it)",
                    max_singularities()
                ));
            }
            cmd_birman(o, &word)
        }
        Command::CheckRelations { set, method } => cmd_check_relations(o, set, method),
        Command::Selftest { seed, samples, max_len } => cmd_selftest(o, seed, samples, max_len),
    }
}

/// Run with the process arguments, write the output streams and return the
/// exit code.
pub fn main_with_env() -> i32 {
    let outcome = run(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.code
}
