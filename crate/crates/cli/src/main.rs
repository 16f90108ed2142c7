use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use quasischur::elw::{
    block_structure, elw_to_schur, involution, verify_involution, ConstrainedMonomial, InvolutionOutcome,
};
use quasischur::hall_littlewood::{HallLittlewoodLab, DEFAULT_MAX_N};
use quasischur::quasisym::{expansion_to_poly, extract_f_expansion, fundamental};
use quasischur::schur::straighten;
use quasischur::{Basis, Composition, Error, Expansion, Partition, SparsePoly, WeakComposition};

/// Convert fundamental quasisymmetric expansions to Schur expansions, check
/// the sign-reversing involution behind the conversion, and compute modified
/// Hall–Littlewood polynomials from inversion-free fillings.
#[derive(Parser, Debug)]
#[command(name = "quasischur", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Largest n accepted by enumerating commands.
    #[arg(long, global = true, env = "QUASISCHUR_MAX_N", default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    /// Emit JSON documents.
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit human-readable text.
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Straighten s_γ for a weak composition γ, e.g. `1,3`.
    Straighten {
        #[arg(value_parser = parse_list)]
        gamma: List,
    },
    /// Print the fundamental quasisymmetric polynomial F_α.
    Fundamental {
        #[arg(value_parser = parse_list)]
        alpha: List,
        /// Number of variables (defaults to |α|).
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Read a polynomial document and print its F-expansion.
    Fexpand {
        /// Input file; standard input when absent or `-`.
        input: Option<PathBuf>,
    },
    /// Read an F-basis expansion document and print its Schur expansion.
    Toschur {
        input: Option<PathBuf>,
        /// Expand in degree-many variables and fail unless symmetric.
        #[arg(long)]
        verify_symmetric: bool,
    },
    /// Check the four clauses of the involution for a composition α.
    VerifyInvolution {
        #[arg(value_parser = parse_list)]
        alpha: List,
        /// Also report the block structure and image of one constrained
        /// monomial, given as its index sequence `a₁,…,a_n`.
        #[arg(long, value_parser = parse_list)]
        probe: Option<List>,
    },
    /// Schur expansion of the modified Hall–Littlewood polynomial H̃_μ[X;0,t].
    Hll {
        #[arg(value_parser = parse_list)]
        mu: List,
        /// Run the Schensted leftover experiment instead.
        #[arg(long)]
        experiment: bool,
    },
    /// Schur positivity and filling census for every μ ⊢ n.
    Positivity { n: usize },
}

/// Failure carrying its exit code.
enum Failure {
    Usage(anyhow::Error),
    Semantic(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(Error::NotQuasisymmetric(_)) | Some(Error::ConventionInconsistency(_)) => {
                Failure::Semantic(format!("{e:#}"))
            }
            _ => Failure::Usage(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from(anyhow::Error::new(e))
    }
}

/// A comma-separated list of non-negative integers.
#[derive(Clone, Debug)]
struct List(Vec<usize>);

fn parse_list(s: &str) -> Result<List, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(List(Vec::new()));
    }
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| format!("`{}` is not a non-negative integer", p.trim())))
        .collect::<Result<_, _>>()
        .map(List)
}

fn read_input(path: &Option<PathBuf>) -> anyhow::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

struct Out {
    json: bool,
    buf: String,
}

impl Out {
    fn value(&mut self, v: &impl serde::Serialize) {
        self.buf.push_str(&serde_json::to_string(v).expect("serializable"));
        self.buf.push('\n');
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.buf.push_str(s.as_ref());
        self.buf.push('\n');
    }
}

fn bound(n: usize, max: usize) -> Result<(), Failure> {
    if n > max {
        return Err(Error::BoundExceeded { n, max }.into());
    }
    Ok(())
}

fn run(cli: Cli, out: &mut Out) -> Result<u8, Failure> {
    let max_n = cli.global.max_n;
    match cli.command {
        Command::Straighten { gamma } => {
            let s = straighten(&WeakComposition::new(gamma.0));
            if out.json {
                out.value(&s);
            } else {
                out.line(s.to_string());
            }
        }
        Command::Fundamental { alpha, vars } => {
            let alpha = Composition::new(alpha.0)?;
            let p = fundamental(&alpha, vars.unwrap_or(alpha.weight()));
            if out.json {
                out.value(&p);
            } else {
                out.line(p.to_string());
            }
        }
        Command::Fexpand { input } => {
            let p: SparsePoly = serde_json::from_str(&read_input(&input)?).context("malformed polynomial document")?;
            let e = extract_f_expansion(&p)?;
            emit_expansion(out, &e);
        }
        Command::Toschur { input, verify_symmetric } => {
            let e: Expansion = serde_json::from_str(&read_input(&input)?).context("malformed expansion document")?;
            if e.basis() != Basis::Fundamental {
                return Err(Error::BasisMismatch { expected: "F".into(), found: e.basis().to_string() }.into());
            }
            if verify_symmetric {
                let p = expansion_to_poly(&e, e.degree());
                if let Some(i) = p.symmetry_violation() {
                    return Err(Failure::Semantic(format!(
                        "expansion is not symmetric: swapping x{} and x{} changes it",
                        i,
                        i + 1
                    )));
                }
            }
            emit_expansion(out, &elw_to_schur(&e)?);
        }
        Command::VerifyInvolution { alpha, probe } => {
            let alpha = Composition::new(alpha.0)?;
            bound(alpha.weight(), max_n)?;
            let report = verify_involution(&alpha)?;
            let probe = probe.map(|seq| probe_report(seq.0, &alpha)).transpose()?;
            if out.json {
                let mut v = serde_json::to_value(&report).expect("serializable");
                if let Some(p) = probe {
                    v["probe"] = p;
                }
                out.value(&v);
            } else {
                out.line(format!("alpha {}: {}", report.alpha, if report.passed { "PASS" } else { "FAIL" }));
                out.line(format!(
                    "monomials {}  fixed points {}  pairs {}  self-paired {}  target {}",
                    report.monomials, report.fixed_points, report.pairs, report.self_paired, report.target
                ));
                let c = &report.clauses;
                for (name, ok) in [
                    ("single fixed point", c.single_fixed_point),
                    ("sign-reversing pairing", c.sign_reversing_pairing),
                    ("signed sum telescopes", c.signed_sum_telescopes),
                    ("polynomial identity", c.polynomial_identity),
                ] {
                    out.line(format!("  {name}: {}", if ok { "ok" } else { "failed" }));
                }
                if let Some(w) = &report.witness {
                    out.line(format!("  witness [{}] {:?}: {}", w.clause, w.sequence, w.detail));
                }
                if let Some(p) = probe {
                    out.line(format!("probe {p}"));
                }
            }
            return Ok(if report.passed { 0 } else { 3 });
        }
        Command::Hll { mu, experiment } => {
            let mu = Partition::new(mu.0)?;
            let lab = HallLittlewoodLab::new(max_n);
            if experiment {
                let r = lab.leftover_experiment(&mu)?;
                if out.json {
                    out.value(&r);
                } else {
                    out.line(format!(
                        "mu {}: fillings {}  zero {}  minus {}  plus {}  kept {}",
                        r.mu, r.fillings, r.zero, r.minus, r.plus, r.kept
                    ));
                    out.line(format!("true        {}", r.actual.expansion()));
                    out.line(format!("conjectured {}", r.conjectured.expansion()));
                    if r.discrepancy.is_empty() {
                        out.line("discrepancy none");
                    }
                    for d in &r.discrepancy {
                        out.line(format!("discrepancy ({}) s{}", d.coeff, d.index));
                    }
                }
            } else {
                let e = lab.hll_expansion(&mu)?;
                emit_expansion(out, e.expansion());
            }
        }
        Command::Positivity { n } => {
            bound(n, max_n)?;
            let lab = HallLittlewoodLab::new(max_n);
            let mut records = Vec::new();
            let mut all_ok = true;
            for mu in Partition::all(n) {
                let r = lab.positivity(&mu)?;
                all_ok &= r.positive && r.census_ok && r.one_row_coefficient_is_one;
                records.push(r);
            }
            if out.json {
                out.value(&records);
            } else {
                for r in &records {
                    out.line(format!(
                        "{}  fillings {} / {}  positive {}  s({}) coefficient one {}",
                        r.mu, r.fillings, r.multinomial, r.positive, n, r.one_row_coefficient_is_one
                    ));
                }
            }
            return Ok(if all_ok { 0 } else { 3 });
        }
    }
    Ok(0)
}

fn emit_expansion(out: &mut Out, e: &Expansion) {
    if out.json {
        out.value(e);
    } else {
        out.line(e.to_string());
    }
}

fn probe_report(seq: Vec<usize>, alpha: &Composition) -> Result<Value, Failure> {
    let u = ConstrainedMonomial::new(seq, alpha)?;
    let blocks = block_structure(&u, alpha);
    let outcome = match involution(&u, alpha)? {
        InvolutionOutcome::FixedPoint => json!({ "fixed_point": true }),
        InvolutionOutcome::Image { image, step } => json!({ "image": image, "step": step }),
    };
    Ok(json!({
        "sequence": u.sequence(),
        "exponent": u.exponent(),
        "s": blocks.map(|b| b.0),
        "r": blocks.map(|b| b.1),
        "outcome": outcome,
    }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = match &cli.command {
        Command::Straighten { .. } => cli.global.json,
        _ => !cli.global.text,
    };
    let mut out = Out { json, buf: String::new() };
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            2
        }
        Err(Failure::Semantic(msg)) => {
            eprintln!("error: {msg}");
            3
        }
    };
    let mut stdout = io::stdout().lock();
    if stdout.write_all(out.buf.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
