//! Command-line front end. Exit status: 0 success, 1 mathematical negative,
//! 2 undecided or inconclusive, 3 input error.

use std::io::IsTerminal;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::polynomial::Polynomial;
use crate::algebra::weight::Weight;
use crate::certifier::{self, canonical_json, Certificate, DescentOptions, Outcome};
use crate::dataset::{self, DatasetEntry, EntryJson};
use crate::deformation::{
    build_deformation, is_quasi_homogeneous, mu_constant_stratum, versal_basis,
    DeformationAssignment,
};
use crate::error::{Error, Result};
use crate::groebner::{Budget, QuotientDim};
use crate::invariants::{adapted_weight, milnor_report};
use crate::io::{load_polynomial, to_terms};
use crate::lp::{min_weight_sum, LpJson};
use crate::newton::{nondegenerate, simple_k3_check, Nondegeneracy, OnesPosition};

#[derive(Parser, Debug)]
#[command(
    name = "k3cert",
    version,
    about = "Simple K3 singularities in exact arithmetic"
)]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The twelve embedded normal forms.
    Dataset {
        #[command(subcommand)]
        action: DatasetAction,
    },
    /// Simple K3 test on the Newton polyhedron, plus nondegeneracy.
    Classify { input: String },
    /// Milnor number by the weight formula and by a standard basis.
    Milnor { input: String },
    /// Versal basis split by weighted degree, and the mu-constant stratum.
    Stratum { input: String },
    /// Adds `lambda_i g_i` to a dataset entry and prints the result.
    Deform {
        id: String,
        /// `i=lambda`, repeatable; `i` indexes the versal basis.
        #[arg(long = "assign", num_args = 1.., required = true)]
        assign: Vec<String>,
    },
    /// Runs the descent and emits a certificate.
    Certify {
        input: String,
        #[arg(long, default_value_t = certifier::DEFAULT_CAP)]
        cap: usize,
        /// Milnor number of the undeformed germ, when not in the dataset.
        #[arg(long)]
        reference: Option<u64>,
        /// Write the certificate here instead of standard output.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Replays and rechecks a certificate file.
    Verify { certificate: PathBuf },
    /// Linear programs on the support.
    Lp {
        #[command(subcommand)]
        action: LpAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum DatasetAction {
    List,
    Show {
        id: String,
    },
    /// Recomputes every entry's weight, nondegeneracy, Milnor numbers and gates.
    Verify,
}

#[derive(Subcommand, Debug)]
pub enum LpAction {
    /// `min sum(alpha)` subject to `<alpha, nu> >= 1` on the support.
    MinWeightSum { input: String },
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CliOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                CliOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let style = Style::detect();
    match execute(&cli, style) {
        Ok((code, stdout)) => CliOutput {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => CliOutput {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

#[derive(Clone, Copy)]
struct Style {
    color: bool,
}

impl Style {
    fn detect() -> Self {
        Style {
            color: std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty())
                && std::io::stdout().is_terminal(),
        }
    }

    fn verdict(self, ok: bool, text: &str) -> String {
        match (self.color, ok) {
            (false, _) => text.to_string(),
            (true, true) => format!("\x1b[32m{text}\x1b[0m"),
            (true, false) => format!("\x1b[31m{text}\x1b[0m"),
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

/// A dataset id (`12`, `No.12`) unless a file of that name exists.
fn resolve(input: &str) -> Result<(Polynomial, Option<DatasetEntry>)> {
    let path = Path::new(input);
    if !path.exists() {
        if let Some(id) = dataset::parse_id(input) {
            let e = dataset::entry(id)?;
            return Ok((e.polynomial.clone(), Some(e)));
        }
        if input.chars().all(|c| c.is_ascii_digit()) || input.starts_with("No.") {
            return Err(Error::UnknownEntry(input.to_string()));
        }
    }
    Ok((load_polynomial(path)?, None))
}

fn quotient_json(d: Option<QuotientDim>) -> Value {
    match d {
        Some(QuotientDim::Finite(n)) => json!(n),
        Some(QuotientDim::Infinite) => json!("infinite"),
        None => Value::Null,
    }
}

fn position_name(p: &OnesPosition) -> String {
    match p {
        OnesPosition::Below => "below".into(),
        OnesPosition::Above => "above".into(),
        OnesPosition::NonCompactFace => "non-compact-face".into(),
        OnesPosition::CompactFace { dimension } => format!("compact-face-{dimension}"),
    }
}

fn execute(cli: &Cli, style: Style) -> Result<(i32, String)> {
    match &cli.command {
        Command::Dataset { action } => dataset_cmd(action, cli.json, style),
        Command::Classify { input } => {
            let (f, _) = resolve(input)?;
            let r = simple_k3_check(&f)?;
            let nd = nondegenerate(&f)?;
            let v = json!({
                "polynomial": f.to_string(),
                "simple_k3": r.is_simple_k3,
                "ones_position": position_name(&r.position),
                "weight": r.weight.as_ref().map(Weight::to_strings),
                "primitive_weight": r.weight.as_ref().map(Weight::primitive),
                "face": r.face.as_ref().map(|fc| fc.to_json(f.nvars())),
                "nondegenerate": nd,
            });
            let code = match (r.is_simple_k3, nd) {
                (_, Nondegeneracy::Undecided) => 2,
                (true, Nondegeneracy::Nondegenerate) => 0,
                _ => 1,
            };
            let text = if cli.json {
                pretty(&v)
            } else {
                let mut s = format!(
                    "{}\n  (1,1,1,1): {}\n  nondegenerate: {}\n",
                    style.verdict(
                        r.is_simple_k3,
                        if r.is_simple_k3 {
                            "simple K3"
                        } else {
                            "not simple K3"
                        }
                    ),
                    position_name(&r.position),
                    v["nondegenerate"].as_str().unwrap_or_default(),
                );
                if let Some(w) = &r.weight {
                    s.push_str(&format!("  weight: {w}\n"));
                }
                s
            };
            Ok((code, text))
        }
        Command::Milnor { input } => {
            let (f, entry) = resolve(input)?;
            let alpha = match &entry {
                Some(e) => Some(e.weight.clone()),
                None => adapted_weight(&f).filter(|w| is_quasi_homogeneous(&f, w)),
            };
            let r = milnor_report(&f, alpha.as_ref(), &mut Budget::default())?;
            let code = if r.undecided {
                2
            } else if r.agreement {
                0
            } else {
                1
            };
            let v = json!({
                "mu-orlik": r.mu_orlik,
                "mu-basis": quotient_json(r.mu_basis),
                "newton-number": r.newton_number,
                "agreement": r.agreement,
                "undecided": r.undecided,
            });
            let text = if cli.json {
                pretty(&v)
            } else {
                let show = |x: &Value| {
                    if x.is_null() {
                        "-".to_string()
                    } else {
                        x.to_string().replace('"', "")
                    }
                };
                format!(
                    "mu (weight formula): {}\nmu (standard basis): {}\nnewton number: {}\n{}\n",
                    show(&v["mu-orlik"]),
                    show(&v["mu-basis"]),
                    show(&v["newton-number"]),
                    style.verdict(
                        r.agreement,
                        if r.agreement {
                            "agreement"
                        } else {
                            "no agreement"
                        }
                    ),
                )
            };
            Ok((code, text))
        }
        Command::Stratum { input } => {
            let (f, entry) = resolve(input)?;
            let alpha = match &entry {
                Some(e) => e.weight.clone(),
                None => adapted_weight(&f)
                    .filter(|w| is_quasi_homogeneous(&f, w))
                    .ok_or_else(|| Error::ShapeViolation("not quasi-homogeneous".into()))?,
            };
            let vb = versal_basis(&f, &alpha)?;
            let st = mu_constant_stratum(&vb);
            let v = json!({
                "polynomial": f.to_string(),
                "weight": alpha.to_strings(),
                "size": vb.len(),
                "below_one": vb.below_one(),
                "on_one": vb.on_one(),
                "above_one": vb.above_one(),
                "stratum": st,
                "basis": vb.to_json(),
            });
            let text = if cli.json {
                pretty(&v)
            } else {
                format!(
                    "basis size {}: {} below degree one, {} on, {} above\nmu-constant stratum: codimension {}\n",
                    vb.len(),
                    vb.below_one().len(),
                    vb.on_one().len(),
                    vb.above_one().len(),
                    st.codimension,
                )
            };
            Ok((0, text))
        }
        Command::Deform { id, assign } => {
            let e = dataset::parse_id(id)
                .map(dataset::entry)
                .ok_or_else(|| Error::UnknownEntry(id.clone()))??;
            let vb = versal_basis(&e.polynomial, &e.weight)?;
            let a = DeformationAssignment::parse(assign)?;
            let d = build_deformation(&e.polynomial, &vb, &a)?;
            let text = if cli.json {
                pretty(&json!({
                    "base": e.id,
                    "polynomial": d.polynomial.to_string(),
                    "mu_dropping": d.mu_dropping(),
                    "dropping_indices": d.dropping_indices,
                    "terms": serde_json::from_str::<Value>(&to_terms(&d.polynomial))?,
                }))
            } else {
                to_terms(&d.polynomial)
            };
            Ok((0, text))
        }
        Command::Certify {
            input,
            cap,
            reference,
            out,
        } => {
            let (f, _) = resolve(input)?;
            let opts = DescentOptions {
                cap: *cap,
                reference: *reference,
                ..DescentOptions::default()
            };
            let c = certifier::descent_with(&f, &opts)?;
            let code = outcome_code(c.outcome);
            let body = canonical_json(&c);
            if let Some(path) = out {
                std::fs::write(path, &body)?;
            }
            let text = match (cli.json, out.is_some()) {
                (true, false) => body,
                (true, true) => pretty(&json!({"outcome": c.outcome, "written": path_string(out)})),
                (false, _) => {
                    let mut s = summary(&c, style);
                    if out.is_none() {
                        s.push('\n');
                        s.push_str(&body);
                    }
                    s
                }
            };
            Ok((code, text))
        }
        Command::Verify { certificate } => {
            let text = std::fs::read_to_string(certificate)?;
            let r = certifier::verify_text(&text)?;
            let code = if r.ok { 0 } else { 1 };
            let out = if cli.json {
                pretty(&serde_json::to_value(&r)?)
            } else if r.ok {
                format!(
                    "{} ({})\n",
                    style.verdict(true, "certificate verified"),
                    outcome_name(r.outcome)
                )
            } else {
                format!(
                    "{}: {}\n",
                    style.verdict(false, "certificate rejected"),
                    r.mismatches.join(", ")
                )
            };
            Ok((code, out))
        }
        Command::Lp {
            action: LpAction::MinWeightSum { input },
        } => {
            let (f, _) = resolve(input)?;
            let r = min_weight_sum(&f.support(), f.nvars());
            let j = LpJson::from(&r);
            let text = if cli.json {
                pretty(&serde_json::to_value(&j)?)
            } else {
                match (r.value(), &r.weight) {
                    (Some(v), Some(w)) => format!(
                        "min weight sum {}\n  at ({})\n  interior optimum: {}\n",
                        crate::algebra::rational::fmt_rational(v),
                        w.iter()
                            .map(crate::algebra::rational::fmt_rational)
                            .collect::<Vec<_>>()
                            .join(", "),
                        r.interior_optimum,
                    ),
                    _ => format!("{:?}\n", r.lp.status).to_lowercase(),
                }
            };
            Ok((if r.value().is_some() { 0 } else { 1 }, text))
        }
    }
}

fn path_string(p: &Option<PathBuf>) -> Option<String> {
    p.as_ref().map(|p| p.display().to_string())
}

fn outcome_code(o: Outcome) -> i32 {
    match o {
        Outcome::RationalByIsolatedInitialPart | Outcome::RationalByCurveCase => 0,
        Outcome::NoncanonicalWitness => 1,
        Outcome::Inconclusive => 2,
    }
}

fn outcome_name(o: Outcome) -> String {
    serde_json::to_value(o)
        .ok()
        .and_then(|v| v.as_str().map(String::from))
        .unwrap_or_default()
}

fn summary(c: &Certificate, style: Style) -> String {
    let mut s = format!(
        "{}\n",
        style.verdict(c.outcome.is_rational(), &outcome_name(c.outcome))
    );
    if let Some(m) = &c.milnor {
        s.push_str(&format!(
            "  mu {} ({}) against {} ({})\n",
            m.value, m.method, m.reference, m.reference_source
        ));
    }
    for sub in &c.chain {
        s.push_str(&format!(
            "  {} := {}   [{}]\n",
            sub.var, sub.replacement, sub.kind
        ));
    }
    if let (Some(w), Some(sum)) = (&c.final_weight, &c.weight_sum) {
        s.push_str(&format!(
            "  final weight ({}) / {}, sum {}\n",
            w.p_vector.join(", "),
            w.p,
            sum
        ));
    }
    if let Some(r) = &c.reason {
        s.push_str(&format!("  {r}\n"));
    }
    s
}

fn dataset_cmd(action: &DatasetAction, as_json: bool, style: Style) -> Result<(i32, String)> {
    match action {
        DatasetAction::List => {
            let entries = dataset::entries();
            if as_json {
                let v: Vec<EntryJson> = entries.iter().map(EntryJson::from).collect();
                return Ok((0, pretty(&serde_json::to_value(v)?)));
            }
            let mut s = String::new();
            for e in &entries {
                s.push_str(&format!(
                    "No.{:<3} mu={:<4} {}\n",
                    e.id, e.milnor, e.polynomial
                ));
            }
            Ok((0, s))
        }
        DatasetAction::Show { id } => {
            let e = dataset::parse_id(id)
                .map(dataset::entry)
                .ok_or_else(|| Error::UnknownEntry(id.clone()))??;
            if as_json {
                return Ok((0, pretty(&serde_json::to_value(EntryJson::from(&e))?)));
            }
            let mut s = format!(
                "No.{}\n  f = {}\n  weight = {}\n  mu = {}\n",
                e.id, e.polynomial, e.weight, e.milnor
            );
            for g in &e.gates {
                s.push_str(&format!("  gate {} = {}\n", g.name, g.value));
            }
            Ok((0, s))
        }
        DatasetAction::Verify => {
            let entries = dataset::entries();
            let checks = std::thread::scope(|scope| {
                let handles: Vec<_> = entries
                    .iter()
                    .map(|e| scope.spawn(move || dataset::verify_entry(e)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("verification thread panicked"))
                    .collect::<Result<Vec<_>>>()
            })?;
            let all = checks.iter().all(|c| c.ok);
            let text = if as_json {
                pretty(&json!({ "ok": all, "entries": checks }))
            } else {
                let mut s = String::new();
                for c in &checks {
                    s.push_str(&format!(
                        "No.{:<3} {}  mu {} / {}\n",
                        c.id,
                        style.verdict(c.ok, if c.ok { "ok  " } else { "FAIL" }),
                        c.mu_orlik,
                        c.mu_basis.map_or("-".into(), |m| m.to_string()),
                    ));
                }
                s
            };
            Ok((if all { 0 } else { 1 }, text))
        }
    }
}
