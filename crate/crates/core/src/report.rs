//! Run reports and their human and JSON renderings.
//!
//! JSON integers are numbers when they fit in `i64` and decimal strings
//! otherwise. Field names follow `docs/report-schema.md`.

use std::fmt::Write as _;
use std::time::Duration;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::intpoly::IntPolynomial;
use crate::oracle::OracleComparison;
use crate::poly::{default_names, LinearForm};
use crate::series::{CoefficientTable, Dimension};
use crate::superficial::{AdmissibilityCertificate, DepthCertificate, DepthStop, SuperficialityReport};
use crate::theorem::{CellValue, ComparisonReport, SuiteResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    pub trials: usize,
    pub max_degree: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: 0, trials: crate::superficial::DEFAULT_TRIALS, max_degree: 64 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunStatus {
    Ok,
    VerificationFailed,
    Error,
}

impl RunStatus {
    pub fn exit_code(self) -> i32 {
        match self {
            RunStatus::Ok => 0,
            RunStatus::VerificationFailed => 1,
            RunStatus::Error => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RunStatus::Ok => "ok",
            RunStatus::VerificationFailed => "verification-failed",
            RunStatus::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesResult {
    pub ambient_dim: usize,
    pub numerator: IntPolynomial,
    pub reduced_dim: usize,
    pub reduced_numerator: IntPolynomial,
    pub dimension: Dimension,
    pub expansion: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommandResult {
    Series(SeriesResult),
    Coeffs {
        table: CoefficientTable,
        relative: Vec<BigInt>,
    },
    Depth(DepthCertificate),
    /// the forms tested as a sequence, each on the previous quotient
    Superficial {
        steps: Vec<SuperficialityReport>,
        sequence: bool,
    },
    Admissible(AdmissibilityCertificate),
    Verify {
        i: usize,
        verdict: String,
        report: Option<ComparisonReport>,
    },
    Oracle {
        degree: usize,
        comparison: OracleComparison,
    },
    Suite(SuiteResult),
}

impl CommandResult {
    /// `None` for informational commands.
    pub fn passed(&self) -> Option<bool> {
        match self {
            CommandResult::Series(_)
            | CommandResult::Coeffs { .. }
            | CommandResult::Depth(_)
            | CommandResult::Superficial { .. } => None,
            CommandResult::Admissible(c) => Some(c.verdict == crate::superficial::Verdict::Certified),
            CommandResult::Verify { report, .. } => Some(report.as_ref().is_some_and(|r| r.passed())),
            CommandResult::Oracle { comparison, .. } => Some(comparison.agrees()),
            CommandResult::Suite(s) => Some(s.passed()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutcome {
    /// the command as written in the input language
    pub statement: String,
    pub command: String,
    pub module: Option<String>,
    /// forms as written, when the command takes forms
    pub forms: Vec<String>,
    /// variable names used to render forms in the result
    pub names: Vec<String>,
    pub result: CommandResult,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunError {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub options: RunOptions,
    pub outcomes: Vec<CommandOutcome>,
    pub error: Option<RunError>,
    /// shown in human output only, so JSON stays reproducible
    pub elapsed: Duration,
}

impl RunReport {
    pub fn new(options: RunOptions) -> Self {
        RunReport { options, outcomes: Vec::new(), error: None, elapsed: Duration::ZERO }
    }

    pub fn status(&self) -> RunStatus {
        if self.error.is_some() {
            RunStatus::Error
        } else if self.outcomes.iter().any(|o| o.result.passed() == Some(false)) {
            RunStatus::VerificationFailed
        } else {
            RunStatus::Ok
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.status().exit_code()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "seed": self.options.seed,
            "trials": self.options.trials,
            "max_degree": self.options.max_degree,
            "status": self.status().as_str(),
            "error": self.error.as_ref().map(|e| json!({"kind": e.kind, "message": e.message})),
            "results": self.outcomes.iter().map(outcome_json).collect::<Vec<_>>(),
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("json values serialize")
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            render_outcome(&mut out, o);
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error ({}): {}", e.kind, e.message);
        }
        let _ = writeln!(
            out,
            "status: {} (seed {}, trials {}, max degree {}, {:.2?})",
            self.status().as_str(),
            self.options.seed,
            self.options.trials,
            self.options.max_degree,
            self.elapsed
        );
        out
    }
}

fn int(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

fn ints(ns: &[BigInt]) -> Value {
    Value::Array(ns.iter().map(int).collect())
}

fn poly_json(p: &IntPolynomial) -> Value {
    ints(p.coeffs())
}

fn dim_json(d: Dimension) -> Value {
    match d {
        Dimension::MinusInfinity => Value::String("-inf".into()),
        Dimension::Finite(s) => Value::from(s),
    }
}

fn forms_json(forms: &[LinearForm], names: &[String]) -> Value {
    Value::Array(forms.iter().map(|f| Value::String(f.display_with(names).to_string())).collect())
}

fn cell_json(v: &CellValue) -> Value {
    match v {
        CellValue::Int(n) => int(n),
        CellValue::Bool(b) => Value::Bool(*b),
        CellValue::Text(t) => Value::String(t.clone()),
    }
}

fn depth_json(c: &DepthCertificate, names: &[String]) -> Value {
    let stop = match &c.stop {
        DepthStop::DimensionZero => json!({"kind": "dimension-zero"}),
        DepthStop::ZeroModule => json!({"kind": "zero-module"}),
        DepthStop::TrialsExhausted { trials } => json!({"kind": "trials-exhausted", "trials": trials}),
    };
    json!({
        "depth": c.depth,
        "chain": forms_json(&c.chain, names),
        "stop": stop,
        "probabilistic": c.is_probabilistic(),
    })
}

fn theorem_json(r: &ComparisonReport, names: &[String]) -> Value {
    json!({
        "i": r.i,
        "s": r.s,
        "e_M": int(&r.e_m),
        "e_Q": int(&r.e_q),
        "parity_ok": r.parity_ok,
        "equality": r.equality,
        "depth": r.depth_value,
        "depth_probabilistic": r.depth_probabilistic,
        "equivalence_ok": r.equivalence_ok,
        "equivalence_assumes_depth_bound": r.equivalence_assumes_depth_bound,
        "defect_lengths": ints(&r.defect_lengths),
        "stage_coefficients": ints(&r.stage_coefficients),
        "intermediate_ok": r.intermediate_ok,
        "telescoping_ok": r.telescoping_ok,
        "witness": forms_json(&r.witness, names),
        "trials_used": r.trials_used,
        "pass": r.passed(),
    })
}

fn outcome_json(o: &CommandOutcome) -> Value {
    let mut m = Map::new();
    m.insert("command".into(), Value::String(o.command.clone()));
    m.insert("statement".into(), Value::String(o.statement.clone()));
    if let Some(module) = &o.module {
        m.insert("module".into(), Value::String(module.clone()));
    }
    if !o.forms.is_empty() {
        m.insert("forms".into(), json!(o.forms));
    }
    m.insert("pass".into(), o.result.passed().map_or(Value::Null, Value::Bool));
    let names = &o.names;
    match &o.result {
        CommandResult::Series(s) => {
            m.insert("ambient_dim".into(), Value::from(s.ambient_dim));
            m.insert("numerator".into(), poly_json(&s.numerator));
            m.insert("reduced_dim".into(), Value::from(s.reduced_dim));
            m.insert("reduced_numerator".into(), poly_json(&s.reduced_numerator));
            m.insert("dimension".into(), dim_json(s.dimension));
            m.insert("expansion".into(), ints(&s.expansion));
        }
        CommandResult::Coeffs { table, relative } => {
            m.insert("dimension".into(), dim_json(table.dim()));
            m.insert("e".into(), ints(table.coeffs()));
            m.insert("relative".into(), ints(relative));
        }
        CommandResult::Depth(c) => {
            m.insert("certificate".into(), depth_json(c, names));
        }
        CommandResult::Superficial { steps, sequence } => {
            let steps: Vec<Value> = steps
                .iter()
                .map(|r| {
                    json!({
                        "is_superficial": r.is_superficial,
                        "socle_length": r.socle_length.as_ref().map(int),
                        "colon_equal": r.colon_equal,
                    })
                })
                .collect();
            m.insert("steps".into(), Value::Array(steps));
            m.insert("superficial_sequence".into(), Value::Bool(*sequence));
        }
        CommandResult::Admissible(c) => {
            m.insert(
                "certificate".into(),
                json!({
                    "verdict": c.verdict.to_string(),
                    "witness": c.witness.as_ref().map(|w| forms_json(w, names)),
                    "trials_used": c.trials_used,
                    "socle_lengths": ints(&c.socle_lengths),
                    "failed_step": c.failed_step,
                    "probabilistic": c.verdict == crate::superficial::Verdict::ProbablyNotAdmissible,
                }),
            );
        }
        CommandResult::Verify { i, verdict, report } => {
            m.insert("i".into(), Value::from(*i));
            m.insert("verdict".into(), Value::String(verdict.clone()));
            m.insert("report".into(), report.as_ref().map_or(Value::Null, |r| theorem_json(r, names)));
        }
        CommandResult::Oracle { degree, comparison } => {
            m.insert("degree".into(), Value::from(*degree));
            m.insert("oracle_dims".into(), ints(&comparison.expected));
            m.insert("series_dims".into(), ints(&comparison.actual));
            m.insert("mismatches".into(), json!(comparison.mismatches));
        }
        CommandResult::Suite(s) => {
            m.insert("suite".into(), Value::String(s.name.clone()));
            let params: Map<String, Value> =
                s.params.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect();
            m.insert("params".into(), Value::Object(params));
            let cells: Vec<Value> = s
                .cells
                .iter()
                .map(|c| {
                    json!({
                        "label": c.label,
                        "expected": cell_json(&c.expected),
                        "actual": cell_json(&c.actual),
                        "pass": c.pass,
                        "probabilistic": c.probabilistic,
                    })
                })
                .collect();
            m.insert("cells".into(), Value::Array(cells));
            let ring = suite_names(s);
            let reports: Vec<Value> = s.reports.iter().map(|r| theorem_json(r, &ring)).collect();
            m.insert("theorem".into(), Value::Array(reports));
        }
    }
    Value::Object(m)
}

fn suite_names(s: &SuiteResult) -> Vec<String> {
    let n = s.reports.first().and_then(|r| r.witness.first()).map_or(0, LinearForm::nvars);
    default_names(n)
}

fn mark(pass: Option<bool>) -> &'static str {
    match pass {
        Some(true) => "PASS",
        Some(false) => "FAIL",
        None => "info",
    }
}

fn join_ints(ns: &[BigInt]) -> String {
    ns.iter().map(BigInt::to_string).collect::<Vec<_>>().join(", ")
}

fn show_forms(forms: &[LinearForm], names: &[String]) -> String {
    forms.iter().map(|f| f.display_with(names).to_string()).collect::<Vec<_>>().join(", ")
}

fn render_theorem(out: &mut String, r: &ComparisonReport, names: &[String]) {
    let depth_note = if r.depth_probabilistic { " (upper bound probabilistic)" } else { "" };
    let _ = writeln!(
        out,
        "    [{}] i={} s={}: e_M={} e_Q={} parity {} equality {} depth {}{} equivalence {} defect [{}] witness ({})",
        mark(Some(r.passed())),
        r.i,
        r.s,
        r.e_m,
        r.e_q,
        if r.parity_ok { "ok" } else { "VIOLATED" },
        r.equality,
        r.depth_value,
        depth_note,
        if r.equivalence_ok { "ok" } else { "MISMATCH" },
        join_ints(&r.defect_lengths),
        show_forms(&r.witness, names),
    );
}

fn render_outcome(out: &mut String, o: &CommandOutcome) {
    let _ = writeln!(out, "[{}] {}", mark(o.result.passed()), o.statement);
    let names = &o.names;
    match &o.result {
        CommandResult::Series(s) => {
            let _ = writeln!(out, "    P = ({}) / (1 - t)^{}", s.numerator, s.ambient_dim);
            let _ = writeln!(out, "    reduced: ({}) / (1 - t)^{}", s.reduced_numerator, s.reduced_dim);
            let _ = writeln!(out, "    dim {}; dims {} ...", s.dimension, join_ints(&s.expansion));
        }
        CommandResult::Coeffs { table, relative } => {
            let _ = writeln!(out, "    dim {}; e = ({})", table.dim(), join_ints(table.coeffs()));
            let _ = writeln!(out, "    relative ebar = ({})", join_ints(relative));
        }
        CommandResult::Depth(c) => {
            let stop = match &c.stop {
                DepthStop::DimensionZero => "quotient reached dimension 0".to_string(),
                DepthStop::ZeroModule => "zero module".to_string(),
                DepthStop::TrialsExhausted { trials } => {
                    format!("{trials} candidates failed (probabilistic bound)")
                }
            };
            let _ =
                writeln!(out, "    depth {}; chain ({}); stop: {stop}", c.depth, show_forms(&c.chain, names));
        }
        CommandResult::Superficial { steps, sequence } => {
            for (k, (r, f)) in steps.iter().zip(&o.forms).enumerate() {
                let detail = match &r.socle_length {
                    Some(l) if r.colon_equal => format!("regular, l(0 : g) = {l}"),
                    Some(l) => format!("superficial, l(0 : g) = {l}"),
                    None => "not superficial".to_string(),
                };
                let _ = writeln!(out, "    g{} = {f}: {detail}", k + 1);
            }
            let _ = writeln!(out, "    superficial sequence: {sequence}");
        }
        CommandResult::Admissible(c) => {
            let witness = c.witness.as_ref().map_or("none".into(), |w| show_forms(w, names));
            let _ = writeln!(
                out,
                "    verdict {}; witness ({witness}); socle lengths [{}]; {} candidates tried",
                c.verdict,
                join_ints(&c.socle_lengths),
                c.trials_used
            );
        }
        CommandResult::Verify { verdict, report, .. } => match report {
            Some(r) => render_theorem(out, r, names),
            None => {
                let _ = writeln!(out, "    admissibility verdict {verdict}");
            }
        },
        CommandResult::Oracle { degree, comparison } => {
            let _ = writeln!(
                out,
                "    degrees 0..={degree}: oracle ({}) series ({}) mismatches {:?}",
                join_ints(&comparison.expected),
                join_ints(&comparison.actual),
                comparison.mismatches
            );
        }
        CommandResult::Suite(s) => {
            let ring = suite_names(s);
            for c in &s.cells {
                let note = if c.probabilistic { " (probabilistic)" } else { "" };
                let _ = writeln!(
                    out,
                    "    [{}] {}: expected {}, got {}{note}",
                    mark(Some(c.pass)),
                    c.label,
                    c.expected,
                    c.actual
                );
            }
            for r in &s.reports {
                render_theorem(out, r, &ring);
            }
        }
    }
}
