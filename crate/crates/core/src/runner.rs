//! Executes scripts and the built-in example suites.

use std::collections::HashMap;
use std::time::Instant;

use crate::dsl::{parse_script, Command, DslError, Script, Statement};
use crate::error::{Error, Result};
use crate::oracle::verify_series_against;
use crate::poly::{default_names, LinearForm, PolyIdeal};
use crate::presentation::{
    closed_form_family, complete_intersection_convolution, hilbert_burch_minors_instance, ClosedFormCase,
    CyclicModule,
};
use crate::report::{CommandOutcome, CommandResult, RunError, RunOptions, RunReport, SeriesResult};
use crate::series::{partial_sum_check, relative_relation_holds, Dimension, HilbertSeries};
use crate::superficial::{depth, find_superficial_sequence, is_superficial, DepthCertificate, QuotientChain};
use crate::theorem::{
    embedded_suite, two_component_suite, verify_comparison_with_depth, CellValue, SuiteResult,
};

/// Degrees shown by the `series` command.
pub const SERIES_PREVIEW_DEGREE: usize = 12;

/// Parses and runs a script; parse and semantic errors are returned as is.
pub fn run_text(text: &str, options: RunOptions) -> std::result::Result<RunReport, DslError> {
    Ok(execute(&parse_script(text)?, options))
}

/// Runs every command in order; stops at the first engine error.
pub fn execute(script: &Script, options: RunOptions) -> RunReport {
    let start = Instant::now();
    let mut report = RunReport::new(options);
    let mut ctx = Context { script, options, modules: HashMap::new(), depths: HashMap::new() };
    for stmt in &script.statements {
        let Statement::Command(cmd) = stmt else { continue };
        match ctx.run(cmd) {
            Ok(outcome) => report.outcomes.push(outcome),
            Err(e) => {
                report.error = Some(RunError {
                    kind: error_kind(&e).into(),
                    message: format!("{}: {e}", statement_text(script, cmd)),
                });
                break;
            }
        }
    }
    report.elapsed = start.elapsed();
    report
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Truncation { .. } => "truncation",
        Error::BadIndex(_) => "bad-index",
        Error::BadParams(_) => "bad-params",
        _ => "engine",
    }
}

fn statement_text(script: &Script, cmd: &Command) -> String {
    let single = Script { ring: script.ring.clone(), statements: vec![Statement::Command(cmd.clone())] };
    crate::dsl::print_script(&single).trim_end().trim_end_matches(';').to_string()
}

struct Context<'a> {
    script: &'a Script,
    options: RunOptions,
    modules: HashMap<String, CyclicModule>,
    depths: HashMap<String, DepthCertificate>,
}

impl Context<'_> {
    fn module(&mut self, name: &str) -> Result<CyclicModule> {
        if let Some(m) = self.modules.get(name) {
            return Ok(m.clone());
        }
        let (ideal, shift) = self.script.module(name).expect("validated script");
        let gens = self.script.ideal(ideal).expect("validated script").to_vec();
        let m = CyclicModule::new(PolyIdeal::new(self.script.ring.len(), gens)?, shift);
        self.modules.insert(name.to_string(), m.clone());
        Ok(m)
    }

    fn depth_of(&mut self, name: &str, module: &CyclicModule) -> Result<DepthCertificate> {
        if let Some(c) = self.depths.get(name) {
            return Ok(c.clone());
        }
        let c = depth(module, self.options.seed, self.options.trials)?;
        self.depths.insert(name.to_string(), c.clone());
        Ok(c)
    }

    fn forms(&self, name: &str) -> Vec<LinearForm> {
        self.script.forms(name).expect("validated script").to_vec()
    }

    fn run(&mut self, cmd: &Command) -> Result<CommandOutcome> {
        let names = self.script.ring.clone();
        let module_name = cmd.module().to_string();
        let module = self.module(&module_name)?;
        let (seed, trials) = (self.options.seed, self.options.trials);
        let mut forms = Vec::new();
        let result = match cmd {
            Command::Series(_) => {
                let series = module.series();
                let preview = SERIES_PREVIEW_DEGREE.min(self.options.max_degree);
                CommandResult::Series(series_result(&series, preview)?)
            }
            Command::Coeffs(_) => {
                let series = module.series();
                let table = series.hilbert_coefficients()?;
                let top = series.numerator().degree().unwrap_or(0) + series.ambient_dim();
                let relative = (0..=top).map(|i| series.relative_coefficient(i)).collect();
                CommandResult::Coeffs { table, relative }
            }
            Command::Depth(_) => CommandResult::Depth(self.depth_of(&module_name, &module)?),
            Command::Superficial { forms: f, .. } => {
                forms = self.forms(f);
                let mut chain = QuotientChain::new(&module);
                let mut steps = Vec::new();
                let mut sequence = true;
                for (k, g) in forms.iter().enumerate() {
                    let img = chain.map_form(g).ok_or_else(|| {
                        Error::BadParams(format!("form {} vanishes modulo the previous ones", k + 1))
                    })?;
                    let r = is_superficial(chain.current(), &img)?;
                    let ok = r.is_superficial;
                    steps.push(r);
                    if !ok {
                        sequence = false;
                        break;
                    }
                    chain.push(g)?;
                }
                CommandResult::Superficial { steps, sequence }
            }
            Command::Admissible { forms: f, .. } => {
                forms = self.forms(f);
                CommandResult::Admissible(find_superficial_sequence(&module, &forms, seed, trials)?)
            }
            Command::Verify { forms: f, i, .. } => {
                forms = self.forms(f);
                let depth_cert = self.depth_of(&module_name, &module)?;
                match verify_comparison_with_depth(&module, &forms, *i, seed, trials, &depth_cert) {
                    Ok(report) => {
                        CommandResult::Verify { i: *i, verdict: "certified".into(), report: Some(report) }
                    }
                    Err(Error::NotAdmissible(verdict)) => {
                        CommandResult::Verify { i: *i, verdict, report: None }
                    }
                    Err(e) => return Err(e),
                }
            }
            Command::Oracle { degree, .. } => {
                if *degree > self.options.max_degree {
                    return Err(Error::Truncation { requested: *degree, max: self.options.max_degree });
                }
                let comparison = verify_series_against(&module, &module.series(), *degree);
                CommandResult::Oracle { degree: *degree, comparison }
            }
        };
        Ok(CommandOutcome {
            statement: statement_text(self.script, cmd),
            command: cmd.name().to_string(),
            module: Some(module_name),
            forms: forms.iter().map(|f| f.display_with(&names).to_string()).collect(),
            names,
            result,
        })
    }
}

fn series_result(series: &HilbertSeries, preview: usize) -> Result<SeriesResult> {
    let reduced = series.reduced();
    Ok(SeriesResult {
        ambient_dim: series.ambient_dim(),
        numerator: series.numerator().clone(),
        reduced_dim: reduced.ambient_dim(),
        reduced_numerator: reduced.numerator().clone(),
        dimension: series.dimension(),
        expansion: series.expansion(preview + 1),
    })
}

/// Partial-sum identity on `[deg phi - s, deg phi - s + 20]` and the
/// `e`/`ebar` relation in every index up to `deg h + d`.
pub fn identities_hold(series: &HilbertSeries, max_degree: usize) -> Result<bool> {
    let Dimension::Finite(s) = series.dimension() else { return Ok(true) };
    let deg_phi = series.phi()?.degree().unwrap_or(0);
    let start = deg_phi.saturating_sub(s);
    if start + 20 > max_degree {
        return Err(Error::Truncation { requested: start + 20, max: max_degree });
    }
    for n in start..=start + 20 {
        if !partial_sum_check(series, n)?.holds {
            return Ok(false);
        }
    }
    let top = series.numerator().degree().unwrap_or(0) + series.ambient_dim();
    for i in 0..=top {
        if !relative_relation_holds(series, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn family_suite(
    name: &str,
    cases: impl IntoIterator<Item = (String, ClosedFormCase)>,
    max_degree: usize,
) -> Result<SuiteResult> {
    let mut suite = SuiteResult::new(name, &[]);
    for (label, case) in cases {
        let (presentation, expected) = closed_form_family(case)?;
        let series = presentation.series();
        let actual = series.hilbert_coefficients()?;
        suite.check(
            label.clone(),
            CellValue::Text(expected.to_string()),
            CellValue::Text(actual.to_string()),
        );
        suite.check(format!("{label}: identities"), true, identities_hold(&series, max_degree)?);
        if let ClosedFormCase::CompleteIntersection2 { d, k, l } = case {
            let conv = complete_intersection_convolution(d, k, l);
            suite.check(
                format!("{label}: convolution form"),
                CellValue::Text(expected.to_string()),
                CellValue::Text(conv.to_string()),
            );
        }
    }
    Ok(suite)
}

/// The closed-form families over their parameter ranges.
pub fn closed_form_suites(max_degree: usize) -> Result<Vec<SuiteResult>> {
    let shifted = (0..=10).map(|r| (format!("R(-{r}), d=6"), ClosedFormCase::ShiftedFree { d: 6, r }));
    let hyper = (1..=8).map(|k| (format!("R/fR, deg f={k}, d=3"), ClosedFormCase::Hypersurface { d: 3, k }));
    let ci = (1..=8).flat_map(|k| {
        (1..=8).map(move |l| {
            (format!("R/(f,g), degrees {k},{l}, d=3"), ClosedFormCase::CompleteIntersection2 { d: 3, k, l })
        })
    });
    let hb = (1..=6).map(|m| (format!("Hilbert-Burch m={m}, d=4"), ClosedFormCase::HilbertBurch { d: 4, m }));
    let mut suites = vec![
        family_suite("shifted-free", shifted, max_degree)?,
        family_suite("hypersurface", hyper, max_degree)?,
        family_suite("complete-intersection", ci, max_degree)?,
        family_suite("hilbert-burch", hb, max_degree)?,
    ];
    let minors = hilbert_burch_minors_instance();
    let (_, expected) = closed_form_family(ClosedFormCase::HilbertBurch { d: 3, m: 2 })?;
    let last = suites.last_mut().unwrap();
    last.check(
        "maximal minors of a 2x3 linear matrix, d=3".into(),
        CellValue::Text(expected.to_string()),
        CellValue::Text(minors.coefficients().to_string()),
    );
    Ok(suites)
}

/// Every example suite: closed-form families and both worked examples with
/// the theorem at every legal index.
pub fn example_suites(options: RunOptions) -> RunReport {
    let start = Instant::now();
    let mut report = RunReport::new(options);
    let push = |report: &mut RunReport, suite: SuiteResult| {
        let params: Vec<String> = suite.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        report.outcomes.push(CommandOutcome {
            statement: format!("{} {}", suite.name, params.join(" ")).trim_end().to_string(),
            command: "suite".into(),
            module: None,
            forms: Vec::new(),
            names: Vec::new(),
            result: CommandResult::Suite(suite),
        });
    };
    let run = || -> Result<Vec<SuiteResult>> {
        let mut all = closed_form_suites(options.max_degree)?;
        for d in 2..=6 {
            for s in 1..d {
                all.push(embedded_suite(d, s, options.seed, options.trials)?);
            }
        }
        for s in 2..=5 {
            for r in 1..s {
                all.push(two_component_suite(r, s, options.seed, options.trials)?);
            }
        }
        Ok(all)
    };
    match run() {
        Ok(suites) => suites.into_iter().for_each(|s| push(&mut report, s)),
        Err(e) => report.error = Some(RunError { kind: error_kind(&e).into(), message: e.to_string() }),
    }
    report.elapsed = start.elapsed();
    report
}

/// Variable names for one-shot invocations that give none.
pub fn fallback_names(n: usize) -> Vec<String> {
    default_names(n)
}
