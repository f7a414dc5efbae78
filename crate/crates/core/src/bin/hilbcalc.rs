use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hilbcalc::dsl::DslError;
use hilbcalc::report::{RunError, RunOptions, RunReport};
use hilbcalc::runner::{example_suites, run_text};

#[derive(Parser)]
#[command(name = "hilbcalc", version, about = "Exact Hilbert coefficients, superficial sequences and depth")]
struct Cli {
    /// Seed for every randomized search.
    #[arg(long, global = true, env = "HILBCALC_SEED", default_value_t = 0)]
    seed: u64,
    /// Random candidates per step of a search.
    #[arg(long, global = true, default_value_t = 32)]
    trials: usize,
    /// Largest degree any series may be expanded to.
    #[arg(long, global = true, default_value_t = 64)]
    max_degree: usize,
    /// Print the versioned JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; the exit code carries the result.
    #[arg(long, global = true, conflicts_with = "json")]
    quiet: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a script file.
    Run { file: PathBuf },
    /// Check every built-in example family.
    #[command(name = "paper-examples")]
    Examples,
    /// Hilbert series of R/I, reduced, with its first terms.
    Series(ModuleArgs),
    /// Hilbert coefficients e_i and the relative ebar_i.
    Coeffs(ModuleArgs),
    /// Depth by a chain of regular linear forms.
    Depth(ModuleArgs),
    /// Test the forms, in order, as a superficial sequence.
    Superficial(FormArgs),
    /// Search the span of the forms for a superficial sequence.
    Admissible(FormArgs),
    /// Check the coefficient inequality for the forms at index i.
    Verify {
        #[command(flatten)]
        forms: FormArgs,
        #[arg(long = "i")]
        index: usize,
    },
    /// Compare the series with dimensions counted by linear algebra.
    OracleCheck {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value_t = hilbcalc::oracle::DEFAULT_ORACLE_DEGREE)]
        degree: usize,
    },
}

#[derive(Args)]
struct ModuleArgs {
    /// Variable names, separated by spaces or commas.
    #[arg(long)]
    ring: String,
    /// Generators, comma separated; `0` for the zero ideal.
    #[arg(long, default_value = "0")]
    ideal: String,
    #[arg(long, default_value_t = 0)]
    shift: usize,
}

#[derive(Args)]
struct FormArgs {
    #[command(flatten)]
    module: ModuleArgs,
    /// Linear forms, comma separated.
    #[arg(long)]
    forms: String,
}

impl ModuleArgs {
    fn script(&self, command: &str) -> String {
        let vars: Vec<&str> = self.ring.split([' ', ',']).filter(|v| !v.is_empty()).collect();
        let shift = if self.shift == 0 { String::new() } else { format!(" shift {}", self.shift) };
        format!("ring {};\nideal I = {};\nmodule M = R/I{shift};\n{command};\n", vars.join(" "), self.ideal)
    }
}

impl FormArgs {
    fn script(&self, command: &str) -> String {
        let base = self.module.script(command);
        let (decls, cmd) = base.rsplit_once("module M").expect("built above");
        let (module_line, cmd) = cmd.split_once('\n').expect("built above");
        format!("{decls}module M{module_line}\nforms F = {};\n{cmd}", self.forms)
    }
}

fn source(cmd: &Cmd) -> std::io::Result<(String, String)> {
    let text = match cmd {
        Cmd::Run { file } => return Ok((file.display().to_string(), std::fs::read_to_string(file)?)),
        Cmd::Examples => unreachable!(),
        Cmd::Series(m) => m.script("series M"),
        Cmd::Coeffs(m) => m.script("coeffs M"),
        Cmd::Depth(m) => m.script("depth M"),
        Cmd::Superficial(f) => f.script("superficial M F"),
        Cmd::Admissible(f) => f.script("admissible M F"),
        Cmd::Verify { forms, index } => forms.script(&format!("verify M F i={index}")),
        Cmd::OracleCheck { module, degree } => module.script(&format!("oracle M {degree}")),
    };
    Ok(("<arguments>".into(), text))
}

fn describe_parse_error(origin: &str, text: &str, e: &DslError) -> String {
    let pos = e.pos();
    let mut out = format!("{origin}:{e}\n");
    if let Some(line) = text.lines().nth(pos.line.saturating_sub(1)) {
        out.push_str(&format!("  {line}\n  {}^\n", " ".repeat(pos.column.saturating_sub(1))));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let options = RunOptions { seed: cli.seed, trials: cli.trials, max_degree: cli.max_degree };
    let report = if let Cmd::Examples = cli.command {
        example_suites(options)
    } else {
        let (origin, text) = match source(&cli.command) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("hilbcalc: {e}");
                return ExitCode::from(2);
            }
        };
        match run_text(&text, options) {
            Ok(report) => report,
            Err(e) => {
                if !cli.quiet {
                    eprint!("{}", describe_parse_error(&origin, &text, &e));
                }
                let mut report = RunReport::new(options);
                let kind = match e {
                    DslError::Lex { .. } | DslError::Parse { .. } => "parse",
                    DslError::Semantic { .. } => "semantic",
                };
                report.error = Some(RunError { kind: kind.into(), message: e.to_string() });
                report
            }
        }
    };
    let text = if cli.json {
        report.to_json_string() + "\n"
    } else if cli.quiet {
        String::new()
    } else {
        report.render_human()
    };
    // a closed pipe is not an error of the run
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    ExitCode::from(report.exit_code() as u8)
}
