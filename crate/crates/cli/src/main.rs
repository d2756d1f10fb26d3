use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use twistcoh::connecting::SesSpec;
use twistcoh::groups::GroupSpec;
use twistcoh::report::{Report, SCHEMA};
use twistcoh::runner::{run, Command, FieldSpec, RunConfig, RunOutcome, VerifyTarget};
use twistcoh::twisted::CocycleSpec;

#[derive(Parser)]
#[command(name = "twistcoh", version, about = "Cohomology of twisted group algebras, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimensions of HH, HHS, H and HS in each degree
    Cohomology,
    /// Run one family of checks
    Verify {
        #[arg(value_enum)]
        target: Target,
    },
    /// Cohomology table followed by every applicable check
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Decomposition,
    Action,
    Maps,
    Embedding,
    Connecting,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Output {
    #[default]
    Json,
    Table,
}

#[derive(Args)]
struct Opts {
    /// Group as JSON, e.g. '{"family":"symmetric","n":3}'
    #[arg(long, global = true)]
    group: Option<String>,
    /// Cocycle as JSON, e.g. '{"kind":"pairing","zeta":"4"}'
    #[arg(long, global = true)]
    cocycle: Option<String>,
    /// Field as JSON: '{"Fp":7}' or '"Q"' (bare Q is accepted)
    #[arg(long, global = true)]
    field: Option<String>,
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Largest number of basis elements of any cochain space
    #[arg(long, global = true)]
    budget: Option<u128>,
    /// Coefficient sequence as JSON, e.g. '{"p":3}'
    #[arg(long, global = true)]
    ses: Option<String>,
    /// Relabel group elements by a seeded random permutation
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Record per-report wall-clock time
    #[arg(long, global = true)]
    timing: bool,
    /// Read the whole run configuration from a JSON file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t, global = true)]
    output: Output,
}

fn parse<T: serde::de::DeserializeOwned>(flag: &str, text: &str) -> Result<T, String> {
    serde_json::from_str(text).map_err(|e| format!("--{flag}: {e}"))
}

fn parse_field(text: &str) -> Result<FieldSpec, String> {
    if text.trim() == "Q" {
        return Ok(FieldSpec::Q);
    }
    parse("field", text)
}

fn build_config(cli: &Cli) -> Result<RunConfig, String> {
    let command = match cli.command {
        Cmd::Cohomology => Command::Cohomology,
        Cmd::All => Command::All,
        Cmd::Verify { target } => Command::Verify(match target {
            Target::Decomposition => VerifyTarget::Decomposition,
            Target::Action => VerifyTarget::Action,
            Target::Maps => VerifyTarget::Maps,
            Target::Embedding => VerifyTarget::Embedding,
            Target::Connecting => VerifyTarget::Connecting,
        }),
    };
    let o = &cli.opts;
    if let Some(path) = &o.config {
        let text = std::fs::read_to_string(path).map_err(|e| format!("--config {}: {e}", path.display()))?;
        let mut cfg: RunConfig = parse("config", &text)?;
        cfg.command = command;
        return Ok(cfg);
    }
    let group: GroupSpec = match &o.group {
        Some(g) => parse("group", g)?,
        None => return Err("--group is required".into()),
    };
    let mut cfg = RunConfig::new(command, group);
    if let Some(c) = &o.cocycle {
        cfg.cocycle = parse::<CocycleSpec>("cocycle", c)?;
    }
    cfg.field = o.field.as_deref().map(parse_field).transpose()?;
    cfg.ses = o.ses.as_deref().map(|s| parse::<SesSpec>("ses", s)).transpose()?;
    if let Some(d) = o.max_degree {
        cfg.max_degree = d;
    }
    if let Some(b) = o.budget {
        cfg.budget = b;
    }
    cfg.seed = o.seed;
    cfg.timing = o.timing;
    Ok(cfg)
}

fn document(outcome: &RunOutcome) -> Value {
    json!({
        "schema": SCHEMA,
        "pass": outcome.passed(),
        "exit_code": outcome.exit_code(),
        "error": outcome.error.as_ref().map(|e| e.to_string()),
        "reports": outcome.reports,
    })
}

fn dim(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |d| d.to_string())
}

fn print_table(outcome: &RunOutcome) {
    for r in &outcome.reports {
        print_report(r);
    }
    if let Some(e) = &outcome.error {
        println!("error: {e}");
    }
    println!("overall: {}", if outcome.passed() { "PASS" } else { "FAIL" });
}

fn print_report(r: &Report) {
    if let Some(rows) = r.details.get("table").and_then(Value::as_array) {
        println!("{:<8}{:>6}{:>6}{:>6}{:>6}", "degree", "HH", "HHS", "H", "HS");
        for row in rows {
            let cell = |k: &str| row[k].to_string();
            println!(
                "{:<8}{:>6}{:>6}{:>6}{:>6}",
                cell("degree"),
                cell("HH"),
                cell("HHS"),
                cell("H"),
                cell("HS")
            );
        }
        return;
    }
    let degree = r.degree.map_or_else(|| "-".to_string(), |d| d.to_string());
    println!(
        "{:<24} n={:<3} lhs={:<6} rhs={:<6} {}",
        r.claim,
        degree,
        dim(r.lhs_dim),
        dim(r.rhs_dim),
        if r.pass { "PASS" } else { "FAIL" }
    );
    for w in &r.witnesses {
        println!("    witness: {w}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match build_config(&cli) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let outcome = run(&cfg);
    match cli.opts.output {
        Output::Json => match serde_json::to_string_pretty(&document(&outcome)) {
            Ok(text) => println!("{text}"),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        Output::Table => print_table(&outcome),
    }
    ExitCode::from(outcome.exit_code() as u8)
}
