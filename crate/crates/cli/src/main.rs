use std::path::{Path, PathBuf};
use std::process::ExitCode;

use biquot_core::case::{
    builtin_case, emit_report, list_builtin_cases, parse_case, render_report, run_case,
    BuiltinParams, Report, RunOptions,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "biquot", version, about = "Exact verification of tangent-bundle splitting and obstruction cases")]
struct Cli {
    /// Worker threads for searches (defaults to all cores).
    #[arg(long, global = true, env = "BIQUOT_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every section of a case and print the report.
    Verify {
        #[command(flatten)]
        case: CaseArgs,
        /// Fail with exit code 1 unless the report has this verdict.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
        /// Override the search budget (tuples).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run the genus and congruence sections of a case.
    Genus {
        #[command(flatten)]
        case: CaseArgs,
    },
    /// Dump the irreducible catalogs requested by a case.
    Reps {
        #[command(flatten)]
        case: CaseArgs,
    },
    /// Run the obstruction section of a case.
    Obstruct {
        #[command(flatten)]
        case: CaseArgs,
    },
    /// List the built-in cases.
    List,
    /// Print the document of a built-in case.
    Show {
        #[command(flatten)]
        case: CaseArgs,
    },
}

#[derive(Args)]
struct CaseArgs {
    /// Path to a case document, or the name of a built-in case.
    case: String,
    /// `q` for the `r-p` family.
    #[arg(long)]
    q: Option<i64>,
    /// `n` for the `cpn-split` and `genus-cpn` families.
    #[arg(long)]
    n: Option<u32>,
    /// Also write the report to this file.
    #[arg(long)]
    emit: Option<PathBuf>,
    /// Include wall-clock times in the report.
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Expect {
    NoSolutions,
    Solutions,
    CongruenceFails,
}

fn load(args: &CaseArgs) -> Result<Value, String> {
    let path = Path::new(&args.case);
    if path.is_file() {
        if args.q.is_some() || args.n.is_some() {
            return Err("--q and --n only apply to built-in cases".into());
        }
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        return serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()));
    }
    let params = BuiltinParams { q: args.q, n: args.n };
    builtin_case(&args.case, &params).map_err(|e| e.to_string())
}

fn retain(doc: &mut Value, keys: &[&str]) {
    if let Value::Object(m) = doc {
        m.retain(|k, _| keys.contains(&k.as_str()));
    }
}

const RING_KEYS: [&str; 6] = ["name", "description", "generators", "relations", "top_degree", "fundamental"];

fn run(doc: Value, args: &CaseArgs) -> Result<Report, String> {
    let case = parse_case(&doc).map_err(|e| e.to_string())?;
    let report = run_case(&case, &RunOptions { timings: args.timings }).map_err(|e| e.to_string())?;
    print!("{}", render_report(&report));
    if let Some(path) = &args.emit {
        emit_report(&report, path).map_err(|e| e.to_string())?;
    }
    Ok(report)
}

fn check(expect: Expect, report: &Report) -> Result<(), String> {
    let ok = match expect {
        Expect::NoSolutions => report.solutions == Some(0) && report.exhaustive == Some(true),
        Expect::Solutions => report.solutions.is_some_and(|n| n > 0),
        Expect::CongruenceFails => report.congruence_holds == Some(false),
    };
    if ok {
        Ok(())
    } else {
        Err(format!(
            "expectation not met for `{}`: solutions={:?} exhaustive={:?} congruence_holds={:?}",
            report.case, report.solutions, report.exhaustive, report.congruence_holds
        ))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result: Result<Option<(Expect, Report)>, String> = (|| match cli.command {
        Command::List => {
            for (name, info) in list_builtin_cases() {
                println!("{name:<22} {}", info.description);
            }
            Ok(None)
        }
        Command::Show { case } => {
            let doc = load(&case)?;
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
            Ok(None)
        }
        Command::Verify { case, expect, budget } => {
            let mut doc = load(&case)?;
            if let Some(b) = budget {
                match doc.get_mut("search") {
                    Some(Value::Object(s)) => {
                        s.insert("budget".into(), b.into());
                    }
                    _ => return Err("--budget given but the case has no search section".into()),
                }
            }
            let report = run(doc, &case)?;
            Ok(expect.map(|e| (e, report)))
        }
        Command::Genus { case } => {
            let mut doc = load(&case)?;
            let keys: Vec<&str> = RING_KEYS.iter().copied().chain(["genus", "congruence"]).collect();
            retain(&mut doc, &keys);
            if doc.get("genus").is_none() {
                return Err(format!("case `{}` has no genus section", case.case));
            }
            run(doc, &case).map(|_| None)
        }
        Command::Reps { case } => {
            let mut doc = load(&case)?;
            retain(&mut doc, &["name", "description", "reps"]);
            if doc.get("reps").is_none() {
                return Err(format!("case `{}` has no reps section", case.case));
            }
            run(doc, &case).map(|_| None)
        }
        Command::Obstruct { case } => {
            let mut doc = load(&case)?;
            retain(&mut doc, &["name", "description", "congruence", "obstruction"]);
            if doc.get("obstruction").is_none() {
                return Err(format!("case `{}` has no obstruction section", case.case));
            }
            run(doc, &case).map(|_| None)
        }
    })();
    match result {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some((expect, report))) => match check(expect, &report) {
            Ok(()) => ExitCode::SUCCESS,
            Err(msg) => {
                eprintln!("{msg}");
                ExitCode::from(1)
            }
        },
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
