use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, ValueEnum};
use serde_json::Value;

use renvlie::cli::{self, catalog, exit_code, run, run_entry, Command, Report, RunOptions};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Lie structure of restricted enveloping algebras u(L) over prime fields.
#[derive(Debug, Parser)]
#[command(name = "renvlie", version)]
#[command(group(ArgGroup::new("input").required(true).args(["algebra", "catalog", "list_catalog"])))]
struct Args {
    /// Algebra description file.
    #[arg(long, value_name = "FILE")]
    algebra: Option<std::path::PathBuf>,

    /// Catalog entry name, or `all` for every entry.
    #[arg(long, value_name = "NAME")]
    catalog: Option<String>,

    /// validate, env-info, lie-class, derived-length, dim-subalgebras, class-formula, bounds,
    /// "theorem <id>", involution, units or all.
    #[arg(long, value_name = "ID", default_value = "all")]
    check: String,

    /// Largest dimension of u(L) that will be built.
    #[arg(long, env = "RENVLIE_MAX_ENV_DIM", default_value_t = renvlie::env::DEFAULT_MAX_ENV_DIM)]
    max_env_dim: usize,

    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Include a basis of every series term.
    #[arg(long)]
    emit_chains: bool,

    /// List catalog entries and exit.
    #[arg(long)]
    list_catalog: bool,
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("renvlie: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.list_catalog {
        for e in catalog() {
            println!("{:<24} {}", e.name, e.summary);
        }
        return ExitCode::SUCCESS;
    }
    let command: Command = match args.check.parse() {
        Ok(c) => c,
        Err(e) => return input_error(e),
    };
    let opts = RunOptions { max_env_dim: args.max_env_dim, emit_chains: args.emit_chains };

    let reports: Vec<Report> = if let Some(path) = &args.algebra {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return input_error(format!("{}: {e}", path.display())),
        };
        let lie = match cli::parse(&text) {
            Ok(l) => l,
            Err(e) => return input_error(format!("{}: {e}", path.display())),
        };
        let name = path.file_stem().and_then(|s| s.to_str());
        vec![run(&command, lie, name, &[], &opts)]
    } else {
        let name = args.catalog.as_deref().unwrap_or_default();
        let entries: Vec<_> = catalog().into_iter().filter(|e| name == "all" || e.name == name).collect();
        if entries.is_empty() {
            return input_error(format!("no catalog entry `{name}`; see --list-catalog"));
        }
        let mut out = Vec::new();
        for e in &entries {
            match run_entry(&command, e, &opts) {
                Ok(r) => out.push(r),
                Err(err) => return input_error(format!("{}: {err}", e.name)),
            }
        }
        out
    };

    match args.format {
        Format::Text => {
            let mut out = std::io::stdout().lock();
            for r in &reports {
                if out.write_all(r.to_text().as_bytes()).is_err() {
                    break;
                }
            }
        }
        Format::Json => {
            let v = if reports.len() == 1 {
                reports[0].to_json()
            } else {
                Value::Array(reports.iter().map(Report::to_json).collect())
            };
            let _ = writeln!(
                std::io::stdout().lock(),
                "{}",
                serde_json::to_string_pretty(&v).expect("serializable")
            );
        }
    }
    ExitCode::from(exit_code(&reports) as u8)
}
