use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use hugheslab::constructions::standard_family;
use hugheslab::harness::{
    analyze, builtin, builtin_catalog, hunt, parse_catalog, render_table, run_suite, write_catalog,
    AnalysisReport, GroupRecord,
};
use hugheslab::hughes::PiChoice;
use hugheslab::PermGroup;

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_EXCEPTIONAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hugheslab",
    version,
    about = "Hughes subgroups of finite permutation groups"
)]
struct Cli {
    /// Enumeration cap (overrides HUGHESLAB_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Write the output stream to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group: `builtin:NAME`, a builtin name, an inline JSON
    /// record, or a record name inside --catalog.
    Analyze {
        source: String,
        #[arg(long, default_value = "ALL")]
        pi: String,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        table: bool,
    },
    /// Analyze every record of a catalog (the builtin catalog by default).
    Scan {
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, default_value = "ALL")]
        pi: String,
        /// Skip groups larger than this.
        #[arg(long)]
        max_order: Option<u128>,
        #[arg(long)]
        table: bool,
    },
    /// Run the prefilter over all prime pairs.
    Hunt {
        /// Largest kernel order considered.
        #[arg(long, default_value_t = 1_000_000)]
        max_order: u128,
        #[arg(long, default_value_t = 13)]
        max_p: u64,
        #[arg(long, default_value_t = 13)]
        max_q: u64,
        #[arg(long)]
        table: bool,
    },
    /// Emit builtin groups (or `all`) as catalog lines. With --family, the
    /// names are read as family parameters instead.
    Construct {
        names: Vec<String>,
        #[arg(long)]
        family: Option<String>,
    },
    /// Run the verification suite.
    Verify,
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("hugheslab: {msg}");
    ExitCode::from(code)
}

fn emit(out: &Option<PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn with_cap(group: PermGroup, cap: Option<usize>) -> PermGroup {
    match cap {
        Some(c) => group.with_cap(c),
        None => group,
    }
}

fn resolve_source(source: &str, catalog: &Option<PathBuf>) -> Result<(String, PermGroup), String> {
    if let Some(path) = catalog {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        for rec in parse_catalog(&text) {
            let rec = rec.map_err(|e| format!("line {}: {}", e.line, e.message))?;
            if rec.name == source {
                let g = rec.to_group().map_err(|e| e.to_string())?;
                return Ok((rec.name, g));
            }
        }
        return Err(format!("no record named {source:?}"));
    }
    if source.trim_start().starts_with('{') {
        let rec: GroupRecord = serde_json::from_str(source).map_err(|e| e.to_string())?;
        let g = rec.to_group().map_err(|e| e.to_string())?;
        return Ok((rec.name, g));
    }
    let name = source.strip_prefix("builtin:").unwrap_or(source);
    builtin(name)
        .map(|g| (name.to_string(), g))
        .map_err(|e| e.to_string())
}

fn exit_for(reports: &[AnalysisReport], errors: usize) -> ExitCode {
    if reports.iter().any(AnalysisReport::is_exceptional) {
        ExitCode::from(EXIT_EXCEPTIONAL)
    } else if errors > 0 || reports.iter().any(|r| !r.is_clean()) {
        ExitCode::from(EXIT_VIOLATION)
    } else {
        ExitCode::SUCCESS
    }
}

fn run(cli: Cli) -> io::Result<ExitCode> {
    let cap = cli.cap;
    match cli.command {
        Command::Analyze {
            source,
            pi,
            catalog,
            table,
        } => {
            let choice: PiChoice = match pi.parse() {
                Ok(c) => c,
                Err(e) => return Ok(fail(EXIT_USAGE, format!("--pi: {e}"))),
            };
            let (name, group) = match resolve_source(&source, &catalog) {
                Ok(x) => x,
                Err(e) => return Ok(fail(EXIT_USAGE, e)),
            };
            let report = match analyze(&name, &with_cap(group, cap), &choice) {
                Ok(r) => r,
                Err(e) => return Ok(fail(EXIT_VIOLATION, e)),
            };
            let text = if table {
                render_table(std::slice::from_ref(&report))
            } else {
                format!("{}\n", report.to_line())
            };
            emit(&cli.out, &text)?;
            Ok(exit_for(&[report], 0))
        }
        Command::Scan {
            catalog,
            pi,
            max_order,
            table,
        } => {
            let choice: PiChoice = match pi.parse() {
                Ok(c) => c,
                Err(e) => return Ok(fail(EXIT_USAGE, format!("--pi: {e}"))),
            };
            let entries: Vec<Result<GroupRecord, (usize, String)>> = match &catalog {
                Some(path) => match fs::read_to_string(path) {
                    Ok(text) => parse_catalog(&text)
                        .into_iter()
                        .map(|r| r.map_err(|e| (e.line, e.message)))
                        .collect(),
                    Err(e) => return Ok(fail(EXIT_USAGE, format!("{}: {e}", path.display()))),
                },
                None => builtin_catalog().iter().map(|e| Ok(e.record())).collect(),
            };
            enum Row {
                Report(Box<AnalysisReport>),
                Error(usize, String),
                Skipped(String, u128),
            }
            let rows: Vec<Row> = entries
                .par_iter()
                .enumerate()
                .map(|(i, entry)| match entry {
                    Err((line, msg)) => Row::Error(*line, msg.clone()),
                    Ok(rec) => {
                        let group = match rec.to_group() {
                            Ok(g) => with_cap(g, cap),
                            Err(e) => return Row::Error(i + 1, e.to_string()),
                        };
                        if max_order.is_some_and(|m| group.order() > m) {
                            return Row::Skipped(rec.name.clone(), group.order());
                        }
                        match analyze(&rec.name, &group, &choice) {
                            Ok(r) => Row::Report(Box::new(r)),
                            Err(e) => Row::Error(i + 1, format!("{}: {e}", rec.name)),
                        }
                    }
                })
                .collect();
            let mut reports = Vec::new();
            let mut lines = String::new();
            let mut errors = 0;
            let mut skipped = 0;
            for row in rows {
                match row {
                    Row::Report(r) => {
                        if !table {
                            lines.push_str(&r.to_line());
                            lines.push('\n');
                        }
                        reports.push(*r);
                    }
                    Row::Error(line, msg) => {
                        errors += 1;
                        lines.push_str(&json!({ "line": line, "error": msg }).to_string());
                        lines.push('\n');
                    }
                    Row::Skipped(name, order) => {
                        skipped += 1;
                        lines.push_str(&json!({ "name": name, "skipped": order }).to_string());
                        lines.push('\n');
                    }
                }
            }
            let violations: usize = reports.iter().map(|r| r.violations.len()).sum();
            let exceptional = reports.iter().filter(|r| r.is_exceptional()).count();
            let mut text = if table {
                render_table(&reports)
            } else {
                String::new()
            };
            text.push_str(&lines);
            let summary = json!({ "summary": {
                "reports": reports.len(),
                "errors": errors,
                "skipped": skipped,
                "violations": violations,
                "exceptional": exceptional,
            }});
            text.push_str(&summary.to_string());
            text.push('\n');
            emit(&cli.out, &text)?;
            Ok(exit_for(&reports, errors))
        }
        Command::Hunt {
            max_order,
            max_p,
            max_q,
            table,
        } => {
            let h = match hunt(Some(max_order), max_p, max_q) {
                Ok(h) => h,
                Err(e) => return Ok(fail(EXIT_USAGE, e)),
            };
            let mut text = String::new();
            for v in &h.verdicts {
                if table {
                    let reasons: Vec<&str> = v.rejections().map(|f| f.citation.as_str()).collect();
                    let verdict = if v.rejected { "REJECT" } else { "PASS" };
                    text.push_str(&format!(
                        "p={:<3} q={:<3} {verdict:<6} {}\n",
                        v.p,
                        v.q,
                        if v.rejected {
                            reasons.join(" | ")
                        } else {
                            v.obligations.join(" | ")
                        }
                    ));
                } else {
                    text.push_str(&v.to_line());
                    text.push('\n');
                }
            }
            text.push_str(&json!({ "summary": h.summary }).to_string());
            text.push('\n');
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { names, family } => {
            let records = if let Some(family) = family {
                let params: Result<Vec<u64>, _> = names.iter().map(|n| n.parse::<u64>()).collect();
                let params = match params {
                    Ok(p) => p,
                    Err(e) => return Ok(fail(EXIT_USAGE, format!("parameters: {e}"))),
                };
                match standard_family(&family, &params) {
                    Ok(g) => {
                        let label = std::iter::once(family.clone())
                            .chain(params.iter().map(u64::to_string))
                            .collect::<Vec<_>>()
                            .join("-");
                        vec![GroupRecord::from_group(&label, &g, &[])]
                    }
                    Err(e) => return Ok(fail(EXIT_USAGE, e)),
                }
            } else if names.iter().any(|n| n.eq_ignore_ascii_case("all")) || names.is_empty() {
                builtin_catalog().iter().map(|e| e.record()).collect()
            } else {
                let catalog = builtin_catalog();
                let mut out = Vec::new();
                for n in &names {
                    let n = n.strip_prefix("builtin:").unwrap_or(n);
                    match catalog.iter().find(|e| e.name.eq_ignore_ascii_case(n)) {
                        Some(e) => out.push(e.record()),
                        None => return Ok(fail(EXIT_USAGE, format!("unknown group: {n}"))),
                    }
                }
                out
            };
            emit(&cli.out, &write_catalog(&records))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify => {
            let outcomes = run_suite();
            let text: String = outcomes.iter().map(|o| o.line() + "\n").collect();
            emit(&cli.out, &text)?;
            Ok(if outcomes.iter().all(|o| o.passed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VIOLATION)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => fail(EXIT_VIOLATION, e),
    }
}
