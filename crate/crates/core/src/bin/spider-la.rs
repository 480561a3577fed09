use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use spider_la::bounds::bounds;
use spider_la::certificate::{load_certificate, TheoremId};
use spider_la::construct::dispatch;
use spider_la::construct::sweep::{sweep, SWEEPABLE};
use spider_la::dot::to_dot;
use spider_la::solver::{chi_la_exact, conjecture_scan, SearchConfig, SolveStatus};
use spider_la::{SpiderGraph, SpiderSignature};

const OK: u8 = 0;
const FAILED: u8 = 1;
const NO_CONSTRUCTION: u8 = 2;
const USAGE: u8 = 3;
const BUDGET: u8 = 4;

#[derive(Parser)]
#[command(
    name = "spider-la",
    version,
    about = "Local antimagic labelings of spider graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a certificate for a signature such as "2,3,2" or "2^4,3^2".
    Construct {
        signature: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-verify a certificate file.
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Proved lower and upper bounds.
    Bounds {
        signature: String,
        #[arg(long)]
        json: bool,
    },
    /// Exact value by exhaustive search.
    Exact {
        signature: String,
        /// Search nodes per color count; 0 means unlimited.
        #[arg(long, default_value_t = 200_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Solve every spider with at least 3 legs of length 2 or more, up to
    /// `max_q` edges, that satisfies d(d+1) <= 2(2q-1).
    Scan {
        #[arg(long, default_value_t = 11)]
        max_q: usize,
        #[arg(long, default_value_t = 200_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run generators over their parameter grids.
    Sweep {
        /// Generator id, or "all".
        #[arg(long, default_value = "all")]
        constructor: String,
        /// Largest value of each free parameter.
        #[arg(long, default_value_t = 12)]
        grid: usize,
        #[arg(long)]
        json: bool,
    },
    /// Graphviz DOT for a certificate file.
    ExportDot {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn parse_sig(text: &str) -> Result<SpiderSignature, ExitCode> {
    text.parse().map_err(|e| fail(USAGE, e))
}

fn config(budget: u64, jobs: usize) -> SearchConfig {
    SearchConfig {
        node_budget: (budget > 0).then_some(budget),
        jobs,
    }
}

fn emit(text: &str, output: Option<PathBuf>) -> ExitCode {
    match output {
        Some(path) => match fs::write(&path, text) {
            Ok(()) => ExitCode::from(OK),
            Err(e) => fail(USAGE, format!("{}: {e}", path.display())),
        },
        None => {
            print!("{text}");
            ExitCode::from(OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) | Err(code) => code,
    }
}

fn run(command: Command) -> Result<ExitCode, ExitCode> {
    Ok(match command {
        Command::Construct { signature, output } => {
            let sig = parse_sig(&signature)?;
            match dispatch(&sig) {
                Ok(cert) => emit(&(cert.to_json() + "\n"), output),
                Err(miss) => {
                    eprintln!("{miss}");
                    for m in &miss.near_misses {
                        eprintln!("  near miss: {m}");
                    }
                    ExitCode::from(NO_CONSTRUCTION)
                }
            }
        }
        Command::Verify { file, json } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| fail(USAGE, format!("{}: {e}", file.display())))?;
            let loaded = load_certificate(&text).map_err(|e| fail(FAILED, e))?;
            let r = &loaded.report;
            let passed = r.passed() && loaded.embedded_matches;
            if json {
                let out = json!({
                    "signature": loaded.certificate.signature,
                    "passed": passed,
                    "embedded_matches": loaded.embedded_matches,
                    "report": r,
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out).expect("report serializes")
                );
            } else {
                let colors: Vec<String> = r.colors.iter().map(u64::to_string).collect();
                println!(
                    "{}: {} colors ({})",
                    loaded.certificate.signature,
                    r.color_count,
                    colors.join(", ")
                );
                if let Some(v) = &r.violation {
                    println!("violation: {v}");
                }
                if !loaded.embedded_matches {
                    println!("embedded verification block does not match");
                }
                println!("{}", if passed { "pass" } else { "fail" });
            }
            ExitCode::from(if passed { OK } else { FAILED })
        }
        Command::Bounds { signature, json } => {
            let sig = parse_sig(&signature)?;
            let b = bounds(&sig).map_err(|e| fail(USAGE, e))?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&b).expect("bounds serialize")
                );
            } else {
                let exact = b.exact.map_or("unknown".to_string(), |x| x.to_string());
                println!("{sig}: lower {}, upper {}, exact {exact}", b.lower, b.upper);
                for (rule, what) in &b.provenance {
                    println!("  {rule}: {what}");
                }
            }
            ExitCode::from(OK)
        }
        Command::Exact {
            signature,
            budget,
            jobs,
            json,
        } => {
            let sig = parse_sig(&signature)?;
            let out = chi_la_exact(&SpiderGraph::new(sig.clone()), config(budget, jobs));
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out).expect("outcome serializes")
                );
            } else {
                match (out.status, out.chi_la) {
                    (SolveStatus::Exact, Some(x)) => {
                        println!("{sig}: chi_la = {x} ({} nodes)", out.nodes_explored);
                        if let Some(w) = &out.witness {
                            for (i, leg) in w.legs().iter().enumerate() {
                                let labels: Vec<String> = leg.iter().map(u32::to_string).collect();
                                println!("  leg {}: {}", i + 1, labels.join(" "));
                            }
                        }
                    }
                    _ => println!(
                        "{sig}: unknown, at least {} ({} nodes, budget exhausted)",
                        out.proved_lower, out.nodes_explored
                    ),
                }
            }
            ExitCode::from(if out.status == SolveStatus::Exact {
                OK
            } else {
                BUDGET
            })
        }
        Command::Scan {
            max_q,
            budget,
            jobs,
            json,
        } => {
            let report = conjecture_scan(max_q, config(budget, jobs));
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                for e in &report.entries {
                    let value = e.chi_la.map_or("unknown".to_string(), |x| x.to_string());
                    let mut line = format!("{} d={} chi_la={value}", e.signature, e.legs);
                    if e.listed_exception {
                        line.push_str(" listed-exception");
                    }
                    if e.counterexample {
                        line.push_str(" UNEXPECTED");
                    }
                    println!("{line}");
                }
                println!(
                    "{} signatures, {} unexpected, {} unresolved",
                    report.entries.len(),
                    report.counterexamples().count(),
                    report.unresolved().count()
                );
            }
            ExitCode::from(OK)
        }
        Command::Sweep {
            constructor,
            grid,
            json,
        } => {
            let theorems: Vec<TheoremId> = if constructor == "all" {
                SWEEPABLE.to_vec()
            } else {
                let t: TheoremId = constructor.parse().map_err(|e| fail(USAGE, e))?;
                if !SWEEPABLE.contains(&t) {
                    return Err(fail(USAGE, format!("{t} has no parameter grid")));
                }
                vec![t]
            };
            let reports: Vec<_> = theorems.into_iter().map(|t| sweep(t, grid)).collect();
            let failed = reports.iter().any(|r| !r.failures.is_empty());
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                );
            } else {
                for r in &reports {
                    println!(
                        "{}: {} instances, {} failures",
                        r.theorem,
                        r.instances,
                        r.failures.len()
                    );
                    if let Some(f) = r.failures.first() {
                        println!("  first failure at {:?}: {}", f.params, f.error);
                    }
                }
            }
            ExitCode::from(if failed { FAILED } else { OK })
        }
        Command::ExportDot { file, output } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| fail(USAGE, format!("{}: {e}", file.display())))?;
            let loaded = load_certificate(&text).map_err(|e| fail(FAILED, e))?;
            if !loaded.report.passed() {
                return Err(fail(
                    FAILED,
                    format!(
                        "invalid certificate: {}",
                        loaded
                            .report
                            .violation
                            .as_ref()
                            .expect("failed report has a violation")
                    ),
                ));
            }
            let dot = to_dot(&loaded.certificate).map_err(|e| fail(FAILED, e))?;
            emit(&dot, output)
        }
    })
}
