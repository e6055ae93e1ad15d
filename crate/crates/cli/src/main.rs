//! `bitourn`: decide, realize and cross-validate bitournament score
//! sequences from the command line.
//!
//! Exit codes: 0 accept/success, 1 reject/not-realizable, 2 input or budget
//! error, 3 internal invariant violation (the two criteria disagreeing).

mod input;
mod render;

use bitourn::check::{
    avery_check, avery_table, landau_check, landau_table, moon_check, moon_table, trim_check,
    CheckReport, Criterion, PrefixRow, Side, Witness,
};
use bitourn::oracle::{census_csv, cross_validate, enumerate_bitournaments, OracleError};
use bitourn::realize::{realize_pair, RealizeError};
use bitourn::seq::{BoundedSeq, IntSeq, SeqError, TrimSchedule};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_ACCEPT: u8 = 0;
const EXIT_REJECT: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "bitourn",
    version,
    about = "Decide, realize and cross-validate bitournament score sequences"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CriterionArg {
    Moon,
    Trim,
    Both,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether "A | B" is the score sequence pair of a bitournament
    Check {
        /// The pair, e.g. "1,1,2,2,3,4 | 1,2,3,5,6"
        pair: String,
        #[arg(long, value_enum, default_value_t = CriterionArg::Both)]
        criterion: CriterionArg,
        /// Print the trimming table or the Moon (k,l) table
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build an explicit bitournament realizing "A | B"
    Realize {
        /// The pair, e.g. "1,1,2,2,3,4 | 1,2,3,5,6"
        pair: String,
        /// Write the orientation in DOT format to this path
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Apply a normal trimming schedule to a sequence
    Trim {
        seq: String,
        /// Comma-separated trim amounts, e.g. "3,5"
        #[arg(long)]
        schedule: String,
        /// Element bound (defaults to the largest element)
        #[arg(long)]
        bound: Option<u64>,
        /// Print the full trimming table
        #[arg(long)]
        trace: bool,
    },
    /// Conjugate a sequence against a bound
    Conjugate {
        seq: String,
        /// Element bound (defaults to the largest element)
        #[arg(long)]
        bound: Option<u64>,
    },
    /// CSV census of sorted score pairs over all orientations of K_{m,n}
    Census { m: usize, n: usize },
    /// Cross-validate enumeration, Moon and trimming at (m, n)
    Verify { m: usize, n: usize },
    /// Landau's tournament score-sequence test
    Landau {
        seq: String,
        /// Print the prefix-sum table
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Avery's digraph score-sequence test
    Avery {
        seq: String,
        /// Print the prefix-sum table
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Check {
            pair,
            criterion,
            trace,
            format,
        } => cmd_check(&pair, criterion, trace, format),
        Cmd::Realize { pair, dot, format } => cmd_realize(&pair, dot.as_deref(), format),
        Cmd::Trim {
            seq,
            schedule,
            bound,
            trace,
        } => cmd_trim(&seq, &schedule, bound, trace),
        Cmd::Conjugate { seq, bound } => cmd_conjugate(&seq, bound),
        Cmd::Census { m, n } => cmd_census(m, n),
        Cmd::Verify { m, n } => cmd_verify(m, n),
        Cmd::Landau { seq, trace, format } => {
            cmd_prefix("landau", &seq, trace, format, landau_check, landau_table)
        }
        Cmd::Avery { seq, trace, format } => {
            cmd_prefix("avery", &seq, trace, format, avery_check, avery_table)
        }
    };
    ExitCode::from(code)
}

fn input_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    EXIT_INPUT
}

/// Build the bounded pair with bounds taken from the partner lengths. An
/// out-of-bound element is a rejection (such a score is achievable by no
/// orientation), not a grammar error.
fn bounded_pair(a: &[u64], b: &[u64]) -> Result<(BoundedSeq, BoundedSeq), Box<CheckReport>> {
    let build = |elems: &[u64], bound: u64, side: Side| {
        BoundedSeq::new(elems.to_vec(), bound).map_err(|err| {
            let SeqError::ElementExceedsBound {
                index,
                value,
                bound,
            } = err
            else {
                unreachable!("construction only rejects out-of-bound elements");
            };
            Box::new(CheckReport::reject(
                Criterion::Trimming,
                Witness::ElementOutOfBound {
                    side,
                    index,
                    value,
                    bound,
                },
            ))
        })
    };
    Ok((
        build(a, b.len() as u64, Side::A)?,
        build(b, a.len() as u64, Side::B)?,
    ))
}

fn trim_report(a: &[u64], b: &[u64]) -> CheckReport {
    match bounded_pair(a, b) {
        Ok((ba, bb)) => trim_check(&ba, &bb),
        Err(report) => *report,
    }
}

fn cmd_check(pair: &str, criterion: CriterionArg, trace: bool, format: Format) -> u8 {
    let (a, b) = match input::parse_pair(pair) {
        Ok(p) => p,
        Err(e) => return input_error(&e),
    };
    let moon = (criterion != CriterionArg::Trim)
        .then(|| moon_check(&IntSeq::new(a.clone()), &IntSeq::new(b.clone())));
    let trim = (criterion != CriterionArg::Moon).then(|| trim_report(&a, &b));

    match format {
        Format::Json => {
            let value = match (&moon, &trim) {
                (Some(m), Some(t)) => serde_json::json!({ "moon": m, "trimming": t }),
                (Some(m), None) => serde_json::to_value(m).expect("report serializes"),
                (None, Some(t)) => serde_json::to_value(t).expect("report serializes"),
                (None, None) => unreachable!("at least one criterion runs"),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("valid json")
            );
        }
        Format::Text => {
            if let Some(report) = &moon {
                println!("{}", render::report_line("moon", report));
                if trace {
                    let table = moon_table(&IntSeq::new(a.clone()), &IntSeq::new(b.clone()));
                    for row in render::moon_rows(&table) {
                        println!("  {row}");
                    }
                }
            }
            if let Some(report) = &trim {
                println!("{}", render::report_line("trimming", report));
                if trace {
                    if let Some(tr) = &report.trace {
                        for row in render::trace_table(tr, "Bbar") {
                            println!("  {row}");
                        }
                    }
                }
            }
        }
    }

    if let (Some(m), Some(t)) = (&moon, &trim) {
        if m.accepted() != t.accepted() {
            eprintln!("internal error: moon and trimming verdicts disagree");
            return EXIT_INTERNAL;
        }
    }
    let accepted = moon
        .as_ref()
        .or(trim.as_ref())
        .expect("at least one criterion runs")
        .accepted();
    if accepted {
        EXIT_ACCEPT
    } else {
        EXIT_REJECT
    }
}

fn render_reject(report: &CheckReport, format: Format) -> u8 {
    match format {
        Format::Text => println!("{}", render::report_line("trimming", report)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        ),
    }
    EXIT_REJECT
}

fn cmd_realize(pair: &str, dot: Option<&Path>, format: Format) -> u8 {
    let (a, b) = match input::parse_pair(pair) {
        Ok(p) => p,
        Err(e) => return input_error(&e),
    };
    let (ba, bb) = match bounded_pair(&a, &b) {
        Ok(p) => p,
        Err(report) => return render_reject(&report, format),
    };
    match realize_pair(&ba, &bb) {
        Ok((t, _log)) => {
            if let Some(path) = dot {
                if let Err(e) = std::fs::write(path, t.to_dot()) {
                    return input_error(&format!("cannot write {}: {e}", path.display()));
                }
            }
            match format {
                Format::Text => {
                    for row in t.matrix_rows() {
                        println!("{row}");
                    }
                }
                Format::Json => {
                    let (xs, ys) = t.scores();
                    let value = serde_json::json!({
                        "m": t.m(),
                        "n": t.n(),
                        "rows": t.matrix_rows(),
                        "x_scores": xs,
                        "y_scores": ys,
                    });
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&value).expect("valid json")
                    );
                }
            }
            EXIT_ACCEPT
        }
        Err(RealizeError::NotRealizable(report)) => render_reject(&report, format),
        Err(err @ RealizeError::TooLarge { .. }) => input_error(&err.to_string()),
    }
}

fn cmd_trim(seq: &str, schedule: &str, bound: Option<u64>, trace: bool) -> u8 {
    let elems = match input::parse_elements(seq, "sequence") {
        Ok(v) => v,
        Err(e) => return input_error(&e),
    };
    let amounts = match input::parse_elements(schedule, "schedule") {
        Ok(v) => v,
        Err(e) => return input_error(&e),
    };
    let bound = bound.unwrap_or_else(|| elems.iter().copied().max().unwrap_or(0));
    let s = match BoundedSeq::new(elems, bound) {
        Ok(s) => s,
        Err(e) => return input_error(&e.to_string()),
    };
    match s.trim_by(&TrimSchedule::new(amounts)) {
        Ok((out, tr)) => {
            if trace {
                for row in render::trace_table(&tr, "A") {
                    println!("{row}");
                }
            }
            println!("{out}");
            EXIT_ACCEPT
        }
        Err(fail) => {
            eprintln!("step {}: {}", fail.step, fail.source);
            EXIT_REJECT
        }
    }
}

fn cmd_conjugate(seq: &str, bound: Option<u64>) -> u8 {
    let elems = match input::parse_elements(seq, "sequence") {
        Ok(v) => v,
        Err(e) => return input_error(&e),
    };
    let bound = bound.unwrap_or_else(|| elems.iter().copied().max().unwrap_or(0));
    match BoundedSeq::new(elems, bound) {
        Ok(s) => {
            println!("{}", s.conjugate());
            EXIT_ACCEPT
        }
        Err(e) => input_error(&e.to_string()),
    }
}

fn cmd_census(m: usize, n: usize) -> u8 {
    match enumerate_bitournaments(m, n) {
        Ok(entries) => {
            print!("{}", census_csv(&entries));
            EXIT_ACCEPT
        }
        Err(e) => input_error(&e.to_string()),
    }
}

fn cmd_verify(m: usize, n: usize) -> u8 {
    match cross_validate(m, n) {
        Ok(report) => {
            println!("{report}");
            EXIT_ACCEPT
        }
        Err(OracleError::BudgetExceeded { bits, max }) => input_error(&format!(
            "{bits} orientation bits exceed the budget of {max}"
        )),
        Err(OracleError::Discrepancy(witnesses)) => {
            eprintln!("internal error: three-way validation failed:");
            for w in witnesses {
                eprintln!("  {w}");
            }
            EXIT_INTERNAL
        }
    }
}

fn cmd_prefix(
    name: &str,
    seq: &str,
    trace: bool,
    format: Format,
    check: fn(&IntSeq) -> CheckReport,
    table: fn(&IntSeq) -> Vec<PrefixRow>,
) -> u8 {
    let elems = match input::parse_elements(seq, "sequence") {
        Ok(v) => v,
        Err(e) => return input_error(&e),
    };
    let s = IntSeq::new(elems);
    let report = check(&s);
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        ),
        Format::Text => {
            println!("{}", render::report_line(name, &report));
            if trace {
                for row in render::prefix_rows(&table(&s)) {
                    println!("  {row}");
                }
            }
        }
    }
    if report.accepted() {
        EXIT_ACCEPT
    } else {
        EXIT_REJECT
    }
}
