//! Text rendering for reports, trimming tables and prefix tables. All
//! output is byte-deterministic for a given input.

use bitourn::check::{CheckReport, MoonRow, PrefixRow, Verdict};
use bitourn::seq::TrimTrace;

/// `"moon: accept"` or `"trimming: reject (<witness>)"`.
pub fn report_line(name: &str, report: &CheckReport) -> String {
    match report.verdict {
        Verdict::Accept => format!("{name}: accept"),
        Verdict::Reject => {
            let witness = report
                .witness
                .as_ref()
                .map(|w| w.to_string())
                .unwrap_or_default();
            format!("{name}: reject ({witness})")
        }
    }
}

/// The trimming table, one row per sequence, subscripted with the schedule
/// applied so far:
///
/// ```text
/// Bbar              = 5,4,3,1,0
/// Bbar_<1>          = 4,4,3,1,0
/// Bbar_<1,1>        = 3,4,3,1,0
/// ```
pub fn trace_table(trace: &TrimTrace, base: &str) -> Vec<String> {
    let mut labels = vec![base.to_string()];
    let mut applied: Vec<String> = Vec::new();
    for step in &trace.steps {
        applied.push(step.amount.to_string());
        labels.push(format!("{base}_<{}>", applied.join(",")));
    }
    let width = labels.iter().map(|l| l.len()).max().unwrap_or(0);
    labels
        .iter()
        .zip(trace.rows())
        .map(|(label, row)| format!("{label:<width$} = {row}"))
        .collect()
}

pub fn moon_rows(rows: &[MoonRow]) -> Vec<String> {
    rows.iter()
        .map(|r| format!("k={} l={} sum={} kl={}", r.k, r.l, r.sum, r.product))
        .collect()
}

pub fn prefix_rows(rows: &[PrefixRow]) -> Vec<String> {
    rows.iter()
        .map(|r| format!("k={} sum={} required={}", r.k, r.sum, r.required))
        .collect()
}
