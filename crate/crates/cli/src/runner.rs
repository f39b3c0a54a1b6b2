//! Parallel classification driver and the stderr summary derived from
//! the serialized reports.

use std::fmt::Write as _;
use std::thread;

use legendric_core::error::{Error, Result};
use legendric_core::{classify, enumerate_tuples, ClassificationReport};

use crate::json::ReportDto;
use crate::manifest::SearchBounds;

/// Classifies every enumerated tuple, splitting the work across `jobs`
/// threads. Reports come back in enumeration order regardless of the
/// worker count: each worker writes into its own pre-assigned slots.
pub fn classify_all_parallel(
    n: usize,
    a_max: i64,
    trials: usize,
    seed: u64,
    jobs: usize,
) -> Result<Vec<ClassificationReport>> {
    if n < 3 {
        return Err(Error::BadBounds("classification needs tuple length at least 3"));
    }
    let tuples = enumerate_tuples(n, a_max)?.tuples;
    let jobs = jobs.max(1);
    if jobs == 1 || tuples.len() <= 1 {
        return Ok(tuples.iter().map(|t| classify(t, trials, seed)).collect());
    }
    let chunk = tuples.len().div_ceil(jobs);
    let mut results: Vec<Option<ClassificationReport>> = vec![None; tuples.len()];
    thread::scope(|scope| {
        for (tuple_chunk, result_chunk) in tuples.chunks(chunk).zip(results.chunks_mut(chunk)) {
            scope.spawn(move || {
                for (tuple, slot) in tuple_chunk.iter().zip(result_chunk.iter_mut()) {
                    *slot = Some(classify(tuple, trials, seed));
                }
            });
        }
    });
    Ok(results
        .into_iter()
        .map(|r| r.expect("every chunk slot is written"))
        .collect())
}

fn format_tuple(entries: &[i64]) -> String {
    let mut out = String::from("(");
    for (i, v) in entries.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "{v}").unwrap();
    }
    out.push(')');
    out
}

/// Summary table for stderr, derived from the serialized reports so the
/// JSON document stays the single source of truth.
pub fn summary_table(reports: &[ReportDto], bounds: &SearchBounds) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "tuples classified: {} (n = {}, a_0 <= {})",
        reports.len(),
        bounds.n,
        bounds.max_a
    )
    .unwrap();
    let mut any = false;
    for report in reports.iter().filter(|r| r.smooth) {
        any = true;
        writeln!(
            out,
            "smooth: {}  {}",
            format_tuple(&report.tuple),
            report.identification.as_deref().unwrap_or("-")
        )
        .unwrap();
    }
    if !any {
        writeln!(out, "smooth: none within bound").unwrap();
    }
    out
}
