use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::ratio::ExactRatio;

/// A graph that failed a check, with a one-line explanation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub detail: String,
}

/// Result of one check suite. Passed iff `violations` is empty.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub n_max: usize,
    pub graphs_checked: u64,
    pub violations: Vec<Violation>,
    pub elapsed_s: f64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A graph together with its toughness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatedGraph {
    pub graph6: String,
    pub tau_num: u64,
    pub tau_den: u64,
}

impl RatedGraph {
    pub fn new(graph6: String, tau: ExactRatio) -> Self {
        RatedGraph { graph6, tau_num: tau.num(), tau_den: tau.den() }
    }

    pub fn tau(&self) -> Option<ExactRatio> {
        ExactRatio::new(self.tau_num, self.tau_den)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanCount {
    pub n: usize,
    pub scanned: u64,
}

/// Result of a conjecture scan.
///
/// `minimally_tough` holds every minimally tough graph found with `τ > 1/2`,
/// `counterexamples` the chordal ones among them. `violations` lists hits that
/// contradict a proved nonexistence theorem (chordal with `τ <= 1`, chordal
/// with a universal vertex, strongly chordal, split, interval-like).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub suite: String,
    pub class_filter: String,
    pub n_max: usize,
    pub per_n: Vec<ScanCount>,
    pub graphs_checked: u64,
    pub minimally_tough: Vec<RatedGraph>,
    pub counterexamples: Vec<RatedGraph>,
    pub violations: Vec<Violation>,
    pub elapsed_s: f64,
}

impl ScanReport {
    /// Chordal counterexamples with `τ > 1`: these would refute the open
    /// conjecture without contradicting any theorem.
    pub fn refutation_candidates(&self) -> Vec<&RatedGraph> {
        self.counterexamples.iter().filter(|c| c.tau().is_some_and(|t| t > ExactRatio::ONE)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

/// A report that can be written as one JSON line or as CSV rows.
pub trait Report: Serialize {
    fn csv_header(&self) -> &'static [&'static str];
    fn csv_rows(&self) -> Vec<Vec<String>>;
}

impl Report for CheckReport {
    fn csv_header(&self) -> &'static [&'static str] {
        &["suite", "graph6", "detail"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.violations.iter().map(|v| vec![self.suite.clone(), v.graph6.clone(), v.detail.clone()]).collect()
    }
}

impl Report for ScanReport {
    fn csv_header(&self) -> &'static [&'static str] {
        &["graph6", "tau_num", "tau_den"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.counterexamples
            .iter()
            .map(|c| vec![c.graph6.clone(), c.tau_num.to_string(), c.tau_den.to_string()])
            .collect()
    }
}

/// JSON is written as a single line terminated by `\n`; CSV starts with a header.
pub fn emit_report<R: Report, W: Write>(report: &R, format: ReportFormat, mut out: W) -> Result<(), ReportError> {
    match format {
        ReportFormat::Json => {
            serde_json::to_writer(&mut out, report)?;
            out.write_all(b"\n")?;
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(report.csv_header())?;
            for row in report.csv_rows() {
                w.write_record(&row)?;
            }
            w.flush()?;
        }
    }
    out.flush()?;
    Ok(())
}
