//! Exhaustive desk-scale checks: the conjecture scan and one named suite per
//! structural statement, with JSON and CSV reports.

mod report;
mod scan;
mod suites;

pub use report::{
    emit_report, CheckReport, RatedGraph, Report, ReportError, ReportFormat, ScanCount, ScanReport, Violation,
};
pub use scan::{contradicted_theorem, minimally_tough_above_half, scan_conjecture, ClassFilter, MAX_SCAN_VERTICES};
pub use suites::{find_suite, run_suite, Suite, SUITES};
