//! Suite reports: per-graph outcomes aggregated into a deterministic,
//! order-independent summary.
//!
//! Entries carry the offending graph6 line so every record is replayable;
//! the finished report sorts each list by graph6 content (ties by input
//! line number), so a permuted or concurrently processed corpus yields an
//! identical report.

use serde::Serialize;

/// The value a violation record observed: a number when the solve
/// finished, or a short note (for example `"timeout"`) when it did not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Observed {
    Value(i64),
    Note(String),
}

/// A graph that broke the suite's bound, with the evidence needed to
/// replay the check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub observed: Observed,
    pub bound: i64,
}

/// A graph over the suite's bound that matched one of the suite's declared
/// exceptional graphs (by isomorphism, never by label).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionEntry {
    pub graph6: String,
    pub matched: String,
}

/// A graph flagged by an extremal scan: it attains the quantity the suite
/// watches for rather than breaking a bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalEntry {
    pub graph6: String,
    pub value: i64,
    /// Catalog entry this graph is isomorphic to, when the suite matches
    /// flagged graphs against a catalog.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matched: Option<String>,
    /// Whether the graph meets the exact (unfloored) extremal condition,
    /// when the suite distinguishes it from the floored one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<bool>,
}

/// Outcome of checking one graph against a suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The graph does not satisfy the suite's hypothesis; counted apart
    /// from `total`.
    Skipped,
    /// Checked and within bound.
    Conforming,
    Violation { observed: Observed, bound: i64 },
    Exception { matched: String },
    /// Extremal graphs conform; they are additionally listed.
    Extremal {
        value: i64,
        matched: Option<String>,
        exact: Option<bool>,
    },
}

/// Finished suite report.
///
/// Invariant: `total = conforming + violations.len() + exceptions_found.len()`,
/// where `conforming` is not serialized (it is implied). `skipped` counts
/// hypothesis-mismatched graphs and is not part of `total`. Extremal graphs
/// are conforming graphs that additionally appear in `extremal`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub total: u64,
    pub skipped: u64,
    pub violations: Vec<Violation>,
    pub exceptions_found: Vec<ExceptionEntry>,
    pub extremal: Vec<ExtremalEntry>,
    pub elapsed_ms: u64,
}

impl Report {
    /// Number of checked graphs that conformed (implied by the invariant).
    #[must_use]
    pub fn conforming(&self) -> u64 {
        self.total - self.violations.len() as u64 - self.exceptions_found.len() as u64
    }

    /// True when the report carries the falsification signal: any
    /// violation, including per-graph timeouts recorded as violations.
    #[must_use]
    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }
}

/// Accumulates per-graph outcomes and finishes into a sorted [`Report`].
///
/// Recording is order-insensitive: `finish` sorts every list by graph6
/// content with input line number as tiebreaker, so merging results from
/// any execution order produces the same report.
#[derive(Debug)]
pub struct ReportBuilder {
    suite: String,
    total: u64,
    skipped: u64,
    violations: Vec<(String, u64, Observed, i64)>,
    exceptions: Vec<(String, u64, String)>,
    extremal: Vec<(String, u64, i64, Option<String>, Option<bool>)>,
}

impl ReportBuilder {
    #[must_use]
    pub fn new(suite: &str) -> Self {
        ReportBuilder {
            suite: suite.to_owned(),
            total: 0,
            skipped: 0,
            violations: Vec::new(),
            exceptions: Vec::new(),
            extremal: Vec::new(),
        }
    }

    /// Records the outcome for the graph on input line `line` whose text
    /// was `graph6`.
    pub fn record(&mut self, line: u64, graph6: &str, outcome: Outcome) {
        match outcome {
            Outcome::Skipped => self.skipped += 1,
            Outcome::Conforming => self.total += 1,
            Outcome::Violation { observed, bound } => {
                self.total += 1;
                self.violations.push((graph6.to_owned(), line, observed, bound));
            }
            Outcome::Exception { matched } => {
                self.total += 1;
                self.exceptions.push((graph6.to_owned(), line, matched));
            }
            Outcome::Extremal { value, matched, exact } => {
                self.total += 1;
                self.extremal.push((graph6.to_owned(), line, value, matched, exact));
            }
        }
    }

    /// Sorts the accumulated lists and closes the report.
    #[must_use]
    pub fn finish(mut self, elapsed_ms: u64) -> Report {
        self.violations.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
        self.exceptions.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
        self.extremal.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
        Report {
            suite: self.suite,
            total: self.total,
            skipped: self.skipped,
            violations: self
                .violations
                .into_iter()
                .map(|(graph6, _, observed, bound)| Violation { graph6, observed, bound })
                .collect(),
            exceptions_found: self
                .exceptions
                .into_iter()
                .map(|(graph6, _, matched)| ExceptionEntry { graph6, matched })
                .collect(),
            extremal: self
                .extremal
                .into_iter()
                .map(|(graph6, _, value, matched, exact)| ExtremalEntry {
                    graph6,
                    value,
                    matched,
                    exact,
                })
                .collect(),
            elapsed_ms,
        }
    }
}

/// Renders the report as a tab-separated summary: one header line, one
/// totals line, then one line per violation / exception / extremal entry.
#[must_use]
pub fn report_tsv(report: &Report) -> String {
    use std::fmt::Write as _;

    let mut out = String::new();
    out.push_str("suite\ttotal\tskipped\tviolations\texceptions\textremal\telapsed_ms\n");
    let _ = writeln!(
        out,
        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
        report.suite,
        report.total,
        report.skipped,
        report.violations.len(),
        report.exceptions_found.len(),
        report.extremal.len(),
        report.elapsed_ms
    );
    for v in &report.violations {
        let observed = match &v.observed {
            Observed::Value(x) => x.to_string(),
            Observed::Note(s) => s.clone(),
        };
        let _ = writeln!(out, "violation\t{}\t{}\t{}", v.graph6, observed, v.bound);
    }
    for e in &report.exceptions_found {
        let _ = writeln!(out, "exception\t{}\t{}", e.graph6, e.matched);
    }
    for x in &report.extremal {
        let matched = x.matched.as_deref().unwrap_or("-");
        let exact = x.exact.map_or("-".to_owned(), |b| b.to_string());
        let _ = writeln!(out, "extremal\t{}\t{}\t{}\t{}", x.graph6, x.value, matched, exact);
    }
    out
}
