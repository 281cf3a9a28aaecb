//! Corpus-level verification suites: per-graph bound checks with declared
//! exceptional graphs, extremal scans, and the closed-form domination
//! check for the stride-2 generalized Petersen family.
//!
//! Every suite reduces to a pure per-graph check (so graphs may be
//! processed concurrently) plus an order-insensitive report merge. A
//! violation is the falsification signal: it means a bound the suite
//! encodes failed on a concrete graph, and the report quotes the graph6
//! line so the check can be replayed.

use std::io;
use std::time::{Duration, Instant};

use domset_core::{
    gamma_exact_with, generalized_petersen_relaxed, is_isomorphic, named_graph, parse_graph6,
    pd_exact_with, rho_exact_with, write_graph6, AlphaThreshold, Certificate, Graph, Interrupt,
    NamedGraphId, SolveAborted,
};

use crate::corpus::line_text;
use crate::pool::parallel_map;
use crate::report::{Observed, Outcome, Report, ReportBuilder};

/// Wall-clock cancellation for per-graph solves. `None` never stops.
#[derive(Clone, Copy, Debug)]
pub struct Deadline {
    at: Option<Instant>,
}

impl Deadline {
    /// No deadline: solves run to completion.
    #[must_use]
    pub fn unlimited() -> Self {
        Deadline { at: None }
    }

    /// Expires `ms` milliseconds from now. A budget too large to represent
    /// is treated as unlimited.
    #[must_use]
    pub fn after_ms(ms: u64) -> Self {
        Deadline { at: Instant::now().checked_add(Duration::from_millis(ms)) }
    }

    /// Fresh per-graph deadline for an optional budget.
    #[must_use]
    pub fn from_budget(timeout_ms: Option<u64>) -> Self {
        match timeout_ms {
            None => Deadline::unlimited(),
            Some(ms) => Deadline::after_ms(ms),
        }
    }
}

impl Interrupt for Deadline {
    fn should_stop(&self) -> bool {
        self.at.is_some_and(|at| Instant::now() >= at)
    }
}

/// A verification suite selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Supercubic graphs: γ(G) ≤ ⌊3n/8⌋, no exceptions.
    Reed,
    /// Connected cubic graphs: γ(G) ≤ ⌊5n/14⌋ except two declared order-8
    /// graphs (matched by isomorphism).
    Ks,
    /// Connected cubic graphs: ρ(G) ≥ ⌈n/8⌉ except the Petersen graph.
    Favaron,
    /// Connected cubic graphs of order 14: pd_{7/8}(G) ≤ 4.
    Cubic14,
    /// Connected cubic graphs of order 14: every graph with γ = 5 must be
    /// isomorphic to one of the four catalog extremal graphs.
    Largedom,
    /// Connected cubic graphs: list every graph attaining γ = ⌊5n/14⌋,
    /// marking those meeting the exact condition 14γ = 5n.
    Extremal,
    /// No corpus: for each p in range, γ(P(p,2)) must equal the closed
    /// form p − ⌊p/5⌋ − ⌊(p+2)/5⌋.
    Gp { p_min: u16, p_max: u16 },
}

/// Smallest and largest outer-cycle length the closed-form suite accepts;
/// the exact solver is comfortably fast for n = 2p ≤ 32.
pub const GP_MIN: u16 = 3;
pub const GP_MAX: u16 = 16;

impl Suite {
    /// Parses a suite selector:
    /// `reed | ks | favaron | cubic14 | largedom | extremal | gp:MIN:MAX`.
    pub fn parse(text: &str) -> Result<Suite, String> {
        match text {
            "reed" => return Ok(Suite::Reed),
            "ks" => return Ok(Suite::Ks),
            "favaron" => return Ok(Suite::Favaron),
            "cubic14" => return Ok(Suite::Cubic14),
            "largedom" => return Ok(Suite::Largedom),
            "extremal" => return Ok(Suite::Extremal),
            _ => {}
        }
        if let Some(range) = text.strip_prefix("gp:") {
            let (lo, hi) = range
                .split_once(':')
                .ok_or_else(|| format!("expected gp:MIN:MAX, got `{text}`"))?;
            let p_min: u16 = lo.parse().map_err(|_| format!("bad gp lower bound `{lo}`"))?;
            let p_max: u16 = hi.parse().map_err(|_| format!("bad gp upper bound `{hi}`"))?;
            if p_min < GP_MIN || p_max > GP_MAX || p_min > p_max {
                return Err(format!(
                    "gp range must satisfy {GP_MIN} <= MIN <= MAX <= {GP_MAX}, got {p_min}:{p_max}"
                ));
            }
            return Ok(Suite::Gp { p_min, p_max });
        }
        Err(format!(
            "unknown suite `{text}` (expected reed, ks, favaron, cubic14, largedom, extremal, or gp:MIN:MAX)"
        ))
    }

    /// The selector spelling, used as the report's `suite` field.
    #[must_use]
    pub fn name(&self) -> String {
        match self {
            Suite::Reed => "reed".to_owned(),
            Suite::Ks => "ks".to_owned(),
            Suite::Favaron => "favaron".to_owned(),
            Suite::Cubic14 => "cubic14".to_owned(),
            Suite::Largedom => "largedom".to_owned(),
            Suite::Extremal => "extremal".to_owned(),
            Suite::Gp { p_min, p_max } => format!("gp:{p_min}:{p_max}"),
        }
    }

    /// Whether the suite reads a graph corpus (the closed-form suite
    /// generates its own graphs instead).
    #[must_use]
    pub fn needs_corpus(&self) -> bool {
        !matches!(self, Suite::Gp { .. })
    }
}

/// The two declared order-8 exceptions to the ⌊5n/14⌋ bound.
const KS_EXCEPTIONS: [NamedGraphId; 2] = [NamedGraphId::A1, NamedGraphId::A2];
/// The declared exception to the packing lower bound.
const FAVARON_EXCEPTIONS: [NamedGraphId; 1] = [NamedGraphId::Petersen];
/// The four order-14 connected cubic graphs attaining γ = 5.
pub const LARGEDOM_CATALOG: [NamedGraphId; 4] = [
    NamedGraphId::G14_1,
    NamedGraphId::G14_2,
    NamedGraphId::G14_3,
    NamedGraphId::P7_2,
];

/// First catalog entry isomorphic to `g`, matched by canonical form and
/// gated on order first (catalog graphs are small; corpus graphs need not
/// be within isomorphism support).
fn match_catalog(g: &Graph, ids: &[NamedGraphId]) -> Option<NamedGraphId> {
    ids.iter().copied().find(|&id| {
        let h = named_graph(id);
        h.n() == g.n() && is_isomorphic(g, &h).unwrap_or(false)
    })
}

fn solved(
    result: Result<Certificate, SolveAborted>,
    bound: i64,
    judge: impl FnOnce(&Certificate) -> Outcome,
) -> Outcome {
    match result {
        Err(SolveAborted) => {
            Outcome::Violation { observed: Observed::Note("timeout".to_owned()), bound }
        }
        Ok(cert) => judge(&cert),
    }
}

fn over_bound_or_exception(
    g: &Graph,
    value: i64,
    bound: i64,
    exceptions: &[NamedGraphId],
) -> Outcome {
    match match_catalog(g, exceptions) {
        Some(id) => Outcome::Exception { matched: id.name().to_owned() },
        None => Outcome::Violation { observed: Observed::Value(value), bound },
    }
}

/// Checks one graph against a corpus suite. Pure; safe to run from any
/// worker. Graphs failing the suite's hypothesis are skipped.
#[must_use]
pub fn check_graph(suite: &Suite, g: &Graph, timeout_ms: Option<u64>) -> Outcome {
    let class = g.classify();
    let n = g.n() as i64;
    let stop = Deadline::from_budget(timeout_ms);
    match suite {
        Suite::Reed => {
            if !class.is_supercubic {
                return Outcome::Skipped;
            }
            let bound = 3 * n / 8;
            solved(gamma_exact_with(g, &stop), bound, |cert| {
                let value = cert.value as i64;
                if value <= bound {
                    Outcome::Conforming
                } else {
                    Outcome::Violation { observed: Observed::Value(value), bound }
                }
            })
        }
        Suite::Ks => {
            if !(class.is_cubic && class.is_connected) {
                return Outcome::Skipped;
            }
            let bound = 5 * n / 14;
            solved(gamma_exact_with(g, &stop), bound, |cert| {
                let value = cert.value as i64;
                if value <= bound {
                    Outcome::Conforming
                } else {
                    over_bound_or_exception(g, value, bound, &KS_EXCEPTIONS)
                }
            })
        }
        Suite::Favaron => {
            if !(class.is_cubic && class.is_connected) {
                return Outcome::Skipped;
            }
            let bound = (n + 7) / 8;
            solved(rho_exact_with(g, &stop), bound, |cert| {
                let value = cert.value as i64;
                if value >= bound {
                    Outcome::Conforming
                } else {
                    over_bound_or_exception(g, value, bound, &FAVARON_EXCEPTIONS)
                }
            })
        }
        Suite::Cubic14 => {
            if !(class.is_cubic && class.is_connected && class.n == 14) {
                return Outcome::Skipped;
            }
            let alpha = AlphaThreshold::new(7, 8).expect("7/8 is a valid threshold");
            let bound = 4;
            solved(pd_exact_with(g, alpha, &stop), bound, |cert| {
                let value = cert.value as i64;
                if value <= bound {
                    Outcome::Conforming
                } else {
                    Outcome::Violation { observed: Observed::Value(value), bound }
                }
            })
        }
        Suite::Largedom => {
            if !(class.is_cubic && class.is_connected && class.n == 14) {
                return Outcome::Skipped;
            }
            // Everything except the four catalog graphs must satisfy γ ≤ 4.
            let bound = 4;
            solved(gamma_exact_with(g, &stop), bound, |cert| {
                let value = cert.value as i64;
                if value <= bound {
                    Outcome::Conforming
                } else if value == 5 {
                    match match_catalog(g, &LARGEDOM_CATALOG) {
                        Some(id) => Outcome::Extremal {
                            value,
                            matched: Some(id.name().to_owned()),
                            exact: None,
                        },
                        None => Outcome::Violation { observed: Observed::Value(value), bound },
                    }
                } else {
                    Outcome::Violation { observed: Observed::Value(value), bound }
                }
            })
        }
        Suite::Extremal => {
            if !(class.is_cubic && class.is_connected) {
                return Outcome::Skipped;
            }
            let bound = 5 * n / 14;
            solved(gamma_exact_with(g, &stop), bound, |cert| {
                let value = cert.value as i64;
                if value > bound {
                    over_bound_or_exception(g, value, bound, &KS_EXCEPTIONS)
                } else if value == bound {
                    Outcome::Extremal { value, matched: None, exact: Some(14 * value == 5 * n) }
                } else {
                    Outcome::Conforming
                }
            })
        }
        Suite::Gp { .. } => unreachable!("the closed-form suite generates its own graphs"),
    }
}

/// Closed form for the domination number of the stride-2 generalized
/// Petersen graph on 2p vertices: p − ⌊p/5⌋ − ⌊(p+2)/5⌋.
#[must_use]
pub fn gp_closed_form(p: u16) -> i64 {
    let p = i64::from(p);
    p - p / 5 - (p + 2) / 5
}

/// Outer-cycle lengths where the closed form coincides with ⌊5p/7⌋.
pub const GP_COINCIDENCE: [u16; 8] = [3, 5, 6, 7, 8, 9, 11, 12];

/// Runs the closed-form suite: for each p in `p_min..=p_max`, the exact
/// domination number of P(p,2) must equal the closed form, and on the
/// coincidence list the closed form must also equal ⌊5p/7⌋.
///
/// Stride 2 is taken modulo the cycle: for p = 3 the inner stride wraps to
/// the equivalent stride 1 (P(p,k) and P(p,p−k) are the same graph).
#[must_use]
pub fn run_gp(p_min: u16, p_max: u16, timeout_ms: Option<u64>) -> Report {
    assert!(
        (GP_MIN..=GP_MAX).contains(&p_min) && (GP_MIN..=GP_MAX).contains(&p_max),
        "outer-cycle range must lie within {GP_MIN}..={GP_MAX}"
    );
    let start = Instant::now();
    let mut builder = ReportBuilder::new(&Suite::Gp { p_min, p_max }.name());
    for p in p_min..=p_max {
        let stride = 2.min(p - 2);
        let g = generalized_petersen_relaxed(p, stride)
            .expect("validated range admits the canonical stride");
        let g6 = line_text(&write_graph6(&g));
        let closed = gp_closed_form(p);
        let stop = Deadline::from_budget(timeout_ms);
        let outcome = solved(gamma_exact_with(&g, &stop), closed, |cert| {
            let value = cert.value as i64;
            if value != closed {
                Outcome::Violation { observed: Observed::Value(value), bound: closed }
            } else if GP_COINCIDENCE.contains(&p) && closed != 5 * i64::from(p) / 7 {
                Outcome::Violation {
                    observed: Observed::Value(closed),
                    bound: 5 * i64::from(p) / 7,
                }
            } else {
                Outcome::Conforming
            }
        });
        builder.record(u64::from(p), &g6, outcome);
    }
    builder.finish(start.elapsed().as_millis() as u64)
}

/// A finished suite run: the report plus any unreadable corpus lines
/// (line number and message, in input order). Read errors are diagnostics,
/// not report content — the scan continues past them.
#[derive(Clone, Debug)]
pub struct SuiteRun {
    pub report: Report,
    pub read_errors: Vec<(u64, String)>,
}

/// Lines handed to a corpus run: the numbered raw bytes of each non-blank
/// input line.
pub type CorpusLine = io::Result<(u64, Vec<u8>)>;

const CHUNK: usize = 1024;

/// Runs a corpus suite over numbered graph6 lines, checking up to `jobs`
/// graphs concurrently. Lines that fail to parse are recorded as read
/// errors and skipped; a hard I/O failure aborts the run.
///
/// The result is independent of `jobs` and of corpus order (up to the
/// quoted line numbers): per-graph checks are pure and the report merge
/// sorts by graph6 content.
pub fn run_corpus_suite<I>(
    suite: &Suite,
    lines: I,
    jobs: usize,
    timeout_ms: Option<u64>,
) -> io::Result<SuiteRun>
where
    I: IntoIterator<Item = CorpusLine>,
{
    assert!(suite.needs_corpus(), "closed-form suite takes no corpus");
    let start = Instant::now();
    let mut builder = ReportBuilder::new(&suite.name());
    let mut read_errors: Vec<(u64, String)> = Vec::new();
    let mut lines = lines.into_iter();
    let mut exhausted = false;
    while !exhausted {
        let mut batch: Vec<(u64, String, Graph)> = Vec::with_capacity(CHUNK);
        while batch.len() < CHUNK {
            match lines.next() {
                None => {
                    exhausted = true;
                    break;
                }
                Some(Err(e)) => return Err(e),
                Some(Ok((line_no, bytes))) => match parse_graph6(&bytes) {
                    Ok(g) => batch.push((line_no, line_text(&bytes), g)),
                    Err(e) => read_errors.push((line_no, e.to_string())),
                },
            }
        }
        let outcomes = parallel_map(jobs, &batch, |(_, _, g)| check_graph(suite, g, timeout_ms));
        for ((line_no, g6, _), outcome) in batch.iter().zip(outcomes) {
            builder.record(*line_no, g6, outcome);
        }
    }
    Ok(SuiteRun { report: builder.finish(start.elapsed().as_millis() as u64), read_errors })
}
