//! `domset`: exact domination solvers, constructive witnesses, graph
//! generation, isomorphism checks, and corpus verification suites, glued
//! together over graph6 line streams.
//!
//! Exit codes: 0 success; 1 a verification violation, per-graph timeout,
//! or construction refusal (the falsification/failure signal); 2 usage
//! error; 3 input parse error. When several apply the most diagnostic
//! wins: usage errors surface before anything runs, then input parse
//! errors, then violations.

use std::io::{self, BufWriter, Write as _};
use std::num::NonZeroUsize;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use domset_core::{
    gamma_exact_with, generalized_petersen, is_isomorphic, named_graph, one_third_construct_with,
    parse_graph6, pd_exact_with, random_cubic, rho_exact_with, write_graph6, AlphaThreshold,
    Certificate, ConstructError, ConstructRegime, Graph, NamedGraphId, SolveAborted,
};
use domset_tools::{
    line_text, numbered_lines, parallel_map, report_tsv, Deadline, Report, Suite,
};

/// Output format for results and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    /// One JSON object per result line (reports are a single object).
    Json,
    /// Tab-separated rows with a header line.
    Tsv,
}

#[derive(Parser, Debug)]
#[command(
    name = "domset",
    version,
    about = "Exact domination, partial domination, and packing for small graphs: \
             per-line solvers, constructive witnesses, and corpus verification suites."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Maximum worker threads for per-graph work.
    #[arg(long, global = true, value_name = "N", default_value = "1")]
    jobs: NonZeroUsize,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,

    /// Per-graph time budget in milliseconds. A graph exceeding it is
    /// recorded as a timeout (reports) or skipped with a note (streams).
    #[arg(long, global = true, value_name = "MS")]
    timeout_ms: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimum dominating set: one certificate per graph6 line.
    Gamma {
        /// graph6 file, or '-' for standard input.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Minimum partial dominating set reaching coverage alpha: one
    /// certificate per graph6 line.
    Pd {
        /// Coverage threshold as an exact fraction P/Q (decimals rejected).
        #[arg(long, value_name = "P/Q", value_parser = parse_alpha)]
        alpha: AlphaThreshold,
        /// graph6 file, or '-' for standard input.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Maximum packing (pairwise distance >= 3): one certificate per
    /// graph6 line.
    Rho {
        /// graph6 file, or '-' for standard input.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Dominating-set-driven witness of at most floor(n/3) vertices with
    /// the regime's coverage guarantee: one certificate per graph6 line.
    Construct {
        /// Guarantee regime.
        #[arg(long, value_name = "REGIME", value_parser = parse_regime)]
        regime: ConstructRegime,
        /// graph6 file, or '-' for standard input.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Emit one graph as graph6.
    #[command(group(
        ArgGroup::new("source").required(true).args(["named", "gp", "random_cubic"])
    ))]
    Gen {
        /// Catalog graph name (A1, A2, G14_1, G14_2, G14_3, P7_2,
        /// Petersen, K4).
        #[arg(long, value_name = "ID")]
        named: Option<String>,
        /// Generalized Petersen graph P(p,k): outer cycle length and inner
        /// stride (requires 1 <= k < p/2).
        #[arg(long, num_args = 2, value_names = ["P", "K"])]
        gp: Option<Vec<u16>>,
        /// Random cubic graph on N vertices (pairing model).
        #[arg(long, value_name = "N", requires = "seed")]
        random_cubic: Option<usize>,
        /// Seed for --random-cubic.
        #[arg(long)]
        seed: Option<u64>,
        /// Redraw until the sample is connected.
        #[arg(long)]
        connected: bool,
    },
    /// Run a verification suite and print its report.
    Verify {
        /// Suite: reed, ks, favaron, cubic14, largedom, extremal, or
        /// gp:MIN:MAX (the gp suite takes no corpus).
        #[arg(long, value_name = "SUITE")]
        suite: String,
        /// graph6 corpus file, or '-' for standard input.
        #[arg(default_value = "-")]
        corpus: String,
    },
    /// Test two graph6 strings for isomorphism.
    Iso {
        /// First graph6 string.
        a: String,
        /// Second graph6 string.
        b: String,
    },
    /// Structural summary (order, degrees, regularity, connectivity,
    /// girth): one object per graph6 line.
    Stats {
        /// graph6 file, or '-' for standard input.
        #[arg(default_value = "-")]
        input: String,
    },
}

/// Strict exact-fraction parser for --alpha: digits, a slash, digits.
fn parse_alpha(text: &str) -> Result<AlphaThreshold, String> {
    let bad = || format!("alpha must be an exact fraction P/Q of positive integers, got `{text}`");
    let (p, q) = text.split_once('/').ok_or_else(bad)?;
    if p.is_empty() || q.is_empty() || !p.bytes().chain(q.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let p: u64 = p.parse().map_err(|_| bad())?;
    let q: u64 = q.parse().map_err(|_| bad())?;
    AlphaThreshold::new(p, q).map_err(|e| e.to_string())
}

fn parse_regime(text: &str) -> Result<ConstructRegime, String> {
    ConstructRegime::parse(text).ok_or_else(|| {
        format!("unknown regime `{text}` (expected generic78, cubic1314, or super910)")
    })
}

/// How a run failed before or while producing output.
enum Failure {
    /// Bad arguments or an unopenable input: exit 2.
    Usage(String),
    /// Input that could not be parsed or read mid-stream: exit 3.
    Input(String),
}

/// What a completed run observed, for the final exit code.
#[derive(Default)]
struct RunStats {
    /// Lines that failed to parse (stream commands) or corpus read errors.
    parse_errors: u64,
    /// Violations, per-graph timeouts, or per-graph refusals.
    failures: u64,
}

impl RunStats {
    fn exit_code(&self) -> ExitCode {
        if self.parse_errors > 0 {
            ExitCode::from(3)
        } else if self.failures > 0 {
            ExitCode::from(1)
        } else {
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(stats) => stats.exit_code(),
        Err(Failure::Usage(msg)) => {
            eprintln!("domset: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("domset: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<RunStats, Failure> {
    let jobs = cli.jobs.get();
    let output = cli.output;
    let timeout_ms = cli.timeout_ms;
    match cli.command {
        Command::Gamma { input } => solve_stream(&input, jobs, output, timeout_ms, "gamma", |g, stop| {
            gamma_exact_with(g, stop)
        }),
        Command::Pd { alpha, input } => {
            solve_stream(&input, jobs, output, timeout_ms, "pd", move |g, stop| {
                pd_exact_with(g, alpha, stop)
            })
        }
        Command::Rho { input } => solve_stream(&input, jobs, output, timeout_ms, "rho", |g, stop| {
            rho_exact_with(g, stop)
        }),
        Command::Construct { regime, input } => construct_stream(&input, jobs, output, timeout_ms, regime),
        Command::Gen { named, gp, random_cubic, seed, connected } => {
            gen_graph(named, gp, random_cubic, seed, connected)
        }
        Command::Verify { suite, corpus } => verify(&suite, &corpus, jobs, output, timeout_ms),
        Command::Iso { a, b } => iso(&a, &b, output),
        Command::Stats { input } => stats_stream(&input, output),
    }
}

/// Serialized certificate: solver output, optionally extended with the
/// construction regime and its re-verification flag.
#[derive(Serialize)]
struct CertificateOut {
    kind: &'static str,
    value: usize,
    coverage: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    regime: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    guarantee_chain_verified: Option<bool>,
    witness: Vec<u16>,
}

impl CertificateOut {
    fn plain(cert: &Certificate) -> Self {
        CertificateOut {
            kind: cert.kind.name(),
            value: cert.value,
            coverage: cert.coverage,
            regime: None,
            guarantee_chain_verified: None,
            witness: cert.witness.iter().collect(),
        }
    }

    fn constructed(cert: &Certificate, regime: ConstructRegime, verified: bool) -> Self {
        CertificateOut {
            regime: Some(regime.name()),
            guarantee_chain_verified: Some(verified),
            ..CertificateOut::plain(cert)
        }
    }

    fn tsv_header(with_regime: bool) -> &'static str {
        if with_regime {
            "kind\tvalue\tcoverage\tregime\tverified\twitness"
        } else {
            "kind\tvalue\tcoverage\twitness"
        }
    }

    fn tsv_row(&self) -> String {
        let witness: Vec<String> = self.witness.iter().map(u16::to_string).collect();
        let witness = witness.join(",");
        match (self.regime, self.guarantee_chain_verified) {
            (Some(regime), Some(verified)) => format!(
                "{}\t{}\t{}\t{}\t{}\t{}",
                self.kind, self.value, self.coverage, regime, verified, witness
            ),
            _ => format!("{}\t{}\t{}\t{}", self.kind, self.value, self.coverage, witness),
        }
    }
}

fn emit_json<T: Serialize>(out: &mut impl io::Write, value: &T) {
    let line = serde_json::to_string(value).expect("output types serialize infallibly");
    writeln!(out, "{line}").expect("standard output");
}

/// Streams graph6 lines through a per-graph solver, emitting one
/// certificate per parsed line in input order. Unparsable lines and
/// timed-out solves are reported on standard error and skipped.
fn solve_stream<F>(
    input: &str,
    jobs: usize,
    output: Output,
    timeout_ms: Option<u64>,
    what: &str,
    solve: F,
) -> Result<RunStats, Failure>
where
    F: Fn(&Graph, &Deadline) -> Result<Certificate, SolveAborted> + Sync,
{
    let mut failures = 0;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut header_pending = output == Output::Tsv;
    let parse_errors = stream_batches(input, |batch| {
        let results = parallel_map(jobs, batch, |(_, _, g)| {
            let stop = Deadline::from_budget(timeout_ms);
            solve(g, &stop)
        });
        for ((line_no, _, _), result) in batch.iter().zip(results) {
            match result {
                Err(SolveAborted) => {
                    eprintln!("domset: line {line_no}: {what} timed out");
                    failures += 1;
                }
                Ok(cert) => {
                    let record = CertificateOut::plain(&cert);
                    match output {
                        Output::Json => emit_json(&mut out, &record),
                        Output::Tsv => {
                            if header_pending {
                                writeln!(out, "{}", CertificateOut::tsv_header(false))
                                    .expect("standard output");
                                header_pending = false;
                            }
                            writeln!(out, "{}", record.tsv_row()).expect("standard output");
                        }
                    }
                }
            }
        }
    })?;
    out.flush().expect("standard output");
    Ok(RunStats { parse_errors, failures })
}

/// Streams graph6 lines through the constructive witness builder.
/// Refusals (hypothesis or gate failures) are reported per line and leave
/// the failure signal in the exit code.
fn construct_stream(
    input: &str,
    jobs: usize,
    output: Output,
    timeout_ms: Option<u64>,
    regime: ConstructRegime,
) -> Result<RunStats, Failure> {
    let mut failures = 0;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut header_pending = output == Output::Tsv;
    let parse_errors = stream_batches(input, |batch| {
        let results = parallel_map(jobs, batch, |(_, _, g)| {
            let stop = Deadline::from_budget(timeout_ms);
            one_third_construct_with(g, regime, &stop)
        });
        for ((line_no, _, _), result) in batch.iter().zip(results) {
            match result {
                Err(ConstructError::Aborted) => {
                    eprintln!("domset: line {line_no}: construct timed out");
                    failures += 1;
                }
                Err(e) => {
                    eprintln!("domset: line {line_no}: {e}");
                    failures += 1;
                }
                Ok(c) => {
                    let record = CertificateOut::constructed(
                        &c.certificate,
                        c.regime,
                        c.guarantee_chain_verified,
                    );
                    match output {
                        Output::Json => emit_json(&mut out, &record),
                        Output::Tsv => {
                            if header_pending {
                                writeln!(out, "{}", CertificateOut::tsv_header(true))
                                    .expect("standard output");
                                header_pending = false;
                            }
                            writeln!(out, "{}", record.tsv_row()).expect("standard output");
                        }
                    }
                }
            }
        }
    })?;
    out.flush().expect("standard output");
    Ok(RunStats { parse_errors, failures })
}

/// Serialized structural summary of one graph.
#[derive(Serialize)]
struct StatsOut {
    n: u16,
    min_degree: u16,
    max_degree: u16,
    is_cubic: bool,
    is_supercubic: bool,
    is_connected: bool,
    /// Shortest cycle length; null when acyclic.
    girth: Option<u32>,
}

fn stats_stream(input: &str, output: Output) -> Result<RunStats, Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut header_pending = output == Output::Tsv;
    let parse_errors = stream_batches(input, |batch| {
        for (_, _, g) in batch {
            let class = g.classify();
            let record = StatsOut {
                n: class.n,
                min_degree: class.min_degree,
                max_degree: class.max_degree,
                is_cubic: class.is_cubic,
                is_supercubic: class.is_supercubic,
                is_connected: class.is_connected,
                girth: class.girth,
            };
            match output {
                Output::Json => emit_json(&mut out, &record),
                Output::Tsv => {
                    if header_pending {
                        writeln!(
                            out,
                            "n\tmin_degree\tmax_degree\tis_cubic\tis_supercubic\tis_connected\tgirth"
                        )
                        .expect("standard output");
                        header_pending = false;
                    }
                    let girth = record.girth.map_or("-".to_owned(), |g| g.to_string());
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        record.n,
                        record.min_degree,
                        record.max_degree,
                        record.is_cubic,
                        record.is_supercubic,
                        record.is_connected,
                        girth
                    )
                    .expect("standard output");
                }
            }
        }
    })?;
    out.flush().expect("standard output");
    Ok(RunStats { parse_errors, failures: 0 })
}

/// Batch size for streamed per-line commands; bounds memory on huge
/// corpora while giving workers enough per-batch items.
const STREAM_CHUNK: usize = 1024;

/// Reads `input` in batches of parsed graphs, invoking `handle` per batch
/// in input order. Parse failures are reported on standard error; their
/// count is returned. Hard I/O failures abort.
fn stream_batches<H>(input: &str, mut handle: H) -> Result<u64, Failure>
where
    H: FnMut(&[(u64, String, Graph)]),
{
    let mut lines = numbered_lines(input)
        .map_err(|e| Failure::Usage(format!("cannot open `{input}`: {e}")))?;
    let mut parse_errors = 0;
    let mut exhausted = false;
    while !exhausted {
        let mut batch: Vec<(u64, String, Graph)> = Vec::with_capacity(STREAM_CHUNK);
        while batch.len() < STREAM_CHUNK {
            match lines.next() {
                None => {
                    exhausted = true;
                    break;
                }
                Some(Err(e)) => return Err(Failure::Input(format!("read failed: {e}"))),
                Some(Ok((line_no, bytes))) => match parse_graph6(&bytes) {
                    Ok(g) => batch.push((line_no, line_text(&bytes), g)),
                    Err(e) => {
                        eprintln!("domset: line {line_no}: {e}");
                        parse_errors += 1;
                    }
                },
            }
        }
        handle(&batch);
    }
    Ok(parse_errors)
}

fn gen_graph(
    named: Option<String>,
    gp: Option<Vec<u16>>,
    random_cubic_order: Option<usize>,
    seed: Option<u64>,
    connected: bool,
) -> Result<RunStats, Failure> {
    // clap resolves `requires` through argument groups, so cross-source
    // misuse of the random-generator flags is checked here instead.
    if random_cubic_order.is_none() && (seed.is_some() || connected) {
        return Err(Failure::Usage(
            "--seed and --connected apply only to --random-cubic".to_owned(),
        ));
    }
    let g = if let Some(name) = named {
        let id = NamedGraphId::parse(&name).ok_or_else(|| {
            Failure::Usage(format!(
                "unknown graph name `{name}` (expected one of A1, A2, G14_1, G14_2, G14_3, \
                 P7_2, Petersen, K4)"
            ))
        })?;
        named_graph(id)
    } else if let Some(pk) = gp {
        let [p, k] = pk[..] else {
            return Err(Failure::Usage("--gp takes exactly two integers".to_owned()));
        };
        generalized_petersen(p, k).map_err(|e| Failure::Usage(e.to_string()))?
    } else if let Some(n) = random_cubic_order {
        let seed = seed.expect("--random-cubic requires --seed");
        random_cubic(n, seed, connected).map_err(|e| Failure::Usage(e.to_string()))?
    } else {
        unreachable!("clap enforces exactly one generation source");
    };
    println!("{}", line_text(&write_graph6(&g)));
    Ok(RunStats::default())
}

fn verify(
    suite_text: &str,
    corpus: &str,
    jobs: usize,
    output: Output,
    timeout_ms: Option<u64>,
) -> Result<RunStats, Failure> {
    let suite = Suite::parse(suite_text).map_err(Failure::Usage)?;
    let mut stats = RunStats::default();
    let report: Report = if let Suite::Gp { p_min, p_max } = suite {
        if corpus != "-" {
            return Err(Failure::Usage(
                "the gp suite generates its own graphs and takes no corpus".to_owned(),
            ));
        }
        domset_tools::run_gp(p_min, p_max, timeout_ms)
    } else {
        let lines = numbered_lines(corpus)
            .map_err(|e| Failure::Usage(format!("cannot open `{corpus}`: {e}")))?;
        let run = domset_tools::run_corpus_suite(&suite, lines, jobs, timeout_ms)
            .map_err(|e| Failure::Input(format!("corpus read failed: {e}")))?;
        for (line_no, msg) in &run.read_errors {
            eprintln!("domset: line {line_no}: {msg}");
        }
        stats.parse_errors = run.read_errors.len() as u64;
        run.report
    };
    if report.has_violations() {
        stats.failures += 1;
    }
    match output {
        Output::Json => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            emit_json(&mut out, &report);
        }
        Output::Tsv => print!("{}", report_tsv(&report)),
    }
    Ok(stats)
}

/// Serialized isomorphism verdict.
#[derive(Serialize)]
struct IsoOut {
    isomorphic: bool,
}

fn iso(a: &str, b: &str, output: Output) -> Result<RunStats, Failure> {
    let ga = parse_graph6(a.as_bytes())
        .map_err(|e| Failure::Input(format!("first graph: {e}")))?;
    let gb = parse_graph6(b.as_bytes())
        .map_err(|e| Failure::Input(format!("second graph: {e}")))?;
    let isomorphic =
        is_isomorphic(&ga, &gb).map_err(|e| Failure::Usage(e.to_string()))?;
    match output {
        Output::Json => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            emit_json(&mut out, &IsoOut { isomorphic });
        }
        Output::Tsv => println!("isomorphic\t{isomorphic}"),
    }
    Ok(RunStats::default())
}
