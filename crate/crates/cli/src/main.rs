use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use toughlab_core::families::Family;
use toughlab_core::verify::{emit_report, find_suite, run_suite, scan_conjecture, ClassFilter, ReportFormat, SUITES};
use toughlab_core::{parse_graph6, to_graph6, Graph};

mod analyze;

const EXIT_VERIFY: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(name = "toughlab", version, about = "Exact toughness and minimal toughness of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze graphs given as graph6 (argument, --file, --family, or one per line on stdin).
    Analyze(AnalyzeArgs),
    /// Print a named family member as graph6.
    Family(FamilyArgs),
    /// Search connected graphs of a class for minimally tough members with τ > 1/2.
    Scan(ScanArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Jobs {
    /// Worker threads.
    #[arg(long, env = "TOUGHLAB_JOBS")]
    jobs: Option<usize>,
}

#[derive(Args)]
struct AnalyzeArgs {
    graph6: Option<String>,
    #[arg(long, conflicts_with_all = ["graph6", "family"])]
    file: Option<PathBuf>,
    /// e.g. wheel:5, star:3, sun:3, matched:4
    #[arg(long, conflicts_with = "graph6")]
    family: Option<Family>,
    /// One JSON object per graph.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    jobs: Jobs,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(required_unless_present = "list")]
    member: Option<Family>,
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=9))]
    max_n: u8,
    #[arg(long, default_value = "chordal")]
    class: ClassFilter,
    /// Also write the report here (JSON, or CSV with --csv).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
    #[command(flatten)]
    jobs: Jobs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Largest vertex count; clamped to each suite's range under `--suite all`.
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    list: bool,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    jobs: Jobs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Analyze(a) => set_jobs(a.jobs.jobs.or(Some(1))).and_then(|_| cmd_analyze(a)),
        Command::Family(f) => cmd_family(f),
        Command::Scan(s) => set_jobs(s.jobs.jobs).and_then(|_| cmd_scan(s)),
        Command::Verify(v) => set_jobs(v.jobs.jobs).and_then(|_| cmd_verify(v)),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("toughlab: {msg}");
            ExitCode::from(code)
        }
    }
}

struct Failure(u8, String);

type CmdResult = Result<u8, Failure>;

fn usage(msg: impl ToString) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

fn io_error(e: impl ToString) -> Failure {
    Failure(EXIT_IO, e.to_string())
}

fn set_jobs(jobs: Option<usize>) -> Result<(), Failure> {
    match jobs {
        Some(0) => Err(usage("--jobs must be at least 1")),
        Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j).build_global().map_err(usage),
        None => Ok(()),
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> CmdResult {
    let mut inputs: Vec<Result<Graph, String>> = Vec::new();
    if let Some(fam) = args.family {
        inputs.push(fam.build().map_err(|e| e.to_string()));
    } else if let Some(text) = &args.graph6 {
        inputs.push(parse_graph6(text).map_err(|e| format!("{text:?}: {e}")));
    } else {
        let reader: Box<dyn BufRead> = match &args.file {
            Some(path) => {
                Box::new(BufReader::new(File::open(path).map_err(|e| io_error(format!("{}: {e}", path.display())))?))
            }
            None => Box::new(io::stdin().lock()),
        };
        for line in reader.lines() {
            let line = line.map_err(io_error)?;
            let text = line.trim_end();
            if !text.is_empty() {
                inputs.push(parse_graph6(text).map_err(|e| format!("{text:?}: {e}")));
            }
        }
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut code = 0;
    for (i, input) in inputs.into_iter().enumerate() {
        let analysis = input.and_then(|g| analyze::analyze(&g).map_err(|e| e.to_string()));
        match analysis {
            Ok(a) if args.json => {
                serde_json::to_writer(&mut out, &a).map_err(io_error)?;
                writeln!(out).map_err(io_error)?;
            }
            Ok(a) => {
                if i > 0 {
                    writeln!(out).map_err(io_error)?;
                }
                write!(out, "{}", analyze::render_text(&a)).map_err(io_error)?;
            }
            Err(msg) => {
                eprintln!("toughlab: {msg}");
                code = EXIT_DATA;
            }
        }
    }
    out.flush().map_err(io_error)?;
    Ok(code)
}

fn cmd_family(args: FamilyArgs) -> CmdResult {
    if args.list {
        for name in Family::NAMES {
            println!("{name}");
        }
        return Ok(0);
    }
    let fam = args.member.expect("required unless --list");
    let g = fam.build().map_err(usage)?;
    println!("{}", to_graph6(&g).map_err(usage)?);
    Ok(0)
}

fn cmd_scan(args: ScanArgs) -> CmdResult {
    let report = scan_conjecture(args.max_n as usize, args.class).map_err(usage)?;
    let format = if args.csv { ReportFormat::Csv } else { ReportFormat::Json };
    if let Some(path) = &args.out {
        let file = File::create(path).map_err(|e| io_error(format!("{}: {e}", path.display())))?;
        emit_report(&report, format, BufWriter::new(file)).map_err(io_error)?;
    }
    if args.json || args.csv {
        emit_report(&report, format, io::stdout().lock()).map_err(io_error)?;
    } else {
        for c in &report.per_n {
            println!("n = {}: {} connected {} graphs", c.n, c.scanned, report.class_filter);
        }
        println!("minimally tough with τ > 1/2: {}", report.minimally_tough.len());
        for h in &report.minimally_tough {
            println!("  {} τ = {}/{}", h.graph6, h.tau_num, h.tau_den);
        }
        println!("chordal counterexamples: {}", report.counterexamples.len());
        for h in report.refutation_candidates() {
            println!("  refutation candidate {} τ = {}/{}", h.graph6, h.tau_num, h.tau_den);
        }
        for v in &report.violations {
            println!("VIOLATION {}: {}", v.graph6, v.detail);
        }
        println!("elapsed: {:.2}s", report.elapsed_s);
    }
    Ok(if report.violations.is_empty() { 0 } else { EXIT_VERIFY })
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    if args.list {
        for s in SUITES {
            println!("{:<28} n <= {} (max {})  {}", s.name, s.default_n, s.max_n, s.summary);
        }
        return Ok(0);
    }
    let runs: Vec<(&str, Option<usize>)> = if args.suite == "all" {
        SUITES.iter().map(|s| (s.name, args.max_n.map(|n| n.clamp(s.min_n, s.max_n)))).collect()
    } else {
        let s = find_suite(&args.suite).map_err(usage)?;
        vec![(s.name, args.max_n)]
    };
    let mut failed = false;
    for (name, n_max) in runs {
        let report = run_suite(name, n_max).map_err(usage)?;
        failed |= !report.passed();
        if args.json {
            emit_report(&report, ReportFormat::Json, io::stdout().lock()).map_err(io_error)?;
        } else {
            let status = if report.passed() { "PASS" } else { "FAIL" };
            println!(
                "{status} {} n_max={} graphs={} {:.2}s",
                report.suite, report.n_max, report.graphs_checked, report.elapsed_s
            );
            for v in &report.violations {
                println!("  {}: {}", v.graph6, v.detail);
            }
        }
    }
    Ok(if failed { EXIT_VERIFY } else { 0 })
}
