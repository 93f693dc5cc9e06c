use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use zdchroma::harness::{
    analyze, export_graph, parse_ring_spec_with_cap, verify_grid, write_table, Analysis, AnalyzeOptions, Bounds,
    ExportFormat, Family, GraphKind, RowStatus, Status, DEFAULT_BUDGET_MS,
};
use zdchroma::ring::DEFAULT_MAX_ORDER;
use zdchroma::Error;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(name = "zdchroma", version, about = "Chromatic and clique numbers of zero-divisor graphs of finite rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one graph and compare solver, construction and closed form.
    Analyze(AnalyzeArgs),
    /// Run a verification grid over a family of rings.
    Verify(VerifyArgs),
    /// Write a graph as JSON, CSV edge list or Graphviz DOT.
    Export(ExportArgs),
    /// Reproduce the worked examples and the local formula table.
    Table(TableArgs),
}

#[derive(Args)]
struct RingArgs {
    /// Ring spec such as "Z8 x Z16", "Z[3^2] x GF(4)" or "Z360".
    #[arg(long)]
    ring: String,
    #[arg(long, value_enum, default_value = "gamma0")]
    graph: GraphKind,
    /// Largest ring order accepted.
    #[arg(long, env = "ZDCHROMA_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    max_order: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    ring: RingArgs,
    /// Run the exact solvers.
    #[arg(long)]
    exact: bool,
    /// Run the matching construction and verify its certificate.
    #[arg(long)]
    construct: bool,
    /// Evaluate the closed form.
    #[arg(long)]
    formula: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET_MS)]
    budget_ms: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GridFormat {
    Table,
    Csv,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    family: Family,
    /// Comma-separated primes; omit for the family default.
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<u64>>,
    /// Admit every prime.
    #[arg(long, conflicts_with = "primes")]
    all_primes: bool,
    #[arg(long)]
    r_min: Option<u32>,
    #[arg(long)]
    r_max: Option<u32>,
    #[arg(long)]
    k_min: Option<usize>,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long)]
    max_factor_order: Option<u64>,
    #[arg(long)]
    max_order: Option<u64>,
    #[arg(long)]
    max_gamma: Option<u64>,
    /// Skip exact solving above this many vertices.
    #[arg(long)]
    solver_max_vertices: Option<usize>,
    #[arg(long)]
    budget_ms: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    format: GridFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long, value_enum, default_value = "dot")]
    format: ExportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    out: Option<PathBuf>,
}

fn sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Error> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Timeout { .. } => EXIT_TIMEOUT,
        Error::InvalidCertificate(_) => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

fn print_analysis(a: &Analysis, mut out: impl Write) -> io::Result<()> {
    let r = &a.report;
    writeln!(out, "ring       {} (order {})", r.ring.spec, r.ring.order)?;
    writeln!(out, "graph      {}: {} vertices, {} edges", r.graph.kind, r.graph.vertices, r.graph.edges)?;
    if let Some(e) = &r.results.exact {
        writeln!(out, "solver     omega = {}, chi = {}", e.omega, e.chi)?;
    }
    if let Some(t) = &r.results.timeout {
        writeln!(out, "solver     budget exhausted, chi in {}..={}", t.lower, t.upper)?;
    }
    if let Some(f) = r.results.formula {
        writeln!(out, "formula    {f}")?;
    }
    for c in &r.certificates {
        writeln!(out, "certified  {} colors, clique of {} ({})", c.color_count, c.clique.len(), c.construction)?;
    }
    for d in &r.results.disagreements {
        writeln!(out, "mismatch   {d}")?;
    }
    writeln!(out, "status     {}", r.results.status)?;
    Ok(())
}

fn run_analyze(args: AnalyzeArgs) -> Result<u8, Error> {
    let spec = parse_ring_spec_with_cap(&args.ring.ring, args.ring.max_order)?;
    let all = !(args.exact || args.construct || args.formula);
    let options = AnalyzeOptions {
        exact: all || args.exact,
        construct: all || args.construct,
        formula: all || args.formula,
        budget_ms: args.budget_ms,
    };
    let analysis = analyze(&spec, args.ring.graph, options)?;
    let json = analysis.to_json()?;
    if let Some(path) = &args.out {
        std::fs::write(path, &json)?;
    }
    match args.format {
        ReportFormat::Json => println!("{json}"),
        ReportFormat::Text => print_analysis(&analysis, io::stdout().lock())?,
    }
    Ok(match analysis.status() {
        Status::Pass => 0,
        Status::Failure => EXIT_FAILURE,
        Status::Timeout => EXIT_TIMEOUT,
    })
}

fn run_verify(args: VerifyArgs) -> Result<u8, Error> {
    let mut b = Bounds::for_family(args.family);
    if args.all_primes {
        b.primes = None;
    } else if let Some(p) = args.primes {
        b.primes = Some(p);
    }
    b.r_min = args.r_min.unwrap_or(b.r_min);
    b.r_max = args.r_max.unwrap_or(b.r_max);
    b.k_min = args.k_min.unwrap_or(b.k_min);
    b.k_max = args.k_max.unwrap_or(b.k_max);
    b.max_factor_order = args.max_factor_order.unwrap_or(b.max_factor_order);
    b.max_order = args.max_order.unwrap_or(b.max_order);
    b.max_gamma = args.max_gamma.or(b.max_gamma);
    b.solver_max_vertices = args.solver_max_vertices.unwrap_or(b.solver_max_vertices);
    b.budget_ms = args.budget_ms.unwrap_or(b.budget_ms);
    b.samples = args.samples.unwrap_or(b.samples);
    b.seed = args.seed;

    let summary = verify_grid(args.family, &b)?;
    let mut out = sink(&args.out)?;
    match args.format {
        GridFormat::Table => summary.write_table(&mut out)?,
        GridFormat::Csv => summary.write_csv(&mut out)?,
        GridFormat::Json => {
            serde_json::to_writer_pretty(&mut out, &summary).map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    if args.out.is_some() {
        eprintln!(
            "{}: {} instances, {} not passing",
            summary.family,
            summary.rows.len(),
            summary.rows.len() - summary.count(RowStatus::Pass)
        );
    }
    Ok(summary.exit_code() as u8)
}

fn run_export(args: ExportArgs) -> Result<u8, Error> {
    let spec = parse_ring_spec_with_cap(&args.ring.ring, args.ring.max_order)?;
    let g = args.ring.graph.build(&spec)?;
    let mut out = sink(&args.out)?;
    export_graph(&spec, &g, args.format, &mut out)?;
    out.flush()?;
    Ok(0)
}

fn run_table(args: TableArgs) -> Result<u8, Error> {
    let mut out = sink(&args.out)?;
    write_table(&mut out)?;
    out.flush()?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => run_analyze(a),
        Command::Verify(a) => run_verify(a),
        Command::Export(a) => run_export(a),
        Command::Table(a) => run_table(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
