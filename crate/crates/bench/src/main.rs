use std::fs;
use std::io;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use primebasis::{
    builtin, parse_system_file, run, AlgebraError, CoeffBackend, EngineOptions, MonomialOrder,
    PolySystem, Representation, RunConfig, BUILTINS,
};
use primebasis_bench::reference::{reference_row, RefRow};
use primebasis_bench::{
    markdown, measured_reduction, run_corpus, run_permutations, summarize_permutations, write_csv,
    BenchConfig, BenchRecord,
};

/// Reduced Gröbner bases under prime-based and total-degree orderings.
#[derive(Parser, Debug)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the reduced basis of one system.
    Run(RunArgs),
    /// Compute the basis and check it; exits with 1 when a check fails.
    Verify(RunArgs),
    /// Benchmarks over the corpus.
    #[command(subcommand)]
    Bench(BenchCommand),
    /// List the built-in systems.
    List,
}

#[derive(Args, Debug)]
struct Selector {
    /// Built-in system name, e.g. `cyclic-4` or "Gerdt 1".
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    system: Option<String>,
    /// System file: one polynomial per line, `# vars:` header optional.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Re-declare the variable order, e.g. `zyxt`.
    #[arg(long)]
    var_order: Option<String>,
}

#[derive(Args, Debug)]
struct RunArgs {
    #[command(flatten)]
    select: Selector,
    #[arg(long, default_value = "prime")]
    ordering: MonomialOrder,
    #[arg(long, default_value = "big")]
    backend: CoeffBackend,
    /// Power-product representation; defaults to the ordering's own.
    #[arg(long, value_enum)]
    repr: Option<ReprArg>,
    /// Print the basis, one polynomial per line.
    #[arg(long)]
    print_basis: bool,
    /// Give up after this many seconds.
    #[arg(long)]
    timeout: Option<u64>,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ReprArg {
    String,
    Vector,
    Image,
}

impl From<ReprArg> for Representation {
    fn from(r: ReprArg) -> Self {
        match r {
            ReprArg::String => Representation::ExpandedString,
            ReprArg::Vector => Representation::ExponentVector,
            ReprArg::Image => Representation::PrimeImage,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Csv,
    Md,
}

#[derive(Subcommand, Debug)]
enum BenchCommand {
    /// Both orderings and both backends over the corpus.
    Corpus {
        #[command(flatten)]
        opts: BenchOpts,
        /// Restrict to these systems (repeatable).
        #[arg(long)]
        system: Vec<String>,
    },
    /// Every variable order of one system.
    Permute {
        #[arg(long)]
        system: String,
        #[command(flatten)]
        opts: BenchOpts,
    },
}

#[derive(Args, Debug)]
struct BenchOpts {
    #[arg(long, default_value_t = 5)]
    repeats: u32,
    /// Per-run limit in seconds.
    #[arg(long, default_value_t = 600)]
    timeout: u64,
    #[arg(long, value_enum, default_value = "md")]
    format: Format,
    /// Skip the untimed warm-up run.
    #[arg(long)]
    no_warmup: bool,
    /// Write here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

impl BenchOpts {
    fn config(&self) -> BenchConfig {
        BenchConfig {
            repeats: self.repeats.max(1),
            timeout: Duration::from_secs(self.timeout),
            warmup: !self.no_warmup,
            verify: false,
        }
    }
}

/// Exit codes: 1 failed verification, 2 bad input, 3 capacity exceeded,
/// 4 anything else (timeouts included).
#[derive(Debug)]
enum Failure {
    Input(anyhow::Error),
    Capacity(AlgebraError),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

fn load(select: &Selector) -> Result<PolySystem, Failure> {
    let system = match (&select.system, &select.input) {
        (Some(name), _) => builtin(name).map_err(|e| Failure::Input(e.into()))?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(Failure::Input)?;
            let name = path
                .file_stem()
                .map_or("input".into(), |s| s.to_string_lossy().into_owned());
            parse_system_file(&text, &name, None).map_err(|e| Failure::Input(e.into()))?
        }
        (None, None) => return Err(Failure::Input(anyhow::anyhow!("give --system or --input"))),
    };
    match &select.var_order {
        Some(order) => system
            .permute_vars(order)
            .map_err(|e| Failure::Input(e.into())),
        None => Ok(system),
    }
}

fn cmd_run(args: &RunArgs, check: bool) -> Result<bool, Failure> {
    let system = load(&args.select)?;
    let mut options = EngineOptions::default();
    if let Some(secs) = args.timeout {
        options = options.with_timeout(Duration::from_secs(secs));
    }
    let mut config = RunConfig::new(args.ordering, args.backend).with_options(options);
    if let Some(repr) = args.repr {
        config = config.with_representation(repr.into());
    }
    let out = match run(&system, &config, check) {
        Ok(out) => out,
        Err(e) if e.is_capacity() => return Err(Failure::Capacity(e)),
        Err(e) => return Err(Failure::Other(e.into())),
    };
    println!(
        "{}: {} polynomials ({} ordering, {} coefficients, {} power products, variables {}) in {:.3} ms",
        system.name(),
        out.basis.len(),
        config.ordering,
        config.backend,
        config.representation.as_str(),
        system.vars().order_string(),
        out.duration.as_secs_f64() * 1e3
    );
    let s = out.stats;
    println!(
        "pairs: {} created, {} selected, {} coprime, {} chain, {} zero, {} new",
        s.created,
        s.selected,
        s.skipped_coprime,
        s.skipped_chain,
        s.zero_reductions,
        s.new_polynomials
    );
    if args.print_basis {
        for line in &out.rendered {
            println!("{line}");
        }
    }
    match out.verification {
        Some(report) => {
            print!("{report}");
            Ok(report.passed())
        }
        None => Ok(true),
    }
}

fn emit(records: &[BenchRecord], opts: &BenchOpts, extra: &str) -> Result<()> {
    let mut text = Vec::new();
    match opts.format {
        Format::Csv => write_csv(&mut text, records)?,
        Format::Md => {
            text.extend_from_slice(markdown(records).as_bytes());
            text.extend_from_slice(extra.as_bytes());
        }
    }
    match &opts.output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => io::Write::write_all(&mut io::stdout(), &text)?,
    }
    Ok(())
}

fn fmt_pct(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |p| format!("{p:.1}"))
}

/// Side-by-side view of the measured cells and the reference row.
fn corpus_summary(records: &[BenchRecord], systems: &[PolySystem]) -> String {
    let mut out = String::from(
        "\n| system | total i64 | prime i64 | red. % | ref. % | total big | prime big | red. % | ref. % |\n\
         |---|---|---|---|---|---|---|---|---|\n",
    );
    for system in systems {
        let cell = |ordering: MonomialOrder, backend: CoeffBackend| {
            records
                .iter()
                .find(|r| {
                    r.system == system.name()
                        && r.ordering == ordering.as_str()
                        && r.backend == backend.as_str()
                })
                .map_or_else(|| "-".to_string(), BenchRecord::cell)
        };
        let reference = BUILTINS
            .iter()
            .find(|b| b.title == system.name())
            .and_then(|b| reference_row(b.key));
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} |\n",
            system.name(),
            cell(MonomialOrder::TotalDegree, CoeffBackend::Fixed64),
            cell(MonomialOrder::PrimeBased, CoeffBackend::Fixed64),
            fmt_pct(measured_reduction(
                records,
                system.name(),
                CoeffBackend::Fixed64
            )),
            fmt_pct(reference.and_then(|r: &RefRow| r.printed_i64)),
            cell(MonomialOrder::TotalDegree, CoeffBackend::ArbitraryPrecision),
            cell(MonomialOrder::PrimeBased, CoeffBackend::ArbitraryPrecision),
            fmt_pct(measured_reduction(
                records,
                system.name(),
                CoeffBackend::ArbitraryPrecision
            )),
            fmt_pct(reference.and_then(|r: &RefRow| r.printed_big)),
        ));
    }
    out
}

fn cmd_bench(cmd: &BenchCommand) -> Result<(), Failure> {
    match cmd {
        BenchCommand::Corpus { opts, system } => {
            let systems = if system.is_empty() {
                BUILTINS
                    .iter()
                    .map(|b| builtin(b.key))
                    .collect::<Result<Vec<_>, _>>()
            } else {
                system.iter().map(|name| builtin(name)).collect()
            }
            .map_err(|e| Failure::Input(e.into()))?;
            let cases =
                run_corpus(&systems, &opts.config()).map_err(|e| Failure::Other(e.into()))?;
            let records: Vec<BenchRecord> = cases.into_iter().map(|c| c.record).collect();
            emit(&records, opts, &corpus_summary(&records, &systems))?;
        }
        BenchCommand::Permute { system, opts } => {
            let system = builtin(system).map_err(|e| Failure::Input(e.into()))?;
            let records = run_permutations(&system, &CoeffBackend::ALL, &opts.config())
                .map_err(|e| Failure::Input(e.into()))?;
            let mut extra =
                String::from("\n| ordering | backend | fastest | max/min |\n|---|---|---|---|\n");
            for s in summarize_permutations(&records) {
                extra.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    s.ordering,
                    s.backend,
                    s.fastest.unwrap_or_else(|| "-".into()),
                    s.max_min_ratio
                        .map_or_else(|| "-".into(), |r| format!("{r:.1}"))
                ));
            }
            emit(&records, opts, &extra)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // die quietly on a closed pipe (`primebasis list | head`) instead of panicking
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Run(args) => cmd_run(args, false),
        Command::Verify(args) => cmd_run(args, true),
        Command::Bench(cmd) => cmd_bench(cmd).map(|()| true),
        Command::List => {
            for b in BUILTINS.iter() {
                println!("{:18} {}", b.key, b.title);
            }
            Ok(true)
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Capacity(e)) => {
            eprintln!("capacity exceeded: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(4)
        }
    }
}
