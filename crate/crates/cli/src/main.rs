use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use signed_spectra::oracle::{spectrum_by, verify, Method};

use signed_spectra_cli::instance::{build_instance, PatternArgs, PatternKind};
use signed_spectra_cli::output::{Format, SpectrumReport};
use signed_spectra_cli::suites::{self, CaseResult};
use signed_spectra_cli::{sweep, CliError, CliResult};

/// Spectra of signed complete bipartite graphs.
#[derive(Debug, Parser)]
#[command(name = "signed-spectra", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the spectrum of one instance.
    Spectrum(SpectrumArgs),
    /// Run the reference and randomized verification suites.
    Verify(VerifyArgs),
    /// Sweep a parameter grid and write one CSV row per instance.
    Sweep(SweepArgs),
    /// Print the sign table of one instance as JSON.
    Build(InstanceArgs),
}

#[derive(Debug, Args)]
struct InstanceArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    #[arg(long, value_enum)]
    pattern: PatternKind,
    /// Rows of the negative biclique.
    #[arg(long)]
    r: Option<usize>,
    /// Columns of the negative biclique.
    #[arg(long)]
    s: Option<usize>,
    /// Biclique sizes, e.g. "2:2,2:3".
    #[arg(long)]
    parts: Option<String>,
    /// Path parameter r.
    #[arg(long)]
    path_r: Option<usize>,
    /// Edge list of the regular subgraph, labels 1..2k.
    #[arg(long)]
    h_file: Option<PathBuf>,
    #[arg(long, env = "SIGNED_SPECTRA_SEED", default_value_t = 0)]
    seed: u64,
}

impl InstanceArgs {
    fn pattern_args(&self) -> PatternArgs {
        PatternArgs {
            r: self.r,
            s: self.s,
            parts: self.parts.clone(),
            path_r: self.path_r,
            h_file: self.h_file.clone(),
            seed: self.seed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Oracle,
    Reduction,
    Closedform,
    All,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, value_enum, default_value_t = MethodArg::All)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Golden,
    Properties,
    All,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, env = "SIGNED_SPECTRA_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long)]
    p_max: usize,
    #[arg(long)]
    q_max: usize,
    /// Comma-separated pattern names.
    #[arg(long, default_value = "biclique")]
    patterns: String,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = "SIGNED_SPECTRA_SEED", default_value_t = 0)]
    seed: u64,
}

const DISAGREEMENT: u8 = 3;

fn cmd_spectrum(args: &SpectrumArgs) -> CliResult<u8> {
    let a = &args.instance;
    let inst = build_instance(a.p, a.q, a.pattern, &a.pattern_args())?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let single = match args.method {
        MethodArg::Oracle => Some(Method::Oracle),
        MethodArg::Reduction => Some(Method::Reduction),
        MethodArg::Closedform => Some(Method::ClosedForm),
        MethodArg::All => None,
    };
    if let Some(method) = single {
        let spectrum = spectrum_by(&inst.graph, inst.pattern.as_ref(), method)?;
        let report = SpectrumReport {
            instance: &inst,
            spectra: vec![(method.name(), &spectrum)],
            max_deviation: None,
            checks: None,
            pass: None,
        };
        report.write(args.format, &mut out)?;
        return Ok(0);
    }

    let methods: &[Method] = if inst.pattern.is_some() {
        &Method::ALL
    } else {
        &[Method::Oracle, Method::Reduction]
    };
    let report = verify(&inst.graph, inst.pattern.as_ref(), methods, a.seed)?;
    let view = SpectrumReport {
        instance: &inst,
        spectra: report.methods.iter().map(|(k, v)| (k.as_str(), v)).collect(),
        max_deviation: Some(report.max_deviation),
        checks: Some(&report.checks),
        pass: Some(report.pass),
    };
    view.write(args.format, &mut out)?;
    if args.format == Format::Csv {
        eprintln!("max deviation: {:.3e}", report.max_deviation);
    }
    Ok(if report.pass { 0 } else { DISAGREEMENT })
}

fn print_cases(suite: &str, cases: &[CaseResult]) -> bool {
    for c in cases {
        println!(
            "{} {suite}: {}: {}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    cases.iter().all(|c| c.pass)
}

fn cmd_verify(args: &VerifyArgs) -> CliResult<u8> {
    let mut ok = true;
    if matches!(args.suite, Suite::Golden | Suite::All) {
        ok &= print_cases("golden", &suites::golden()?);
    }
    if matches!(args.suite, Suite::Properties | Suite::All) {
        ok &= print_cases("properties", &suites::properties(args.trials, args.seed)?);
    }
    Ok(u8::from(!ok))
}

fn cmd_sweep(args: &SweepArgs) -> CliResult<u8> {
    let kinds = sweep::parse_patterns(&args.patterns)?;
    let rows = sweep::run(args.p_max, args.q_max, &kinds, args.seed)?;
    match &args.out {
        Some(path) => {
            let file = File::create(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            sweep::write_csv(&rows, BufWriter::new(file))?;
        }
        None => sweep::write_csv(&rows, io::stdout().lock())?,
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    if failed > 0 {
        eprintln!("{failed} of {} instances failed", rows.len());
    }
    Ok(u8::from(failed > 0))
}

fn cmd_build(args: &InstanceArgs) -> CliResult<u8> {
    let inst = build_instance(args.p, args.q, args.pattern, &args.pattern_args())?;
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, &inst.graph)?;
    writeln!(out).map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Build(a) => cmd_build(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
