//! Command-line front end: `regpow compute|defects|construct|verify|betti`.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use regpow::constructions::{self, FamilySpec};
use regpow::functions::{Evaluator, FunctionKind, ModuleKind, DEFAULT_WINDOW};
use regpow::io::{read_spec, serialize_spec, ResultTable};
use regpow::resolution::{BettiCache, Engine};
use regpow::Error;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_HYPOTHESIS: u8 = 4;
const EXIT_OTHER: u8 = 5;

#[derive(Parser)]
#[command(name = "regpow", version, about = "Regularity and saturation degree of powers of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Values of one function over a range of powers.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long = "fn", value_parser = parse_function)]
        function: FunctionKind,
        #[arg(long, default_value_t = 1)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Values, defects and window diagnostics.
    Defects {
        #[arg(long)]
        input: PathBuf,
        #[arg(long = "fn", value_parser = parse_function)]
        function: FunctionKind,
        #[arg(long, default_value_t = 1)]
        from: u32,
        #[arg(long)]
        to: u32,
        /// Minimum stable suffix length counted as window-stable.
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Writes a family instance as a spec file.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compares the engine with the family's closed forms.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// One function; every function with a closed form when absent.
        #[arg(long = "fn", value_parser = parse_function)]
        function: Option<FunctionKind>,
        #[arg(long, default_value_t = 1)]
        from: u32,
        #[arg(long)]
        to: u32,
    },
    /// Graded Betti table of `Iⁿ`, `R/Iⁿ` or `Iⁿ⁻¹/Iⁿ`.
    Betti {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = parse_module)]
        module: ModuleKind,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// one_dim, dim1, dim1b, ubiquity3, ehl, cycle, m2_reg or m2_sdeg.
    #[arg(long)]
    family: String,
    #[arg(long)]
    d: Option<u32>,
    /// Comma-separated `c_0,c_1,…`.
    #[arg(long, value_delimiter = ',')]
    c: Option<Vec<u32>>,
    /// Comma-separated `e_1,e_2,…`.
    #[arg(long, value_delimiter = ',')]
    e: Option<Vec<u32>>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Csv,
    Json,
}

fn parse_function(s: &str) -> Result<FunctionKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_module(s: &str) -> Result<ModuleKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

impl FamilyArgs {
    fn spec(&self) -> anyhow::Result<FamilySpec> {
        let need_d = || self.d.context("--d is required for this family");
        let need_c = || self.c.clone().context("--c is required for this family");
        let spec = match self.family.as_str() {
            "one_dim" => FamilySpec::OneDim { d: need_d()?, c: need_c()? },
            "dim1" => FamilySpec::Dim1 { d: need_d()?, c: need_c()? },
            "dim1b" => FamilySpec::Dim1b { d: need_d()?, c: need_c()? },
            "ubiquity3" => FamilySpec::Ubiquity3 {
                d: need_d()?,
                e: self.e.clone().context("--e is required for ubiquity3")?,
            },
            "ehl" => FamilySpec::Ehl { r: self.r.context("--r is required for ehl")? },
            "cycle" => FamilySpec::Cycle { t: self.t.context("--t is required for cycle")? },
            "m2_reg" => FamilySpec::M2Reg,
            "m2_sdeg" => FamilySpec::M2Sdeg,
            other => bail!("unknown family {other:?}"),
        };
        Ok(spec)
    }
}

fn engine() -> anyhow::Result<Engine> {
    match std::env::var_os("REGPOW_CACHE") {
        Some(path) if !path.is_empty() => Ok(Engine::with_cache(BettiCache::open(PathBuf::from(path))?)),
        _ => Ok(Engine::new()),
    }
}

fn persist(engine: &Engine) -> anyhow::Result<()> {
    if let Some(cache) = engine.cache() {
        cache.persist()?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let engine = engine()?;
    let code = match cli.command {
        Command::Compute { input, function, from, to, format } => {
            let x = read_spec(&input)?;
            let report = Evaluator::new(&x, &engine).report(function, from, to, DEFAULT_WINDOW)?;
            let table = ResultTable::from(&report);
            match format {
                Format::Csv => print!("{}", table.to_csv()),
                Format::Json => print!("{}", table.to_json()),
            }
            0
        }
        Command::Defects { input, function, from, to, window, format } => {
            let x = read_spec(&input)?;
            let report = Evaluator::new(&x, &engine).report(function, from, to, window)?;
            match format {
                ReportFormat::Text => print!("{}", render_report(&report)),
                ReportFormat::Csv => print!("{}", ResultTable::from(&report).to_csv()),
                ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&report)?),
            }
            0
        }
        Command::Construct { family, out } => {
            let spec = family.spec()?;
            let text = format!("# {spec}\n{}", serialize_spec(&spec.build()?));
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            0
        }
        Command::Verify { family, function, from, to } => {
            let spec = family.spec()?;
            let functions = match function {
                Some(f) => vec![f],
                None => spec.predicted_functions(),
            };
            if functions.is_empty() {
                return Err(Error::NoClosedForm { family: spec.name().into(), function: "any".into() }.into());
            }
            let mut ok = true;
            for f in functions {
                let report = constructions::verify(&spec, f, from, to, &engine)?;
                print!("{report}");
                ok &= report.passed();
            }
            if ok { 0 } else { EXIT_MISMATCH }
        }
        Command::Betti { input, module, power } => {
            let x = read_spec(&input)?;
            print!("{}", engine.betti_table(&x.module(module, power)?));
            0
        }
    };
    persist(&engine)?;
    Ok(code)
}

fn render_report(r: &regpow::DefectReport) -> String {
    let mut out = format!("function: {}\n", r.function);
    match r.slope {
        Some(d) => out += &format!("slope: {d}\n"),
        None => out += "slope: none (not equigenerated; defects omitted)\n",
    }
    out += "n\tvalue\tdefect\n";
    for row in &r.rows {
        let defect = row.defect.map(|d| d.to_string()).unwrap_or_else(|| "-".into());
        out += &format!("{}\t{}\t{defect}\n", row.n, row.value);
    }
    if r.slope.is_some() {
        let drops: Vec<String> =
            r.defect_drops.iter().map(|d| d.map_or("-".into(), |d| d.to_string())).collect();
        out += &format!("defect differences: {}\n", drops.join(" "));
    }
    out += &format!(
        "stable suffix: {} (window {}: {})\n",
        r.stable_suffix_length,
        r.window,
        if r.stabilized_in_window { "stable" } else { "not stable" }
    );
    if let Some(flag) = r.weakly_decreasing {
        out += &format!("defects weakly decreasing: {flag}\n");
    }
    if let Some(flag) = r.drops_bounded_by_slope {
        out += &format!("defect drops bounded by slope: {flag}\n");
    }
    out
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Parse { .. }) => EXIT_PARSE,
        Some(Error::Hypothesis(_)) => EXIT_HYPOTHESIS,
        Some(Error::Input(_) | Error::NoClosedForm { .. }) => EXIT_USAGE,
        Some(_) => EXIT_OTHER,
        None if err.downcast_ref::<std::io::Error>().is_some() => EXIT_OTHER,
        None if err.downcast_ref::<serde_json::Error>().is_some() => EXIT_OTHER,
        // Missing family parameters and similar argument problems.
        None => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("REGPOW_THREADS").ok().filter(|s| !s.is_empty()) {
        match n.parse::<usize>() {
            Ok(n) if n > 0 => {
                rayon::ThreadPoolBuilder::new().num_threads(n).build_global().ok();
            }
            _ => {
                eprintln!("regpow: REGPOW_THREADS must be a positive integer, got {n:?}");
                return ExitCode::from(EXIT_USAGE);
            }
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("regpow: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
