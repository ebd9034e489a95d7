//! The `floorcount` command line: exact counts, diagram export, a
//! verification suite and a tropical curve checker.

pub mod cache;
pub mod render;
pub mod verify;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use floorcount::enumeration::{self, enumerate_diagrams, enumerate_with_markings};
use floorcount::formulas::{closed_count, genus_max, kontsevich};
use floorcount::tropical::{ElevatorEnd, TropicalCurve, TropicalError};
use floorcount::{Invariant, Method};
use num_bigint::BigUint;

use cache::{Cache, CacheKey};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "floorcount", version, about = "Exact plane curve counts from floor diagrams")]
pub struct Cli {
    /// Directory for cached counts.
    #[arg(long, global = true, env = "FLOORCOUNT_CACHE")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print N(d,g) or W(d).
    Count {
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        genus: u32,
        #[arg(long, value_enum, default_value_t = InvariantArg::Complex)]
        invariant: InvariantArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Allow real counts in positive genus (no known invariance).
        #[arg(long)]
        experimental_real_genus: bool,
    },
    /// List the floor diagrams of a degree and genus, one per record.
    Enumerate {
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        genus: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Add marking counts and multiplicities to each record.
        #[arg(long)]
        with_markings: bool,
    },
    /// Recompute the published tables and cross-checks.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    /// Check a tropical curve given as JSON.
    Tropical {
        #[command(subcommand)]
        action: TropicalAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum TropicalAction {
    /// Structure, balancing, degree, nodality and genus.
    Validate { file: PathBuf },
    /// Complex and real multiplicities.
    Multiplicity { file: PathBuf },
    /// Floors, elevators and the induced floor diagram.
    Floors { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InvariantArg {
    Complex,
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Diagrams,
    Kontsevich,
    Formula,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) => EXIT_FAILURE,
            CliError::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failure(m) | CliError::Io(m) => m,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

type CliResult = Result<u8, CliError>;

/// Runs a parsed command, returning the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    if let Some(n) = cli.threads {
        if n == 0 {
            let _ = writeln!(err, "error: --threads must be at least 1");
            return EXIT_USAGE;
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let result = match cli.command {
        Command::Count {
            degree,
            genus,
            invariant,
            method,
            experimental_real_genus,
        } => {
            let cache = cli.cache_dir.as_deref().and_then(|d| open_cache(d, err));
            count(degree, genus, invariant, method, experimental_real_genus, cache, out, err)
        }
        Command::Enumerate {
            degree,
            genus,
            format,
            with_markings,
        } => enumerate(degree, genus, format, with_markings, out),
        Command::Verify { max_degree } => verify(max_degree, out, err),
        Command::Tropical { action } => tropical(action, out),
    };
    match result {
        Ok(code) => {
            let _ = out.flush();
            code
        }
        Err(e) => {
            let _ = out.flush();
            let _ = writeln!(err, "error: {}", e.message());
            e.code()
        }
    }
}

fn open_cache(dir: &Path, err: &mut dyn Write) -> Option<Cache> {
    match Cache::open(dir) {
        Ok(c) => Some(c),
        Err(e) => {
            let _ = writeln!(
                err,
                "warning: cache directory {} is unusable ({e}); caching disabled",
                dir.display()
            );
            None
        }
    }
}

fn resolve_method(
    degree: u32,
    genus: u32,
    invariant: InvariantArg,
    method: MethodArg,
    experimental: bool,
) -> Result<Method, CliError> {
    if degree == 0 {
        return Err(CliError::Usage("--degree must be at least 1".into()));
    }
    let delta = genus_max(degree).checked_sub(genus);
    match invariant {
        InvariantArg::Real => {
            if genus > 0 && !experimental {
                return Err(CliError::Usage(
                    "real counts need --genus 0 (or --experimental-real-genus)".into(),
                ));
            }
            match method {
                MethodArg::Diagrams | MethodArg::Auto => Ok(Method::FloorDiagrams),
                _ => Err(CliError::Usage("real counts are computed with --method diagrams".into())),
            }
        }
        InvariantArg::Complex => match method {
            MethodArg::Diagrams => Ok(Method::FloorDiagrams),
            MethodArg::Kontsevich if genus == 0 => Ok(Method::Kontsevich),
            MethodArg::Kontsevich => {
                Err(CliError::Usage("--method kontsevich needs --genus 0".into()))
            }
            MethodArg::Formula => match delta {
                Some(delta) if delta <= 2 => Ok(Method::ClosedFormula),
                _ => Err(CliError::Usage(format!(
                    "--method formula needs genus between {} and {} for degree {degree}",
                    genus_max(degree).saturating_sub(2),
                    genus_max(degree)
                ))),
            },
            MethodArg::Auto => Ok(if genus == 0 {
                Method::Kontsevich
            } else if delta.is_some_and(|d| d <= 2) {
                Method::ClosedFormula
            } else {
                Method::FloorDiagrams
            }),
        },
    }
}

fn compute(degree: u32, genus: u32, kind: Invariant, method: Method) -> Result<BigUint, CliError> {
    let failure = |e: &dyn std::fmt::Display| CliError::Failure(e.to_string());
    Ok(match (kind, method) {
        (Invariant::Real, _) => enumeration::count_real(degree, genus).value,
        (Invariant::Complex, Method::FloorDiagrams) => enumeration::count_complex(degree, genus).value,
        (Invariant::Complex, Method::Kontsevich) => kontsevich(degree).map_err(|e| failure(&e))?,
        (Invariant::Complex, Method::ClosedFormula) => {
            closed_count(degree, genus_max(degree) - genus).map_err(|e| failure(&e))?
        }
    })
}

#[allow(clippy::too_many_arguments)]
fn count(
    degree: u32,
    genus: u32,
    invariant: InvariantArg,
    method: MethodArg,
    experimental: bool,
    cache: Option<Cache>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    let method = resolve_method(degree, genus, invariant, method, experimental)?;
    let kind = match invariant {
        InvariantArg::Complex => Invariant::Complex,
        InvariantArg::Real => Invariant::Real,
    };
    let key = CacheKey {
        degree,
        genus,
        kind,
        method,
    };
    let cached = cache.as_ref().and_then(|c| c.load(&key, err));
    let value = match cached {
        Some(v) => v,
        None => {
            let v = compute(degree, genus, kind, method)?;
            if let Some(c) = &cache {
                if let Err(e) = c.store(&key, &v) {
                    writeln!(err, "warning: could not write cache entry: {e}")?;
                }
            }
            v
        }
    };
    writeln!(out, "{value}")?;
    Ok(EXIT_OK)
}

fn enumerate(
    degree: u32,
    genus: u32,
    format: Format,
    with_markings: bool,
    out: &mut dyn Write,
) -> CliResult {
    if degree == 0 {
        return Err(CliError::Usage("--degree must be at least 1".into()));
    }
    if with_markings {
        for (i, c) in enumerate_with_markings(degree, genus).iter().enumerate() {
            match format {
                Format::Json => writeln!(out, "{}", render::json_line_with_markings(c))?,
                Format::Dot => write!(out, "{}", render::dot(&format!("d{}", i + 1), &c.diagram, Some(c)))?,
            }
        }
    } else {
        for (i, d) in enumerate_diagrams(degree, genus).iter().enumerate() {
            match format {
                Format::Json => writeln!(out, "{}", render::json_line(d))?,
                Format::Dot => write!(out, "{}", render::dot(&format!("d{}", i + 1), d, None))?,
            }
        }
    }
    Ok(EXIT_OK)
}

fn verify(max_degree: u32, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    if max_degree == 0 {
        return Err(CliError::Usage("--max-degree must be at least 1".into()));
    }
    let start = Instant::now();
    let result = verify::run(max_degree);
    write!(out, "{}", result.table())?;
    for c in &result.checks {
        writeln!(err, "{}: {:.2?}", c.name, c.elapsed)?;
    }
    writeln!(err, "total: {:.2?}", start.elapsed())?;
    if result.passed() {
        return Ok(EXIT_OK);
    }
    let failures: Vec<String> = result
        .failures()
        .map(|c| format!("{}: expected {} ({}), computed {}", c.name, c.expected, c.source, c.computed))
        .collect();
    Err(CliError::Failure(format!(
        "{} checks failed:\n  {}",
        failures.len(),
        failures.join("\n  ")
    )))
}

fn load_curve(file: &Path) -> Result<TropicalCurve, CliError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Io(format!("{}: {e}", file.display())))?;
    TropicalCurve::parse_json(&text).map_err(|e| match e {
        TropicalError::Parse(m) => CliError::Usage(format!("{}: {m}", file.display())),
        other => CliError::Usage(format!("{}: {other}", file.display())),
    })
}

fn semantic(e: TropicalError) -> CliError {
    CliError::Failure(e.to_string())
}

fn tropical(action: TropicalAction, out: &mut dyn Write) -> CliResult {
    match action {
        TropicalAction::Validate { file } => {
            let curve = load_curve(&file)?;
            let report = curve.validate();
            writeln!(out, "{report}")?;
            if !report.is_valid() {
                return Ok(EXIT_FAILURE);
            }
            match curve.degree() {
                Ok(d) => writeln!(out, "degree: {d}")?,
                Err(e) => writeln!(out, "degree: none ({e})")?,
            }
            writeln!(out, "nodal: {}", curve.check_nodal())?;
            if let Ok(g) = curve.genus() {
                writeln!(out, "genus: {g}")?;
            }
            Ok(EXIT_OK)
        }
        TropicalAction::Multiplicity { file } => {
            let curve = load_curve(&file)?;
            let complex = curve.complex_multiplicity().map_err(semantic)?;
            let real = curve.real_multiplicity().map_err(semantic)?;
            writeln!(out, "complex: {complex}\nreal: {real}")?;
            Ok(EXIT_OK)
        }
        TropicalAction::Floors { file } => {
            let curve = load_curve(&file)?;
            let dec = curve.floor_decomposition().map_err(semantic)?;
            writeln!(out, "floors: {}", dec.floors.len())?;
            writeln!(out, "elevators: {}", dec.elevators.len())?;
            for (i, f) in dec.floors.iter().enumerate() {
                writeln!(out, "floor f{}: {}", i + 1, f.vertices.join(" "))?;
            }
            let end = |e: ElevatorEnd| match e {
                ElevatorEnd::Floor(f) => format!("f{}", f + 1),
                ElevatorEnd::Infinity => "-inf".to_string(),
            };
            for e in &dec.elevators {
                writeln!(out, "elevator {} -> {} weight {}", end(e.lower), end(e.upper), e.weight)?;
            }
            writeln!(out, "diagram: {}", render::json_line(&dec.diagram))?;
            Ok(EXIT_OK)
        }
    }
}
