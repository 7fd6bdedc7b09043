use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};

use iatm::csv::emit_csv;
use iatm::{builtin_problem, compare_to_fixture, error_table, fixture_for, GridSpec, HarnessError, ProblemId};
use iatm_core::solver::{residual, solve};
use iatm_core::{parse_problem_with_alpha, Error, ProblemSpec, Rational, SchemeChoice, SourceText};

#[derive(Parser)]
#[command(name = "iatm", version, about = "Series solutions of nonlinear fractional PIDEs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Iatm,
    Ladm,
}

impl From<Scheme> for SchemeChoice {
    fn from(s: Scheme) -> Self {
        match s {
            Scheme::Iatm => SchemeChoice::IatmDj,
            Scheme::Ladm => SchemeChoice::LadmAdomian,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve and write an error table as CSV.
    Solve {
        /// p1, p2, p3 or a problem document
        #[arg(long)]
        problem: String,
        /// Overrides the document's order (built-ins default to 1).
        #[arg(long)]
        alpha: Option<Rational>,
        #[arg(long, default_value_t = 3)]
        iterations: usize,
        #[arg(long, value_enum, default_value = "iatm")]
        scheme: Scheme,
        /// `table` (built-ins only) or `t0,t1,...;x0,x1,...`
        #[arg(long, default_value = "table")]
        grid: String,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce a reference table and optionally check it.
    Table {
        #[arg(long)]
        problem: ProblemId,
        #[arg(long, default_value = "1")]
        alpha: Rational,
        #[arg(long, value_enum, default_value = "iatm")]
        scheme: Scheme,
        /// Exit with status 1 when any cell fails.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 10.0)]
        factor: f64,
    },
    /// Max |residual| of each partial sum over random interior points.
    Residual {
        #[arg(long)]
        problem: String,
        #[arg(long)]
        alpha: Option<Rational>,
        #[arg(long, default_value_t = 3)]
        iterations: usize,
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// One CSV per order for plotting, with S_2 and S_3 as the approximation.
    SweepAlpha {
        #[arg(long)]
        problem: String,
        #[arg(long, value_delimiter = ',', default_value = "0.7,0.8,0.9,1")]
        alphas: Vec<Rational>,
        #[arg(long, default_value = "0.1,0.5,1;0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1")]
        grid: String,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Compare,
    Internal(String),
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::Core(e @ Error::TermCap { .. }) => Failure::Internal(e.to_string()),
            HarnessError::Io(e) => Failure::Internal(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        HarnessError::from(e).into()
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

/// Built-in id or a document path, with the order resolved.
fn load_problem(name: &str, alpha: Option<Rational>) -> Result<(ProblemSpec, Option<ProblemId>), Failure> {
    if let Ok(id) = name.parse::<ProblemId>() {
        return Ok((builtin_problem(id, alpha.unwrap_or(Rational::ONE))?, Some(id)));
    }
    let raw = fs::read_to_string(name).map_err(|e| Failure::Usage(format!("{name}: {e}")))?;
    let spec = parse_problem_with_alpha(&SourceText::new(raw, name), alpha)
        .map_err(|e| Failure::Usage(format!("{name}: {e}")))?;
    Ok((spec, None))
}

fn resolve_grid(grid: &str, id: Option<ProblemId>) -> Result<GridSpec, Failure> {
    match (grid, id) {
        ("table", Some(id)) => Ok(GridSpec::paper(id)),
        ("table", None) => Err(Failure::Usage("`--grid table` needs a built-in problem".into())),
        (g, _) => Ok(GridSpec::parse(g)?),
    }
}

fn write_rows(rows: &[iatm::ErrorTableRow], out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => emit_csv(rows, BufWriter::new(File::create(path)?))?,
        None => emit_csv(rows, io::stdout().lock())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            problem,
            alpha,
            iterations,
            scheme,
            grid,
            out,
        } => {
            let (p, id) = load_problem(&problem, alpha)?;
            let grid = resolve_grid(&grid, id)?;
            let sol = solve(&p, iterations, scheme.into())?;
            let rows = error_table(&p, &sol, &grid)?;
            write_rows(&rows, out.as_deref())
        }
        Command::Table {
            problem,
            alpha,
            scheme,
            check,
            factor,
        } => {
            let scheme = SchemeChoice::from(scheme);
            let p = builtin_problem(problem, alpha)?;
            let sol = solve(&p, 4, scheme)?;
            let rows = error_table(&p, &sol, &GridSpec::paper(problem))?;
            let fixture = fixture_for(problem, scheme).filter(|_| alpha == Rational::ONE);
            let Some(fixture) = fixture else {
                if check {
                    return Err(Failure::Usage(format!(
                        "no reference table for {problem}/{scheme} at alpha = {alpha}"
                    )));
                }
                return write_rows(&rows, None);
            };
            let report = compare_to_fixture(&rows, &fixture, factor)?;
            println!("{report}");
            if check && !report.all_pass() {
                return Err(Failure::Compare);
            }
            Ok(())
        }
        Command::Residual {
            problem,
            alpha,
            iterations,
            points,
            seed,
        } => {
            let (p, _) = load_problem(&problem, alpha)?;
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let (x0, x1) = p.x_range;
            let pts: Vec<(f64, f64)> = (0..points)
                .map(|_| {
                    (
                        rng.gen_range(x0..=x1),
                        rng.gen_range(0.0..=p.t_max).max(f64::MIN_POSITIVE),
                    )
                })
                .collect();
            let sol = solve(&p, iterations, SchemeChoice::IatmDj)?;
            let mut out = io::stdout().lock();
            let max = |v: Vec<f64>| v.into_iter().fold(0.0f64, |a, r| a.max(r.abs()));
            if let Some(exact) = &p.exact {
                writeln!(out, "exact {:.3e}", max(residual(&p, exact, &pts)?))?;
            }
            for (k, s) in sol.partial_sums.iter().enumerate() {
                writeln!(out, "S_{k} {:.3e}", max(residual(&p, s, &pts)?))?;
            }
            Ok(())
        }
        Command::SweepAlpha {
            problem,
            alphas,
            grid,
            out_dir,
        } => {
            fs::create_dir_all(&out_dir)?;
            let stem = Path::new(&problem)
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| problem.clone());
            for alpha in alphas {
                let (p, id) = load_problem(&problem, Some(alpha))?;
                let grid = resolve_grid(&grid, id)?;
                let mut sol = solve(&p, 3, SchemeChoice::IatmDj)?;
                for n in [3, 2] {
                    sol.partial_sums.truncate(n + 1);
                    let rows = error_table(&p, &sol, &grid)?;
                    let tag = alpha.to_string().replace('/', "_");
                    let path = out_dir.join(format!("{stem}_alpha{tag}_S{n}.csv"));
                    write_rows(&rows, Some(&path))?;
                    eprintln!("wrote {}", path.display());
                }
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compare) => ExitCode::from(1),
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
