use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use riordan_core::algebra::rational::format as fmt_rational;
use riordan_core::amoeba::{
    boundary_smoothness_probe, cloud_csv, component_census, cone_omega, newton_polygon, Amoeba,
};
use riordan_core::asympt::{convergence_probe, probe_csv, saddle, Direction};
use riordan_core::cauchy::{residual, riordan_initial_data, solve};
use riordan_core::genfun::{
    assemble, assemble_from_tables, assemble_riordan, correction_is_zero, series_of, ColumnGF,
    ColumnInput,
};
use riordan_core::{CauchyProblem, Error, GenfunError, Grid, ProblemFile, RiordanSpec};

#[derive(Parser)]
#[command(
    name = "riordan",
    version,
    about = "Rational Riordan arrays and their difference equations"
)]
struct Cli {
    /// Problem file (Riordan spec or Cauchy problem, JSON)
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write output here instead of stdout
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    /// Worker threads for parallel stages
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the problem and report violations and warnings
    Validate,
    /// One entry r(x, y)
    Entry {
        #[arg(short)]
        x: usize,
        #[arg(short)]
        y: usize,
    },
    /// Residue table (Riordan spec) or solved table (Cauchy problem)
    Table {
        #[arg(long, default_value_t = 10)]
        xmax: usize,
        #[arg(long, default_value_t = 10)]
        ymax: usize,
    },
    /// Table from the difference equation and initial data
    Solve {
        #[arg(long, default_value_t = 10)]
        xmax: usize,
        #[arg(long, default_value_t = 10)]
        ymax: usize,
    },
    /// Closed-form generating function
    Genfun,
    /// Amoeba boundary cloud, Newton polygon and component census
    Amoeba {
        #[arg(long, default_value_t = -3.0, allow_hyphen_values = true)]
        tmin: f64,
        #[arg(long, default_value_t = 3.0, allow_hyphen_values = true)]
        tmax: f64,
        #[arg(long, default_value_t = 200)]
        nt: usize,
        #[arg(long, default_value_t = 1024)]
        nphi: usize,
    },
    /// Saddle point and convergence probe along the direction (p, q)
    Asympt {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        q: u64,
        #[arg(long, value_delimiter = ',', default_value = "10,50,200")]
        lambdas: Vec<u64>,
    },
    /// Cross-check residue table, Cauchy solve and generating-function series
    Verify {
        #[arg(long, default_value_t = 20)]
        xmax: usize,
        #[arg(long, default_value_t = 10)]
        ymax: usize,
    },
}

enum Failure {
    /// Exit 2: unreadable or invalid input.
    Input { name: &'static str, message: String },
    /// Exit 1: an operation failed.
    Op(Error),
    /// Exit 1: a check ran and did not hold; the report is already written.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let input = matches!(
            e.name(),
            "ParseError"
                | "InvalidSpec"
                | "NotWellPosed"
                | "InsufficientInitialData"
                | "InvalidDirection"
                | "InvalidLambda"
        );
        if input {
            Failure::Input {
                name: e.name(),
                message: e.to_string(),
            }
        } else {
            Failure::Op(e)
        }
    }
}

macro_rules! core_err {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Error::from(e).into()
            }
        }
    )*};
}
core_err!(
    riordan_core::RiordanError,
    riordan_core::CauchyError,
    riordan_core::GenfunError,
    riordan_core::AmoebaError,
    riordan_core::AsymptError,
    riordan_core::LaurentError
);

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = || run(&cli);
    let result = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(run),
            Err(e) => Err(Failure::Input {
                name: "InvalidJobs",
                message: e.to_string(),
            }),
        },
        None => run(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Op(e)) => {
            eprintln!("{}", json!({"error": e.name(), "message": e.to_string()}));
            ExitCode::from(1)
        }
        Err(Failure::Input { name, message }) => {
            eprintln!("{}", json!({"error": name, "message": message}));
            ExitCode::from(2)
        }
    }
}

fn load(cli: &Cli) -> Result<ProblemFile, Failure> {
    let path = cli.spec.as_ref().ok_or(Failure::Input {
        name: "MissingSpec",
        message: "--spec is required".into(),
    })?;
    let text = fs::read_to_string(path).map_err(|e| Failure::Input {
        name: "IoError",
        message: format!("{}: {e}", path.display()),
    })?;
    Ok(ProblemFile::from_json(&text)?)
}

/// A spec that passed validation.
fn riordan_spec(problem: &ProblemFile) -> Result<RiordanSpec, Failure> {
    let spec = match problem {
        ProblemFile::Riordan(s) => s.clone(),
        ProblemFile::Cauchy(cp) => cp.claimed_spec().ok_or(Failure::Input {
            name: "NotARiordanSpec",
            message: "this command needs a Riordan spec or a Cauchy problem naming d_num/d_den"
                .into(),
        })?,
    };
    spec.ensure_valid()?;
    Ok(spec)
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Input {
        name: "IoError",
        message: e.to_string(),
    };
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(io),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(io),
    }
}

fn grid_out(cli: &Cli, g: &Grid) -> String {
    match cli.format {
        Format::Csv => g.to_csv(),
        Format::Json => serde_json::to_string_pretty(g).unwrap() + "\n",
    }
}

fn solved_grid(problem: &ProblemFile, xmax: usize, ymax: usize) -> Result<Grid, Failure> {
    Ok(match problem {
        ProblemFile::Riordan(spec) => {
            spec.ensure_valid()?;
            let init = riordan_initial_data(spec, xmax, ymax)?;
            solve(&problem.equation(), &init, xmax, ymax)?
        }
        ProblemFile::Cauchy(cp) => solve(&cp.eq, &cp.init, xmax, ymax)?,
    })
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let problem = load(cli)?;
    match &cli.command {
        Command::Validate => validate(cli, &problem),
        Command::Entry { x, y } => {
            let v = match &problem {
                ProblemFile::Riordan(spec) => spec.entry(*x, *y)?,
                ProblemFile::Cauchy(_) => solved_grid(&problem, *x, *y)?.get(*x, *y).clone(),
            };
            emit(cli, &format!("{}\n", fmt_rational(&v)))
        }
        Command::Table { xmax, ymax } => {
            let g = match &problem {
                ProblemFile::Riordan(spec) if cli.jobs.is_some_and(|j| j > 1) => {
                    spec.table_par(*xmax, *ymax)?
                }
                ProblemFile::Riordan(spec) => spec.table(*xmax, *ymax)?,
                ProblemFile::Cauchy(_) => solved_grid(&problem, *xmax, *ymax)?,
            };
            emit(cli, &grid_out(cli, &g))
        }
        Command::Solve { xmax, ymax } => {
            emit(cli, &grid_out(cli, &solved_grid(&problem, *xmax, *ymax)?))
        }
        Command::Genfun => {
            let gf = match &problem {
                ProblemFile::Riordan(spec) => {
                    spec.ensure_valid()?;
                    assemble_riordan(spec)?
                }
                ProblemFile::Cauchy(cp) => cauchy_genfun(cp)?,
            };
            let text = match cli.format {
                Format::Csv => format!("{gf}\n"),
                Format::Json => {
                    let mut v = serde_json::to_value(&gf).unwrap();
                    v["display"] = json!(gf.to_string());
                    serde_json::to_string_pretty(&v).unwrap() + "\n"
                }
            };
            emit(cli, &text)
        }
        Command::Amoeba {
            tmin,
            tmax,
            nt,
            nphi,
        } => amoeba(cli, &problem, *tmin, *tmax, *nt, *nphi),
        Command::Asympt { p, q, lambdas } => {
            let spec = riordan_spec(&problem)?;
            let dir = Direction::new(*p, *q)?;
            let rows = convergence_probe(&spec, dir, lambdas)?;
            let text = match cli.format {
                Format::Csv => probe_csv(&rows),
                Format::Json => {
                    let s = saddle(&problem.equation(), dir)?;
                    serde_json::to_string_pretty(
                        &json!({"direction": dir, "saddle": s, "probe": rows}),
                    )
                    .unwrap()
                        + "\n"
                }
            };
            emit(cli, &text)
        }
        Command::Verify { xmax, ymax } => verify(cli, &problem, *xmax, *ymax),
    }
}

fn validate(cli: &Cli, problem: &ProblemFile) -> Result<(), Failure> {
    let eq = problem.equation();
    let wp = eq.well_posed();
    let (violations, warnings) = match riordan_of(problem) {
        Some(spec) => {
            let r = spec.validate();
            (
                r.violations
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>(),
                r.warnings,
            )
        }
        None => (Vec::new(), Vec::new()),
    };
    let ok = violations.is_empty() && wp.ok;
    let report = json!({
        "valid": ok,
        "m": if eq.p.degree().is_some() { json!(eq.m()) } else { json!(null) },
        "well_posed": wp.ok,
        "well_posed_report": wp.report,
        "violations": violations,
        "warnings": warnings,
    });
    emit(
        cli,
        &(serde_json::to_string_pretty(&report).unwrap() + "\n"),
    )?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Input {
            name: "InvalidSpec",
            message: "problem failed validation".into(),
        })
    }
}

fn riordan_of(problem: &ProblemFile) -> Option<RiordanSpec> {
    match problem {
        ProblemFile::Riordan(s) => Some(s.clone()),
        ProblemFile::Cauchy(cp) => cp.claimed_spec(),
    }
}

/// Claimed `d` plus the file's columns read as finitely supported.
fn cauchy_genfun(cp: &CauchyProblem) -> Result<riordan_core::BivariateRational, Failure> {
    let (Some(d_num), Some(d_den)) = (&cp.d_num, &cp.d_den) else {
        return Err(GenfunError::NonRationalInput { k: 0 }.into());
    };
    let cols: Vec<ColumnInput> = cp
        .init
        .cols
        .iter()
        .enumerate()
        .map(|(k, c)| ColumnInput::Rational(ColumnGF::from_finite(k, c)))
        .collect();
    Ok(assemble(&cp.eq, (d_num, d_den), &cols, &cp.init.row0)?)
}

fn amoeba(
    cli: &Cli,
    problem: &ProblemFile,
    tmin: f64,
    tmax: f64,
    nt: usize,
    nphi: usize,
) -> Result<(), Failure> {
    let eq = problem.equation();
    let am = Amoeba::new(&eq)?;
    let rows = am.boundary_cloud(tmin, tmax, nt, nphi)?;
    let text = match cli.format {
        Format::Csv => cloud_csv(&rows),
        Format::Json => {
            let np = newton_polygon(&eq);
            let cone = cone_omega(&np).ok();
            let census = component_census(&eq)?;
            let smooth = boundary_smoothness_probe(&am, tmin, tmax, nt, nphi)?;
            serde_json::to_string_pretty(&json!({
                "newton_polygon": np,
                "lattice_points": np.lattice_count(),
                "cone": cone,
                "census": census,
                "smoothness_probe": smooth,
                "cloud": rows,
            }))
            .unwrap()
                + "\n"
        }
    };
    emit(cli, &text)
}

struct Route {
    name: &'static str,
    grid: Grid,
}

fn verify(cli: &Cli, problem: &ProblemFile, xmax: usize, ymax: usize) -> Result<(), Failure> {
    let eq = problem.equation();
    let mut routes = Vec::new();
    let mut notes = Vec::new();
    match problem {
        ProblemFile::Riordan(spec) => {
            spec.ensure_valid()?;
            routes.push(Route {
                name: "residue",
                grid: spec.table(xmax, ymax)?,
            });
            let init = riordan_initial_data(spec, xmax, ymax)?;
            routes.push(Route {
                name: "solve",
                grid: solve(&eq, &init, xmax, ymax)?,
            });
            routes.push(Route {
                name: "genfun",
                grid: series_of(&assemble_riordan(spec)?, xmax, ymax)?,
            });
            let probe = correction_is_zero(&eq, spec, ymax.max(1))?;
            notes.push(format!("correction term vanishes: {probe}"));
        }
        ProblemFile::Cauchy(cp) => {
            if let Some(spec) = cp.claimed_spec() {
                spec.ensure_valid()?;
                routes.push(Route {
                    name: "residue",
                    grid: spec.table(xmax, ymax)?,
                });
            }
            let solved = solve(&eq, &cp.init, xmax, ymax)?;
            notes.push(format!(
                "recurrence residual: {}",
                fmt_rational(&residual(&eq, &solved))
            ));
            routes.push(Route {
                name: "solve",
                grid: solved,
            });
            let gf = assemble_from_tables(&eq, &cp.init, xmax, ymax)?;
            routes.push(Route {
                name: "genfun",
                grid: series_of(&gf, xmax, ymax)?,
            });
        }
    }

    let mut ok = notes.iter().all(|n| !n.ends_with("false"));
    let mut checks = Vec::new();
    for pair in routes.windows(2) {
        let mismatch = pair[0].grid.first_mismatch(&pair[1].grid);
        ok &= mismatch.is_none();
        checks.push((format!("{} vs {}", pair[0].name, pair[1].name), mismatch));
    }
    let text = match cli.format {
        Format::Csv => {
            let mut out = format!("window {xmax}x{ymax}\n");
            for (name, mismatch) in &checks {
                match mismatch {
                    None => out.push_str(&format!("{name}: equal\n")),
                    Some((x, y)) => out.push_str(&format!("{name}: first mismatch at ({x},{y})\n")),
                }
            }
            for n in &notes {
                out.push_str(n);
                out.push('\n');
            }
            out.push_str(if ok {
                "verify: ok\n"
            } else {
                "verify: FAILED\n"
            });
            out
        }
        Format::Json => {
            let checks: Vec<_> = checks
                .iter()
                .map(|(name, m)| json!({"check": name, "equal": m.is_none(), "first_mismatch": m}))
                .collect();
            serde_json::to_string_pretty(
                &json!({"ok": ok, "window": [xmax, ymax], "checks": checks, "notes": notes}),
            )
            .unwrap()
                + "\n"
        }
    };
    emit(cli, &text)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
