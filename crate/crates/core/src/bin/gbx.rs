//! `gbx verify algebra|group|surface`: runs the property suites and prints
//! one JSON report per suite on stdout, with a readable summary on stderr.
//!
//! Exit status is 0 when every case passed, 1 when any case failed and 2 on
//! a configuration or I/O error.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use gbx_core::mesh::{export_mesh, MeshFormat, MeshGrid};
use gbx_core::surface::required_planes;
use gbx_core::verify::{self, GroupOptions, RunConfig, VerificationReport};
use gbx_core::{CurveKind, Error, HyperquadricKind, PlanarCurve, TensorRule, TensorSurface};

#[derive(Debug, Parser)]
#[command(
    name = "gbx",
    version,
    about = "Property checks for generalized bicomplex numbers and their hyperquadric groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Algebra,
    Group,
    Surface,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Action {
    Verify,
    Mesh,
}

#[derive(Debug, clap::Args)]
#[command(allow_negative_numbers = true)]
struct VerifyArgs {
    suite: Suite,

    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,

    /// Hyperquadric for the group suite (ti, tj, tij). All three when omitted.
    #[arg(long)]
    kind: Option<HyperquadricKind>,
    /// Tensor rule for the surface suite (ti, tj, tij).
    #[arg(long)]
    rule: Option<TensorRule>,
    /// circle, lorentzian-circle, spiral or hyperbolic-spiral. Picked from
    /// the case table when omitted.
    #[arg(long)]
    curve_gamma: Option<CurveKind>,
    #[arg(long)]
    curve_delta: Option<CurveKind>,
    /// Exponential rate of the first curve.
    #[arg(long, default_value_t = 0.0)]
    rate_a: f64,
    /// Exponential rate of the second curve.
    #[arg(long, default_value_t = 0.0)]
    rate_b: f64,
    #[arg(long, value_enum, default_value_t = Action::Verify)]
    action: Action,

    #[arg(long, default_value_t = verify::DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, env = "GBX_SEED", default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = verify::DEFAULT_TOL_REL)]
    tol_rel: f64,
    #[arg(long, default_value_t = verify::DEFAULT_TOL_ABS)]
    tol_abs: f64,

    /// Report file for `verify`, mesh file for `--action mesh`.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 64)]
    mesh_nt: usize,
    #[arg(long, default_value_t = 64)]
    mesh_ns: usize,
    #[arg(long, default_value_t = MeshFormat::Obj)]
    format: MeshFormat,
    #[arg(long, default_value_t = -2.0)]
    t_min: f64,
    #[arg(long, default_value_t = 2.0)]
    t_max: f64,
    #[arg(long, default_value_t = -2.0)]
    s_min: f64,
    #[arg(long, default_value_t = 2.0)]
    s_max: f64,

    /// Also cross-check brackets with finite differences of the fields.
    #[arg(long)]
    fd_brackets: bool,
}

impl VerifyArgs {
    fn config(&self) -> RunConfig {
        RunConfig {
            alpha: self.alpha,
            beta: self.beta,
            seed: self.seed,
            samples: self.samples,
            tol_rel: self.tol_rel,
            tol_abs: self.tol_abs,
            output_path: self.out.clone(),
        }
    }

    fn surface(&self, config: &RunConfig) -> Result<TensorSurface, Error> {
        let params = config.validate()?;
        let rule = self
            .rule
            .ok_or_else(|| Error::InvalidArgument("the surface suite needs --rule".into()))?;
        let (pg, pd) = required_planes(rule, &params)?;
        let curve = |kind: Option<CurveKind>, plane, rate| match kind {
            Some(k) => PlanarCurve::new(k, rate),
            None => PlanarCurve::in_plane(plane, rate),
        };
        TensorSurface::new(
            curve(self.curve_gamma, pg, self.rate_a)?,
            curve(self.curve_delta, pd, self.rate_b)?,
            rule,
            params,
        )
    }
}

fn run(args: &VerifyArgs) -> Result<Vec<VerificationReport>, Error> {
    let config = args.config();
    config.validate()?;
    if args.action == Action::Mesh && args.suite != Suite::Surface {
        return Err(Error::InvalidArgument("--action mesh needs the surface suite".into()));
    }
    match args.suite {
        Suite::Algebra => Ok(vec![verify::algebra_suite(&config)?]),
        Suite::Group => {
            let options = GroupOptions {
                finite_difference_brackets: args.fd_brackets,
            };
            let kinds = args.kind.map_or(HyperquadricKind::ALL.to_vec(), |k| vec![k]);
            kinds
                .into_iter()
                .map(|k| verify::group_suite(&config, k, options))
                .collect()
        }
        Suite::Surface => {
            let surface = args.surface(&config)?;
            match args.action {
                Action::Verify => Ok(vec![verify::surface_suite(&config, &surface)?]),
                Action::Mesh => {
                    let path = args
                        .out
                        .as_deref()
                        .ok_or_else(|| Error::InvalidArgument("--action mesh needs --out".into()))?;
                    let grid = MeshGrid::new(
                        (args.t_min, args.t_max),
                        (args.s_min, args.s_max),
                        args.mesh_nt,
                        args.mesh_ns,
                    )?;
                    let samples = export_mesh(&surface, &grid, args.format, path)?;
                    Ok(vec![verify::mesh_report(&config, &surface, &samples)])
                }
            }
        }
    }
}

fn write_reports(path: &PathBuf, reports: &[VerificationReport]) -> Result<(), Error> {
    let body: String = reports.iter().map(|r| r.to_json_line() + "\n").collect();
    fs::write(path, body).map_err(|source| Error::Io {
        path: path.clone(),
        source,
    })
}

fn main() -> ExitCode {
    let Command::Verify(args) = Cli::parse().command;
    let reports = match run(&args) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}\n");
            let mut cmd = Cli::command();
            cmd.build();
            if let Some(verify) = cmd.find_subcommand_mut("verify") {
                eprintln!("{}", verify.render_usage());
            }
            return ExitCode::from(2);
        }
    };

    let mut stdout = std::io::stdout().lock();
    for r in &reports {
        let _ = writeln!(stdout, "{}", r.to_json_line());
        eprint!("{}", r.summary());
    }
    if let (Action::Verify, Some(path)) = (args.action, &args.out) {
        if let Err(e) = write_reports(path, &reports) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }

    if reports.iter().all(VerificationReport::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
