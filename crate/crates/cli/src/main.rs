//! `octobohr`: radii tables, verification sweeps and sharpness scans.
//!
//! Exit codes: 0 on success, 1 on a solver failure or a verification
//! violation, 2 on a bad flag or violated precondition.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use octobohr::verification::DEFAULT_P_LIST;
use octobohr::Inequality;
use octobohr_cli::{
    cmd_radii, cmd_sharpness, cmd_verify, write_output, CliError, Format, RadiiConfig,
    SharpnessConfig, VerifyConfig, DEFAULT_BETAS, DEFAULT_GAMMA_M,
};

#[derive(Parser)]
#[command(
    name = "octobohr",
    version,
    about = "Bohr radii of octonionic slice-regular operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write here (atomically) instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cesaro,
    Bernardi,
    Fourier,
    Laplace,
}

#[derive(Args)]
struct KindArgs {
    kind: Kind,
    /// Cesàro parameter.
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// Bernardi parameter.
    #[arg(long, default_value_t = 1.0)]
    gamma: f64,
    /// Bernardi vanishing order.
    #[arg(long, default_value_t = 0)]
    m: usize,
}

impl KindArgs {
    fn inequality(&self) -> Inequality {
        match self.kind {
            Kind::Cesaro => Inequality::Cesaro { beta: self.beta },
            Kind::Bernardi => Inequality::Bernardi {
                gamma: self.gamma,
                m: self.m,
            },
            Kind::Fourier => Inequality::Fourier,
            Kind::Laplace => Inequality::Laplace,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Table of all radii.
    Radii {
        /// Cesàro parameters, comma separated.
        #[arg(long, value_delimiter = ',')]
        beta: Vec<f64>,
        /// Bernardi γ values, paired with --m.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        gamma: Vec<f64>,
        /// Bernardi m values; a single value applies to every γ.
        #[arg(long, value_delimiter = ',')]
        m: Vec<usize>,
        #[arg(long, default_value_t = octobohr::numerics::DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sweep admissible series inside the claimed radius.
    Verify {
        #[command(flatten)]
        kind: KindArgs,
        /// Explicit radii, comma separated; overrides --rmax/--grid-steps.
        #[arg(long, value_delimiter = ',')]
        r: Vec<f64>,
        #[arg(long)]
        rmax: Option<f64>,
        #[arg(long, default_value_t = 10)]
        grid_steps: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, env = "OCTOBOHR_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = octobohr::series::DEFAULT_ORDER)]
        order: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate the extremal family just outside the radius.
    Sharpness {
        #[command(flatten)]
        kind: KindArgs,
        /// Test radius; defaults to the claimed radius plus 0.02.
        #[arg(long)]
        r: Option<f64>,
        #[arg(long, value_delimiter = ',')]
        p: Vec<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn gamma_m_pairs(gamma: Vec<f64>, m: Vec<usize>) -> Result<Vec<(f64, usize)>, CliError> {
    if gamma.is_empty() && m.is_empty() {
        return Ok(DEFAULT_GAMMA_M.to_vec());
    }
    match m.len() {
        0 => Ok(gamma.into_iter().map(|g| (g, 0)).collect()),
        1 => Ok(gamma.into_iter().map(|g| (g, m[0])).collect()),
        n if n == gamma.len() => Ok(gamma.into_iter().zip(m).collect()),
        n => Err(CliError::Usage(format!(
            "--m has {n} values but --gamma has {}",
            gamma.len()
        ))),
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let (out, output) = match cli.command {
        Command::Radii {
            beta,
            gamma,
            m,
            tol,
            output,
        } => {
            let cfg = RadiiConfig {
                betas: if beta.is_empty() {
                    DEFAULT_BETAS.to_vec()
                } else {
                    beta
                },
                gamma_m: gamma_m_pairs(gamma, m)?,
                tol,
            };
            (cmd_radii(&cfg, output.format)?, output)
        }
        Command::Verify {
            kind,
            r,
            rmax,
            grid_steps,
            samples,
            seed,
            order,
            output,
        } => {
            let cfg = VerifyConfig {
                inequality: kind.inequality(),
                r_list: r,
                rmax,
                grid_steps,
                samples,
                seed,
                order,
            };
            (cmd_verify(&cfg, output.format)?, output)
        }
        Command::Sharpness { kind, r, p, output } => {
            let cfg = SharpnessConfig {
                inequality: kind.inequality(),
                r,
                p_list: if p.is_empty() {
                    DEFAULT_P_LIST.to_vec()
                } else {
                    p
                },
            };
            (cmd_sharpness(&cfg, output.format)?, output)
        }
    };
    write_output(&out.text, output.out.as_deref())?;
    Ok(out.failed)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("octobohr: some rows failed or violations were found");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("octobohr: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
