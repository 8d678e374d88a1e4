//! Command-line front end for `discord-core`.
//!
//! ```text
//! discord-kit compute  --r 0,0,0 --s 0.1,0.2,0.2 --c 0.3,0.3,0.3
//! discord-kit curve    --state example.json --samples 100
//! discord-kit damp     --c 0.25,0.25,0.25 --grid 0:1:0.1
//! discord-kit verify   --families theorem1,theorem3 --draws 100 --seed 0
//! discord-kit spectrum --r 0.1,0.2,0 --c 0.3,0.3,0
//! ```
//!
//! Exit codes: 0 success, 1 unphysical state, 2 usage or parse error,
//! 3 verification failure. `DISCORD_KIT_THREADS` caps the worker pool
//! (0 or unset: one per core).

// `!(x > 0.0)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod error;
pub mod report;
pub mod sampling;
pub mod spec;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::commands::{Format, RunConfig, VERIFY_FAMILIES};
use crate::error::{CliError, Result};
use crate::spec::StateSpec;

#[derive(Debug, Parser)]
#[command(name = "discord-kit", version, about = "Quantum discord of Bloch-parametrized two-qubit states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    /// Bloch vector of party a, as x,y,z
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    /// Bloch vector of party b, as x,y,z
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// Diagonal correlations c1,c2,c3
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    /// JSON object with keys r, s, c, label; flags override its fields
    #[arg(long)]
    pub state: Option<PathBuf>,
    #[arg(long)]
    pub label: Option<String>,
}

impl StateArgs {
    pub fn resolve(&self) -> Result<StateSpec> {
        StateSpec::resolve(
            self.state.as_deref(),
            self.r.as_deref(),
            self.s.as_deref(),
            self.c.as_deref(),
            self.label.as_deref(),
        )
    }
}

#[derive(Debug, Args)]
pub struct OptArgs {
    /// Coarse lattice size of the sphere optimizer
    #[arg(long)]
    pub grid_points: Option<usize>,
    /// Local refinement rounds of the sphere optimizer
    #[arg(long)]
    pub refine_rounds: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mutual information, classical correlation and discord of one state
    Compute {
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        opt: OptArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The objective G against theta = |r + c z|^2, as `theta,G` CSV
    Curve {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Damped discord over a grid of decoherence rates, as `gamma,Q_damped,Q_gap` CSV
    Damp {
        #[command(flatten)]
        state: StateArgs,
        /// start:stop:step within [0, 1]
        #[arg(long, default_value = "0:1:0.1")]
        grid: String,
        #[command(flatten)]
        opt: OptArgs,
    },
    /// Compare closed forms with the numeric optimizer on seeded random draws
    Verify {
        /// Comma-separated family tags; all by default
        #[arg(long, value_delimiter = ',')]
        families: Vec<String>,
        #[arg(long, default_value_t = 100)]
        draws: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
        #[command(flatten)]
        opt: OptArgs,
    },
    /// Eigenvalues and eigenvectors of the density matrix
    Spectrum {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

/// What the process should print and return.
#[derive(Debug, Default, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn failure(e: &CliError) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let ok = |stdout| Ok(Outcome { stdout, ..Outcome::default() });
    match &cli.command {
        Command::Compute { state, opt, format } => {
            let cfg = RunConfig::new(opt.grid_points, opt.refine_rounds, *format)?;
            ok(commands::compute(&state.resolve()?, &cfg)?)
        }
        Command::Curve { state, samples } => ok(commands::curve(&state.resolve()?, *samples)?),
        Command::Damp { state, grid, opt } => {
            let cfg = RunConfig::new(opt.grid_points, opt.refine_rounds, Format::Csv)?;
            let grid = commands::parse_grid(grid)?;
            ok(commands::damp(&state.resolve()?, &grid, &cfg)?)
        }
        Command::Verify { families, draws, seed, tolerance, opt } => {
            let cfg = RunConfig::new(opt.grid_points, opt.refine_rounds, Format::Csv)?;
            let families = if families.is_empty() {
                VERIFY_FAMILIES.to_vec()
            } else {
                families.iter().map(|f| commands::parse_family(f.trim())).collect::<Result<_>>()?
            };
            let v = commands::verify(&families, *draws, *seed, *tolerance, &cfg)?;
            let mut stderr = String::new();
            if families.contains(&discord_core::Method::Theorem2Formula) {
                stderr.push_str(
                    "note: theorem2-formula is an expected failure; on the product state r = 0, s = (0, 0, 0.5), \
                     c = 0 it gives 1 while the discord is 0\n",
                );
            }
            let failed = v.failed();
            if failed.is_empty() {
                Ok(Outcome { stdout: v.render(), stderr, code: 0 })
            } else {
                let names: Vec<&str> = failed.iter().map(|m| m.tag()).collect();
                let e = CliError::Verification(names.join(", "));
                stderr.push_str(&format!("error: {e}\n"));
                Ok(Outcome { stdout: v.render(), stderr, code: e.exit_code() })
            }
        }
        Command::Spectrum { state, format } => ok(commands::spectrum(&state.resolve()?, *format)?),
    }
}

/// Size of the worker pool from `DISCORD_KIT_THREADS` (0 = one per core).
pub fn thread_count(var: Option<OsString>) -> Result<usize> {
    match var {
        None => Ok(0),
        Some(v) => v
            .to_str()
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| CliError::Parse(format!("DISCORD_KIT_THREADS={v:?} is not a non-negative integer"))),
    }
}

/// Parses `args` and runs the command on a pool sized by `threads`.
pub fn run<I, T>(args: I, threads: Option<OsString>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: 2 }
            } else {
                Outcome { stdout: text, stderr: String::new(), code: 0 }
            };
        }
    };
    let pool = thread_count(threads).and_then(|n| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Parse(format!("cannot start worker pool: {e}")))
    });
    match pool {
        Ok(pool) => pool.install(|| execute(&cli)).unwrap_or_else(|e| Outcome::failure(&e)),
        Err(e) => Outcome::failure(&e),
    }
}
