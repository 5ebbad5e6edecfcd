use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mofa::engine::DEFAULT_REFERENCE_SAMPLES;
use mofa::{Config, WalkAcceptance, WalkCentre};

#[derive(Parser, Debug)]
#[command(name = "mofa-bench", version, about = "Seeded experiments with the multiobjective firefly algorithm")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one problem for several seeds; write fronts, traces, a pooled front and a summary
    Run(RunArgs),
    /// Write a sampled analytic Pareto front
    Front(FrontArgs),
    /// Run a suite of problems and tabulate the results next to the published values
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Centre {
    Own,
    Best,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Acceptance {
    UnlessDominated,
    Always,
}

/// Optimizer parameters shared by `run` and `bench`.
#[derive(Args, Debug, Clone)]
pub struct Tuning {
    /// Population size n
    #[arg(long, default_value_t = 50)]
    pub pop: usize,
    /// Iterations per run
    #[arg(long, default_value_t = 2500)]
    pub iters: usize,
    /// Seed of the first run; run k uses seed + k
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Initial randomness factor [default: 0.25]
    #[arg(long)]
    pub alpha0: Option<f64>,
    /// Attractiveness at zero distance [default: 1]
    #[arg(long)]
    pub beta0: Option<f64>,
    /// Multiplier on the box-scaled absorption coefficient [default: 1]
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Random-walk step as a fraction of the box width [default: 0.2]
    #[arg(long)]
    pub walk_scale: Option<f64>,
    /// Per-iteration decay of the randomness factor [default: 0.975]
    #[arg(long)]
    pub decay: Option<f64>,
    /// Floor on the decayed randomness factor [default: 0]
    #[arg(long)]
    pub alpha_min: Option<f64>,
    /// Centre of the non-dominated random walk [default: own]
    #[arg(long, value_enum)]
    pub walk_centre: Option<Centre>,
    /// When a random-walk candidate replaces the firefly [default: unless-dominated]
    #[arg(long, value_enum)]
    pub walk_accept: Option<Acceptance>,
    /// Start from the schedule exactly as printed (decay 0.9, walk scale 0.01,
    /// walk around g*, always accept); other flags still override it
    #[arg(long)]
    pub literal: bool,
    /// Archive capacity per run
    #[arg(long, default_value_t = 100)]
    pub archive_max: usize,
}

impl Tuning {
    /// The engine configuration for the first run.
    pub fn config(&self) -> Config {
        let mut c = if self.literal { Config::literal() } else { Config::default() };
        c.population = self.pop;
        c.iterations = self.iters;
        c.seed = self.seed;
        c.archive_capacity = self.archive_max;
        if let Some(v) = self.alpha0 {
            c.alpha0 = v;
        }
        if let Some(v) = self.beta0 {
            c.beta0 = v;
        }
        if let Some(v) = self.gamma {
            c.gamma_base = v;
        }
        if let Some(v) = self.walk_scale {
            c.walk_scale = v;
        }
        if let Some(v) = self.decay {
            c.decay_theta = v;
        }
        if let Some(v) = self.alpha_min {
            c.alpha_min = v;
        }
        if let Some(centre) = self.walk_centre {
            c.walk_centre = match centre {
                Centre::Own => WalkCentre::Own,
                Centre::Best => WalkCentre::Best,
            };
        }
        if let Some(acceptance) = self.walk_accept {
            c.walk_acceptance = match acceptance {
                Acceptance::UnlessDominated => WalkAcceptance::UnlessDominated,
                Acceptance::Always => WalkAcceptance::Always,
            };
        }
        c
    }
}

/// Output options shared by `run` and `bench`.
#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Output directory, created if missing
    #[arg(long, default_value = "results")]
    pub out: PathBuf,
    /// Format of front and trace files; summaries are always JSON
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Record the full convergence trace (the default)
    #[arg(long, overrides_with = "no_trace")]
    pub trace: bool,
    /// Record only the final iteration
    #[arg(long, overrides_with = "trace")]
    pub no_trace: bool,
    /// Reference-front samples for D_g and E_f
    #[arg(long, default_value_t = DEFAULT_REFERENCE_SAMPLES)]
    pub samples: usize,
    /// Write wall-clock seconds into summaries (makes them irreproducible)
    #[arg(long)]
    pub timing: bool,
}

impl Output {
    pub fn trace_enabled(&self) -> bool {
        !self.no_trace
    }
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Problem name: sch, zdt1, zdt2, zdt3, lz, beam or brake
    #[arg(long)]
    pub problem: String,
    /// Independent runs
    #[arg(long, default_value_t = 1)]
    pub runs: usize,
    #[command(flatten)]
    pub tuning: Tuning,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug, Clone)]
pub struct FrontArgs {
    /// Problem with an analytic front: sch, zdt1, zdt2, zdt3 or lz
    #[arg(long)]
    pub problem: String,
    /// Number of front samples
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Output file; standard output when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct BenchArgs {
    /// Comma-separated problem names
    #[arg(long, value_delimiter = ',', default_value = "sch,zdt1,zdt2,zdt3,lz")]
    pub problems: Vec<String>,
    /// Independent runs per problem
    #[arg(long, default_value_t = 11)]
    pub runs: usize,
    #[command(flatten)]
    pub tuning: Tuning,
    #[command(flatten)]
    pub output: Output,
}
