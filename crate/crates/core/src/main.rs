use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use nhwalk::cli::{emit, read_config_file, run_experiment, RunConfig};
use nhwalk::{sweep, Error};

/// Discrete-time quantum walks with non-Hermitian coins.
#[derive(Debug, Parser)]
#[command(name = "nhwalk", version, about)]
struct Args {
    /// Flat `key = value` run file; flags given here override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// fig1, fig2, fig3, fig4, fig5, table1, fig6 or custom.
    #[arg(long)]
    experiment: Option<String>,
    /// Number of walk steps.
    #[arg(long)]
    steps: Option<String>,
    /// Hermitian coin parameter in [0, 1].
    #[arg(long)]
    alpha: Option<String>,
    /// Diagonal entry of the leaking coin.
    #[arg(long)]
    alpha1: Option<String>,
    /// Off-diagonal entry of the leaking coin.
    #[arg(long)]
    alpha2: Option<String>,
    /// Tunneling energy V.
    #[arg(long)]
    v: Option<String>,
    /// Dissipation rate lambda of the second dimer site.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Comma-separated list of dissipation rates.
    #[arg(long, allow_hyphen_values = true)]
    lambdas: Option<String>,
    /// Dwell time tau spent on each step.
    #[arg(long)]
    tau: Option<String>,
    /// Comma-separated list of time steps.
    #[arg(long)]
    taus: Option<String>,
    /// Reference dwell time of the non-Markovianity witness.
    #[arg(long)]
    tau_prime: Option<String>,
    /// conditional or generalized.
    #[arg(long)]
    shift: Option<String>,
    /// localized or symmetric.
    #[arg(long)]
    initial: Option<String>,
    /// distribution, entropy or norm (custom experiment only).
    #[arg(long)]
    observable: Option<String>,
    /// Sweep axis `name:start:stop:count`; repeatable.
    #[arg(long, allow_hyphen_values = true)]
    axis: Vec<String>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<String>,
    /// csv or json.
    #[arg(long)]
    format: Option<String>,
}

impl Args {
    fn flag_settings(&self) -> Vec<(&'static str, String)> {
        let single = [
            ("experiment", &self.experiment),
            ("steps", &self.steps),
            ("alpha", &self.alpha),
            ("alpha1", &self.alpha1),
            ("alpha2", &self.alpha2),
            ("v", &self.v),
            ("lambda", &self.lambda),
            ("lambdas", &self.lambdas),
            ("tau", &self.tau),
            ("taus", &self.taus),
            ("tau_prime", &self.tau_prime),
            ("shift", &self.shift),
            ("initial", &self.initial),
            ("observable", &self.observable),
            ("out", &self.out),
            ("format", &self.format),
        ];
        let mut out: Vec<(&'static str, String)> = single
            .into_iter()
            .filter_map(|(k, v)| v.clone().map(|v| (k, v)))
            .collect();
        out.extend(self.axis.iter().map(|a| ("axis", a.clone())));
        out
    }
}

fn build_config(args: &Args) -> Result<RunConfig, Error> {
    let file = match &args.config {
        Some(path) => read_config_file(path)?,
        None => Vec::new(),
    };
    let flags = args.flag_settings();
    let settings = file
        .iter()
        .map(|(k, v, line)| (k.as_str(), v.as_str(), Some(*line)))
        .chain(flags.iter().map(|(k, v)| (*k, v.as_str(), None)));
    RunConfig::from_settings(settings)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    if let Ok(n) = std::env::var("NHWALK_THREADS") {
        match n.trim().parse::<usize>() {
            Ok(n) => {
                if let Err(e) = sweep::configure_threads(n) {
                    eprintln!("error: cannot configure thread pool: {e}");
                    return ExitCode::from(2);
                }
            }
            Err(_) => {
                eprintln!("error: NHWALK_THREADS must be a non-negative integer, got `{n}`");
                return ExitCode::from(1);
            }
        }
    }

    let cfg = match build_config(&args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(1);
        }
    };

    let result = run_experiment(&cfg).and_then(|r| emit(&r, cfg.out.as_deref(), cfg.format));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is_config() => {
            eprintln!("config error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
