use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use urbansg::scenario::{run_scenario, ScenarioConfig};
use urbansg::{calc, figures, selftest, ChannelParams, Dimension, RadioParams};

#[derive(Parser)]
#[command(
    name = "urbansg",
    version,
    about = "Coverage probability for 2D/3D PPP and CSMA interference"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Regenerate a builtin figure as CSV.
    Figure {
        name: Option<String>,
        /// List builtin figure names.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Run an experiment config file.
    Run {
        config: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Print one value with 9 significant digits.
    Calc {
        #[command(subcommand)]
        which: CalcCommand,
    },
    /// Run the oracle-equivalence checks.
    Selftest,
}

#[derive(Args)]
struct Overrides {
    /// CSV destination; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long, env = "URBANSG_SEED")]
    seed: Option<u64>,
}

#[derive(Args)]
struct ChannelArgs {
    #[arg(long, default_value_t = 4.0)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    mu: f64,
}

impl ChannelArgs {
    fn params(&self) -> urbansg::Result<ChannelParams> {
        ChannelParams::new(self.alpha, self.mu)
    }
}

#[derive(Args)]
struct RadioArgs {
    #[arg(long = "pt-mw", default_value_t = 100.0)]
    pt_mw: f64,
    #[arg(long = "td-dbm", conflicts_with = "td_mw", allow_negative_numbers = true)]
    td_dbm: Option<f64>,
    #[arg(long = "td-mw")]
    td_mw: Option<f64>,
    #[arg(long, default_value_t = 10.0)]
    beta: f64,
    #[arg(long = "eps-d", default_value_t = 1e-6)]
    eps_d: f64,
    #[arg(long = "eps-v", default_value_t = 1e-2)]
    eps_v: f64,
}

impl RadioArgs {
    fn params(&self) -> urbansg::Result<RadioParams> {
        let t_d = match (self.td_dbm, self.td_mw) {
            (Some(dbm), _) => urbansg::dbm_to_mw(dbm),
            (None, Some(mw)) => mw,
            (None, None) => RadioParams::wifi().t_d,
        };
        RadioParams::new(self.pt_mw, t_d, self.beta, self.eps_d, self.eps_v)
    }
}

fn parse_dim(s: &str) -> Result<Dimension, String> {
    let d: u32 = s.parse().map_err(|_| format!("`{s}` is not 2 or 3"))?;
    Dimension::try_from(d).map_err(|e| e.to_string())
}

#[derive(Args)]
struct Intensity {
    #[arg(long, value_parser = parse_dim)]
    dim: Dimension,
    /// Intensity in nodes/m^D (use the planar intensity in 2D).
    #[arg(long, alias = "lambda")]
    rho: f64,
}

#[derive(Subcommand)]
enum CalcCommand {
    /// PPP coverage probability.
    Ppp {
        #[command(flatten)]
        intensity: Intensity,
        #[arg(long, default_value_t = 10.0)]
        beta: f64,
        #[arg(long)]
        d: f64,
        #[arg(long = "aloha-p", default_value_t = 1.0)]
        aloha_p: f64,
        #[command(flatten)]
        channel: ChannelArgs,
    },
    /// CSMA (modified Matérn) coverage probability.
    Mmp {
        #[command(flatten)]
        intensity: Intensity,
        #[arg(long)]
        rio: f64,
        #[command(flatten)]
        radio: RadioArgs,
        #[command(flatten)]
        channel: ChannelArgs,
    },
    /// Detection radius (m).
    Rd {
        #[command(flatten)]
        radio: RadioArgs,
        #[command(flatten)]
        channel: ChannelArgs,
    },
    /// Vulnerability radius (m).
    Rv {
        #[arg(long)]
        rio: f64,
        #[arg(long, default_value_t = 10.0)]
        beta: f64,
        #[arg(long = "eps-v", default_value_t = 1e-2)]
        eps_v: f64,
        #[arg(long, default_value_t = 4.0)]
        alpha: f64,
    },
    /// Intensity of transmitting nodes.
    RhoCsma {
        #[command(flatten)]
        intensity: Intensity,
        #[command(flatten)]
        radio: RadioArgs,
        #[command(flatten)]
        channel: ChannelArgs,
    },
}

fn calc_value(which: &CalcCommand) -> urbansg::Result<f64> {
    match which {
        CalcCommand::Ppp {
            intensity,
            beta,
            d,
            aloha_p,
            channel,
        } => calc::ppp(intensity.dim, intensity.rho, *aloha_p, &channel.params()?, *beta, *d),
        CalcCommand::Mmp {
            intensity,
            rio,
            radio,
            channel,
        } => calc::mmp(intensity.dim, intensity.rho, &radio.params()?, &channel.params()?, *rio),
        CalcCommand::Rd { radio, channel } => Ok(calc::rd(&radio.params()?, &channel.params()?)),
        CalcCommand::Rv {
            rio,
            beta,
            eps_v,
            alpha,
        } => calc::rv(*rio, *beta, *eps_v, *alpha),
        CalcCommand::RhoCsma {
            intensity,
            radio,
            channel,
        } => calc::rho_csma(intensity.dim, intensity.rho, &radio.params()?, &channel.params()?),
    }
}

fn run_config(mut cfg: ScenarioConfig, o: &Overrides) -> urbansg::Result<()> {
    if let Some(t) = o.trials {
        cfg.simulation.trials = t;
    }
    if let Some(s) = o.seed {
        cfg.simulation.seed = s;
    }
    if let Some(p) = &o.out {
        cfg.output.path = Some(p.clone());
    }
    cfg.validate()?;
    let out = run_scenario(&cfg)?;
    for d in &out.diagnostics {
        eprintln!("note: {d}");
    }
    match &cfg.output.path {
        Some(p) => std::fs::write(p, out.csv).map_err(|e| urbansg::Error::Io(format!("{}: {e}", p.display())))?,
        None => print!("{}", out.csv),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Figure { list: true, .. } => {
            for n in figures::names() {
                println!("{n}");
            }
            Ok(())
        }
        Command::Figure {
            name: Some(name),
            overrides,
            ..
        } => figures::config(&name).and_then(|cfg| run_config(cfg, &overrides)),
        Command::Figure { name: None, .. } => {
            eprintln!("error: give a figure name or --list");
            return ExitCode::from(2);
        }
        Command::Run { config, overrides } => {
            ScenarioConfig::from_path(&config).and_then(|cfg| run_config(cfg, &overrides))
        }
        Command::Calc { which } => calc_value(&which).map(|v| println!("{}", calc::format_sig9(v))),
        Command::Selftest => {
            let start = Instant::now();
            let checks = selftest::run();
            let mut failed = 0;
            for c in &checks {
                println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
                failed += !c.passed as usize;
            }
            println!(
                "{} of {} checks passed in {:.1} s",
                checks.len() - failed,
                checks.len(),
                start.elapsed().as_secs_f64()
            );
            if failed > 0 {
                return ExitCode::FAILURE;
            }
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
