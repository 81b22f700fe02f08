//! Regenerates a builtin figure and prints the first rows of its CSV.
//!
//! `cargo run --example figure_csv -- mmp-compare`

use urbansg::figures;
use urbansg::scenario::run_scenario;

fn main() -> urbansg::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "ppp-compare".to_string());
    let mut cfg = figures::config(&name)?;
    cfg.simulation.trials = cfg.simulation.trials.min(200);
    let out = run_scenario(&cfg)?;
    for line in out.csv.lines().take(12) {
        println!("{line}");
    }
    println!("... {} rows", out.csv.lines().count() - 1);
    println!("available: {}", figures::names().collect::<Vec<_>>().join(", "));
    Ok(())
}
