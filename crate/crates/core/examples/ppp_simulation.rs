//! Monte Carlo PPP coverage in a 200 m x 200 m x Z box against the model.

use urbansg::ppp::{self, PppParams};
use urbansg::sim::{estimate_ppp_curve, DeploymentBox};
use urbansg::{ChannelParams, Dimension};

fn main() -> urbansg::Result<()> {
    let ch = ChannelParams::new(4.0, 1.0)?;
    let lambda = 1.51e-2;
    let ds: Vec<f64> = (1..=8).map(f64::from).collect();
    for z in [10.0, 100.0] {
        let rho = lambda / z;
        let window = DeploymentBox::new(200.0, 200.0, z)?;
        let est = estimate_ppp_curve(&window, rho, &ch, 10.0, &ds, 2000, 1)?;
        let model = PppParams::new(Dimension::Three, rho)?;
        println!("Z = {z} m");
        for (e, &d) in est.iter().zip(&ds) {
            println!(
                "  d = {d}: sim {:.3} [{:.3}, {:.3}]  model {:.3}",
                e.p_hat,
                e.ci_low,
                e.ci_high,
                ppp::coverage_ppp(&model, &ch, 10.0, d)?
            );
        }
    }
    Ok(())
}
