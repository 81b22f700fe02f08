//! Simulated CSMA coverage for low-power radios against the 2D and 3D models.

use urbansg::mmp;
use urbansg::sim::{estimate_csma_curve, DeploymentBox};
use urbansg::{ChannelParams, Dimension, RadioParams};

fn main() -> urbansg::Result<()> {
    let ch = ChannelParams::new(4.0, 1.0)?;
    let r = RadioParams::low_power();
    let lambda = 1.51e-2;
    let z = 50.0;
    let window = DeploymentBox::new(200.0, 200.0, z)?;
    let r_ios = [2.0, 5.0, 10.0, 15.0];
    let est = estimate_csma_curve(&window, lambda / z, &r, &ch, &r_ios, 300, 42)?;
    for (e, &r_io) in est.iter().zip(&r_ios) {
        println!(
            "r_io = {r_io:>4}: sim {:.3} ± {:.3}  2D {:.3}  3D {:.3}",
            e.p_hat,
            e.ci_high - e.p_hat,
            mmp::coverage_csma(lambda, &r, &ch, r_io, Dimension::Two)?,
            mmp::coverage_csma(lambda / z, &r, &ch, r_io, Dimension::Three)?
        );
    }
    if est[0].resampled > 0 {
        println!("{} empty realizations were redrawn", est[0].resampled);
    }
    Ok(())
}
