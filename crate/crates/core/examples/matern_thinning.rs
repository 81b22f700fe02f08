//! Contention winners of a dense deployment: simulated retention vs. the model.

use urbansg::mmp;
use urbansg::sim::{interior_retention, matern_mask, sample_ppp_with, trial_rng, DeploymentBox};
use urbansg::{ChannelParams, Dimension, RadioParams};

fn main() -> urbansg::Result<()> {
    let ch = ChannelParams::new(4.0, 1.0)?;
    let r = RadioParams::low_power();
    let rd = mmp::detection_radius(&r, &ch);
    let pd = mmp::prob_detect(&r, &ch, rd, Dimension::Three)?;
    let window = DeploymentBox::cube(4.0 * rd)?;
    println!("r_d = {rd:.1} m, box side {:.1} m", 4.0 * rd);

    for rho in [1e-6, 1e-5, 1e-4] {
        let (mut kept, mut total) = (0, 0);
        for i in 0..400 {
            let mut rng = trial_rng(3, i);
            let pts = sample_ppp_with(&window, rho, &mut rng)?;
            let (_, keep) = matern_mask(&pts, &r, &ch, &mut rng)?;
            // only points whose whole contention ball lies inside the box
            let (k, t) = interior_retention(&pts, &keep, &window, rd);
            kept += k;
            total += t;
        }
        let (p_csma, _) = mmp::mmp_intensity(rho, rd, pd, Dimension::Three)?;
        println!(
            "rho = {rho:e}: retained {:.4} (model {p_csma:.4})",
            kept as f64 / total as f64
        );
    }
    Ok(())
}
