//! Every intermediate quantity of the CSMA coverage model at one operating point.

use urbansg::mmp;
use urbansg::{ChannelParams, Dimension, RadioParams};

fn main() -> urbansg::Result<()> {
    let ch = ChannelParams::new(4.0, 1.0)?;
    for (name, radio, dim, rho) in [
        ("wifi 3D", RadioParams::wifi(), Dimension::Three, 7.56e-4),
        ("wifi 2D", RadioParams::wifi(), Dimension::Two, 1.51e-2),
        ("low-power 3D", RadioParams::low_power(), Dimension::Three, 7.55e-5),
    ] {
        let d = mmp::derive(rho, &radio, &ch, 50.0, dim)?;
        println!("{name} at r_io = 50 m");
        println!("  r_d = {:.3} m, P_d = {:.6}", d.r_d, d.p_d);
        println!("  P_csma = {:.4e}, rho_csma = {:.4e}", d.p_csma, d.rho_csma);
        println!("  r_v = {:.3} m, K_csma = {:.4}", d.r_v, d.k_csma);
        println!("  P_d' = {:.6}, P_beta = {:.6}", d.p_d_prime, d.p_beta);
        println!("  coverage = {:.6}", d.coverage);
    }

    let r = RadioParams::wifi();
    let rd = mmp::detection_radius(&r, &ch);
    let pd = mmp::prob_detect(&r, &ch, rd, Dimension::Three)?;
    println!(
        "saturation intensity (3D): {:.4e}",
        mmp::saturation_intensity(rd, pd, Dimension::Three)
    );
    Ok(())
}
