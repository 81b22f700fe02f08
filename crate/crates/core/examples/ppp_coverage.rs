//! Analytic PPP coverage in 2D and 3D, with and without ALOHA.

use urbansg::ppp::{self, PppParams};
use urbansg::{ChannelParams, Dimension};

fn main() -> urbansg::Result<()> {
    let ch = ChannelParams::new(4.0, 1.0)?;
    let lambda = 1.51e-2;
    let plane = PppParams::new(Dimension::Two, lambda)?;
    println!("{:>5} {:>8} {:>8} {:>8} {:>8}", "d", "2D", "Z=10", "Z=50", "Z=100");
    for d in [1.0, 2.0, 4.0, 6.0, 8.0] {
        let mut row = format!("{d:>5} {:>8.4}", ppp::coverage_ppp(&plane, &ch, 10.0, d)?);
        for z in [10.0, 50.0, 100.0] {
            let rho = ppp::intensity_from_projection(lambda, z)?;
            let p = PppParams::new(Dimension::Three, rho)?;
            row += &format!(" {:>8.4}", ppp::coverage_ppp(&p, &ch, 10.0, d)?);
        }
        println!("{row}");
    }

    let aloha = PppParams::with_aloha(Dimension::Three, 7.56e-4, 0.2)?;
    println!("ALOHA p=0.2, d=5: {:.4}", ppp::coverage_ppp(&aloha, &ch, 10.0, 5.0)?);

    let ch35 = ChannelParams::new(3.5, 1.0)?;
    let p = PppParams::new(Dimension::Three, 7.56e-4)?;
    println!("alpha=3.5,  d=2: {:.4}", ppp::coverage_ppp(&p, &ch35, 10.0, 2.0)?);
    Ok(())
}
