//! Incomplete gamma, the coverage hypergeometric and adaptive quadrature.

use urbansg::specfun::{gamma, hyp2f1_coverage, integrate, upper_incomplete_gamma, QuadratureSpec};

fn main() -> urbansg::Result<()> {
    println!("Γ(3/4)          = {:.15}", gamma(0.75)?);
    println!("Γ(3/4, 13.8155) = {:.6e}", upper_incomplete_gamma(0.75, 13.8155)?);

    // 2F1(1, 3/4; 7/4; -z) from its series/transform branches and as an integral.
    let spec = QuadratureSpec::default();
    for z in [0.1, 1.0, 99.0, 1e4] {
        let direct = hyp2f1_coverage(0.75, z)?;
        let top: f64 = z.powf(0.75);
        let by_quad = integrate(|s: f64| 1.0 / (1.0 + s.powf(4.0 / 3.0)), 0.0, top, &spec)? / top;
        println!("z = {z:>7}: 2F1 = {direct:.12}  quadrature = {by_quad:.12}");
    }
    Ok(())
}
