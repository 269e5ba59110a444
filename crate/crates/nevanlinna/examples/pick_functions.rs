//! Sampled Pick verification, boundary densities and the Löwner test.

use num_complex::Complex64;
use nevanlinna::halfplane::{
    boundary_density, log_gamma_ratio, log_gamma_ratio_density, lowner_psd, scaled_ladder, verify_pick, HalfPlaneGrid,
};

fn main() -> nevanlinna::Result<()> {
    let grid = HalfPlaneGrid::default();
    println!("{}", verify_pick("log Γ(z+1)/(z log z)", &log_gamma_ratio, &grid, 1e-9)?);
    println!("{}", verify_pick("z^2", &|z: Complex64| Ok(z * z), &grid, 1e-9)?);

    let integers: Vec<f64> = (0..=12).map(|k| -(k as f64)).collect();
    for s in [0.5, 1.5, 2.7] {
        let d = boundary_density(&log_gamma_ratio, -s, &scaled_ladder(-s, &integers)?)?;
        println!("density at -{s}: extracted {:.8}, closed form {:.8}", d.value, log_gamma_ratio_density(s)?);
    }

    let pts = [0.3, 0.9, 1.7, 2.6, 4.0, 7.5];
    println!("{}", lowner_psd("log", &|x: f64| x.ln(), &|x: f64| 1.0 / x, &pts, 1e-12)?);
    println!("{}", lowner_psd("x^2", &|x: f64| x * x, &|x: f64| 2.0 * x, &pts, 1e-12)?);
    Ok(())
}
