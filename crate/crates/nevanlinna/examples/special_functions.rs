//! Gamma-type special functions on the real line and in the upper half-plane.

use num_complex::Complex64;
use nevanlinna::special::{barnes_g, digamma, gamma, hurwitz_zeta, lerch_theorem_residual, log_gamma_principal, log_multiple_gamma};

fn main() -> nevanlinna::Result<()> {
    println!("Γ(1/2)^2 = {:.15} (π = {:.15})", gamma(0.5)?.powi(2), std::f64::consts::PI);
    println!("ψ(1) = {:.15}", digamma(1.0)?);
    for z in [Complex64::new(-2.5, 0.1), Complex64::new(0.5, 3.0), Complex64::new(20.0, 20.0)] {
        println!("log Γ({z}) = {:.12}", log_gamma_principal(z)?);
    }
    println!("G(4) = {:.12}", barnes_g(Complex64::new(4.0, 0.0))?.re);
    println!("ζ(2, 1) = {:.15}", hurwitz_zeta(2.0, 1.0)?);
    println!("Lerch residual at x = 2: {:.2e}", lerch_theorem_residual(2.0, 1e-4)?);
    for n in 1..=3 {
        println!("log Γ_{n}(2.5) = {:.12}", log_multiple_gamma(n, 2.5, n + 2)?);
    }
    Ok(())
}
