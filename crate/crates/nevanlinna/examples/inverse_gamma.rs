//! Inverse branches of Γ on the upper half-plane.

use num_complex::Complex64;
use nevanlinna::invgamma::{branch_inverse_g_k, extremal_points, invert_log_gamma};
use nevanlinna::special::log_gamma_principal;

fn main() -> nevanlinna::Result<()> {
    for p in extremal_points(4)?.entries {
        println!("x_{} = {:+.12}  log|Γ| = {:+.10}  |ψ| = {:.1e}", p.k, p.x, p.log_abs_gamma, p.residual);
    }
    let w = invert_log_gamma(Complex64::new(24.0f64.ln(), 0.0), None)?;
    println!("log Γ(w) = log 24 at w = {w:.12}");

    let z = Complex64::new(-1.0, 2.0);
    for k in 0..4 {
        let w = branch_inverse_g_k(k, z)?;
        println!("g_{k}({z}) = {w:.10}, Γ(g_{k}) = {:.10}", log_gamma_principal(w)?.exp());
    }
    Ok(())
}
