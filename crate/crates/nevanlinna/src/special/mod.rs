//! Special functions on the real line and the cut plane ℂ∖(−∞, 0].
//!
//! | Function | Description |
//! |----------|-------------|
//! | [`log_gamma_principal`] | holomorphic log Γ, real on (0, ∞) |
//! | [`gamma`] | Γ(x) on the real line |
//! | [`polygamma`] | ψ^{(m)}(z) |
//! | [`hurwitz_zeta`] | ζ(s, x), real s |
//! | [`barnes_g`] | Barnes G |
//! | [`multiple_zeta`] | ζ_N(z, w), z > N |
//! | [`log_multiple_gamma`] | log Γ_N(w), N ≤ 3 |
//! | [`incomplete_gamma`], [`incomplete_beta`] | lower incomplete integrals |

mod barnes;
mod gamma;
mod incomplete;
mod zeta;

pub use barnes::{
    barnes_g, clausen2, default_truncation, ln_abs_barnes_g1_real, ln_barnes_g1_real, log_barnes_g, log_barnes_g1,
    log_barnes_g1_with, ZETA_PRIME_MINUS_ONE,
};
pub use gamma::{
    digamma, gamma, ln_abs_gamma, ln_gamma, log_gamma_principal, polygamma, polygamma_real,
    psi_integral_representation, ComplexPoint, Constants, CONSTANTS, EULER_GAMMA, LOG_SQRT_TWO_PI,
};
pub use incomplete::{hyp2f1_special, incomplete_beta, incomplete_gamma, lerch_phi, lerch_phi_scaled};
pub use zeta::{hurwitz_zeta, hurwitz_zeta_ds, lerch_theorem_residual, multiple_zeta};

use crate::error::{Error, Result};

/// log Γ_N(w) from the expansion terms plus the remainder integral R_{N,m}.
pub fn log_multiple_gamma(n: usize, w: f64, m: usize) -> Result<f64> {
    if !(1..=3).contains(&n) {
        return Err(Error::Domain(format!("log_multiple_gamma supports N = 1..3, got {n}")));
    }
    Ok(crate::asymptotics::expansion_terms(n, m, w)? + crate::asymptotics::remainder_rnm(n, m, w)?)
}
