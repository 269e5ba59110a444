//! Multiple Bernoulli polynomials and the expansion of log Γ_N with its exact remainder.
//!
//! log Γ_N(w) = [`expansion_terms`] + [`remainder_rnm`], where the remainder is
//! ∫_0^∞ e^{−wt} t^{−N−1}(f(t) − T_m(t)) dt with f(t) = (t/(1 − e^{−t}))^N.

pub mod bernoulli;
mod binet;
mod expansion;
mod nu;
mod positivity;

pub use bernoulli::{multiple_bernoulli, multiple_bernoulli_exact, BernoulliTable};
pub use binet::{binet_mu, binet_mu_direct, remainder_closed_form_n1, taylor_remainder_n1};
pub use expansion::{
    expansion_terms, remainder_derivative, remainder_derivative_with, remainder_rnm, RemainderConfig,
    SeriesExpansion, TruncationError,
};
pub use nu::nu_m;
pub use positivity::{default_n3_grid, integrand_positivity_scan, truncation_sign_scan, SIGN_TOL};
