//! g_λ and the log-ratio Γ(x)Γ(x+a+b)/(Γ(x+a)Γ(x+b)).

use nevanlinna::cases::{g_lambda_suite, gamma_ratio_integral, gamma_ratio_representation, xi};
use nevanlinna::classes::{kristiansen_check, DEFAULT_CM_TOL};
use nevanlinna::numerics::Grid;
use nevanlinna::special::ln_gamma;

fn main() -> nevanlinna::Result<()> {
    let grid = Grid::log(0.1, 20.0, 15);
    for t in [0.1, 1.0, 5.0] {
        println!("ξ_2({t}) = {:.12}  ξ_1/2({t}) = {:.12}", xi(2.0, t), xi(0.5, t));
    }
    for lambda in [0.5, 2.0, 3.0] {
        let r = g_lambda_suite(lambda, &grid, 6, DEFAULT_CM_TOL)?;
        println!("λ = {lambda}: {}", serde_json::to_string(&r).unwrap_or_default());
    }

    let (a, b) = (0.5, 2.0);
    for x in [0.5, 1.0, 4.0] {
        let direct = ln_gamma(x) + ln_gamma(x + a + b) - ln_gamma(x + a) - ln_gamma(x + b);
        println!("x = {x}: integral {:.12}, direct {direct:.12}", gamma_ratio_integral(a, b, x)?);
    }
    println!("{}", gamma_ratio_representation(a, b, &[0.5, 2.0, 10.0], &grid, DEFAULT_CM_TOL)?);
    println!("{}", kristiansen_check(a, b, &grid, 3, 6, DEFAULT_CM_TOL)?);
    Ok(())
}
