//! Truncated expansions of log Γ_N and the sign of their remainders.

use nevanlinna::asymptotics::{
    binet_mu, default_n3_grid, expansion_terms, integrand_positivity_scan, nu_m, remainder_rnm, truncation_sign_scan,
};
use nevanlinna::numerics::Grid;

fn main() -> nevanlinna::Result<()> {
    let w = 4.0;
    for m in 1..=6 {
        println!("N=1 m={m}: terms {:+.12}  remainder {:+.3e}", expansion_terms(1, m, w)?, remainder_rnm(1, m, w)?);
    }
    for x in [1.0, 10.0, 100.0] {
        println!("μ({x}) = {:.3e}, 1/(12x) = {:.3e}", binet_mu(x)?, 1.0 / (12.0 * x));
    }
    for t in [0.1, 1.0, 10.0] {
        println!("ν_2({t}) = {:.6e}", nu_m(2, t)?);
    }
    let grid = default_n3_grid();
    println!("{}", integrand_positivity_scan(3, 6, &grid)?);
    println!("{}", truncation_sign_scan(2, 3, &Grid::log(1e-3, 100.0, 2000))?);
    Ok(())
}
