//! The h_a family: τ, F_a and the two thresholds in a.

use nevanlinna::cases::{default_t_grid, h_cm_threshold_check, h_stieltjes_check, tau_closed, HFamily};
use nevanlinna::numerics::Grid;

fn main() -> nevanlinna::Result<()> {
    let family = HFamily::default();
    for s in [0.01, 0.3, 0.9] {
        println!("τ({s}) = {:.10} (closed form {:.10})", family.tau(s)?, tau_closed(s)?);
    }
    println!("∫τ = {:.10}", family.tau_mass()?);

    let table = family.tabulate(&default_t_grid())?;
    for a in [2.0, 2.189, 2.3] {
        let (t, v) = table.minimum(a);
        println!("min F_{a} = {v:+.3e} at t = {t:.3}");
    }
    println!("b* = {:.6}", table.bisect(2.0, 2.3, 1e-9)?);

    for r in h_cm_threshold_check(&[2.25, 2.35])? {
        println!("{r}");
    }
    println!("{}", h_stieltjes_check(1.0, &Grid::log(0.1, 20.0, 15))?);
    Ok(())
}
