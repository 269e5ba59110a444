//! Membership scans for CM, LCM, Stieltjes and Bernstein classes.

use nevanlinna::classes::{
    check_bernstein_order, check_cm, check_lcm, check_stieltjes_order, registry_inclusion_suite, thorin_check,
    InclusionConfig, DEFAULT_CM_TOL,
};
use nevanlinna::func::builtin;
use nevanlinna::numerics::Grid;

fn main() -> nevanlinna::Result<()> {
    let grid = Grid::log(0.1, 20.0, 15);
    let tol = DEFAULT_CM_TOL;
    println!("{}", check_cm(&builtin("exp_neg")?, 0.0, &grid, 8, tol)?);
    println!("{}", check_lcm(&builtin("inv_pow_plus_one:3")?, &grid, 8, tol)?);
    println!("{}", check_stieltjes_order(&builtin("log1p_inv")?, 1.0, 3, &grid, 8, tol)?);
    println!("{}", check_stieltjes_order(&builtin("exp_neg")?, 1.0, 3, &grid, 8, tol)?);
    println!("{}", check_bernstein_order(&builtin("identity")?, 1.0, &grid, 8, tol)?);
    println!("{}", thorin_check(&builtin("identity")?, 1.0, 0.0, &grid, 3, 8, tol)?);

    let report = registry_inclusion_suite(&InclusionConfig::default());
    for row in &report.rows {
        println!("{:<28} CM {:<20} S_1 {:<20} S_2 {}", row.function, row.cm, row.stieltjes_1, row.stieltjes_2);
    }
    println!("inconsistent pairs: {}", report.inconsistencies.len());
    Ok(())
}
