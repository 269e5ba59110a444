//! Volumes of unit balls and their normalized roots.

use nevanlinna::cases::unit_ball_sequence;

fn main() -> nevanlinna::Result<()> {
    let table = unit_ball_sequence(200)?;
    for row in table.rows.iter().filter(|r| [2, 3, 5, 10, 20, 60, 200].contains(&r.n)) {
        println!("n = {:>3}  log Ω_n = {:+.6}  root = {:?}", row.n, row.log_volume, row.root);
    }
    println!(
        "decreasing {}, log-convex {}, approaching e^(-1/2) = {:.6}: {}",
        table.decreasing,
        table.log_convex,
        (-0.5f64).exp(),
        table.approaches_limit
    );
    Ok(())
}
