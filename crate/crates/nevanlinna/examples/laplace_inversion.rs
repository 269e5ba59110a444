//! Post–Widder inversion, the XL transform and Thorin approximants.

use std::sync::Arc;

use nevanlinna::classes::{evaluate_bernstein_rep, post_widder_density, thorin_approximant, xl_image, xl_transform, BernsteinRep};
use nevanlinna::func::builtin;
use nevanlinna::halfplane::MeasureSpec;

fn main() -> nevanlinna::Result<()> {
    // 1/(1+x) is the Laplace transform of e^{-t}
    let f = builtin("inv_one_plus")?;
    for n in [4, 16, 64, 128] {
        println!("n = {n:>3}: f_n(1) = {:.8} (1/e = {:.8})", post_widder_density(&f, 1.0, n)?, (-1.0f64).exp());
    }

    let g = |t: f64| -(-t).exp_m1();
    for x in [0.5, 2.0, 8.0] {
        println!("XL(1 - e^-t)({x}) = {:.14} vs 1/(x+1) = {:.14}", xl_transform(&g, x)?, 1.0 / (x + 1.0));
    }
    let image = xl_image("XL(1 - e^-t)", Arc::new(g));
    println!("jet at 2: {:?}", image.jet(2.0, 4)?.c);

    let rep = BernsteinRep::new(0.0, 0.0, 1.0, MeasureSpec::point_mass(1.0, 1.0)?)?;
    let target = evaluate_bernstein_rep(&rep, 2.0)?;
    for n in [1, 4, 16, 64] {
        println!("Thorin f_{n}(2) = {:.8} (limit {target:.8})", thorin_approximant(&rep, n, 2.0)?);
    }
    Ok(())
}
