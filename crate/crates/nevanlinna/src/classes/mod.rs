//! Sampled certification of completely monotonic, Stieltjes, Bernstein and
//! Thorin classes, with the XL transform, Post–Widder and Thorin approximants.

mod bernstein;
mod cm;
mod inclusion;

pub use bernstein::{evaluate_bernstein_rep, thorin_approximant, xl_image, xl_transform, BernsteinRep};
pub use cm::{
    check_bernstein_order, check_cm, check_lcm, check_stieltjes_order, exp_bernstein_check, post_widder_density,
    thorin_check, widder_operator, DEFAULT_CM_TOL,
};
pub use inclusion::{
    inclusion_row, inclusion_suite, kristiansen_check, product_closure_check, registry_inclusion_suite, Inconsistency,
    InclusionConfig, InclusionReport, InclusionRow,
};
