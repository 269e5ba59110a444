//! Worked examples: the unit-ball volume sequence, the h_a family with its
//! thresholds, the g_λ family and the gamma-ratio function of order 2.

mod g_lambda;
mod h_family;
mod unit_ball;

pub use g_lambda::{gamma_ratio_integral, gamma_ratio_representation, g_lambda_suite, ratio_integrand_fn, xi, GLambdaReport};
pub use h_family::{
    default_t_grid, g_complex, g_value, h_cm_grid, h_cm_threshold_check, h_family_components, h_family_state,
    h_moment_sequence, h_stieltjes_check, h_threshold_bisect, h_value, hausdorff_check, rho, tau_boundary, tau_closed,
    FTable, HComponents, HFamily, HFamilyState, TauSource, H_CM_ORDER,
};
pub use unit_ball::{log_unit_ball_root, log_unit_ball_volume, unit_ball_sequence, UnitBallRow, UnitBallTable};
