//! Nevanlinna–Pick functions on the upper half-plane: sampled verification,
//! triple extraction, boundary densities, Stieltjes representations and the
//! Löwner kernel test.

mod lowner;
mod measure;
mod pick;
mod ratio;

pub use lowner::{lowner_matrix, lowner_psd, MAX_LOWNER_POINTS};
pub use measure::{Density, DensityPiece, MeasureSpec};
pub use pick::{
    boundary_density, evaluate_pick_rep, evaluate_stieltjes, extract_pick_triple, scaled_ladder, verify_pick,
    ComplexMap, HalfPlaneGrid, PickExtraction, PickTriple, StieltjesRep, BOUNDARY_LADDER,
};
pub use ratio::{
    g_function_ratio_check, g_ratio, g_ratio_density, g_ratio_stieltjes, log_gamma_ratio, log_gamma_ratio_density,
    log_gamma_ratio_stieltjes, verify_log_gamma_ratio_representation,
};
