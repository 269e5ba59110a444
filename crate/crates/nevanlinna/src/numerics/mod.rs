//! Shared numeric engine: quadrature, exact power series, numerical
//! differentiation, limit extrapolation and sampling grids.

pub mod diff;
pub mod extrap;
pub mod grid;
pub mod quad;
pub mod series;

pub use diff::derivative_n;
pub use extrap::extrapolate_limit;
pub use grid::{Grid, Spacing};
pub use quad::{integrate, integrate_complex, Estimate, QuadratureConfig, TailMap};
pub use series::{series_divide, series_multiply, PowerSeries};
