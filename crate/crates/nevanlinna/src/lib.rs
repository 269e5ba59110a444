// `!(x > 0.0)` is used on purpose so that NaN arguments are rejected
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod asymptotics;
pub mod cases;
pub mod classes;
pub mod cli;
pub mod error;
pub mod func;
pub mod halfplane;
pub mod invgamma;
pub mod numerics;
pub mod report;
pub mod selftest;
pub mod special;

pub use error::{Error, Result};
