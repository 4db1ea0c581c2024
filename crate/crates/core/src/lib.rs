//! Numerical kernels for experiments on mollified second moments of the
//! Riemann zeta function on the critical line: zeta evaluation (Euler-Maclaurin
//! and Riemann-Siegel), Levinson-style mollifiers and their moment integrals,
//! and the Mellin/contour machinery relating them.
//!
//! Everything is plain binary64 with compensated summation. Operations are
//! pure functions of their arguments; parallel paths use fixed partitions and
//! order-fixed reductions so results are identical across worker counts.

pub mod arith;
pub mod error;
pub mod kernels;
pub mod mollifier;
pub mod moments;
pub mod quad;
pub mod sum;
pub mod zeta;

pub use error::{Error, Result};
pub use num_complex::Complex64;
