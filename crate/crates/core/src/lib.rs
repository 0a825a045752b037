//! Colored permutation statistics on wreath products `C_N wr S_n`, colored
//! Eulerian quasisymmetric functions, the bijections behind them, and exact
//! coefficientwise checks of their generating-function identities.

mod error;
pub mod eulerian;
pub mod polyring;
pub mod qsym;
pub mod report;
pub mod specialize;
pub mod structures;
pub mod suite;
pub mod vars;
pub mod wreath;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Integer-coefficient polynomial; the default carrier everywhere.
pub type Poly = polyring::SparsePoly<BigInt>;
/// Rational-coefficient polynomial, used for ordinary exponential series.
pub type RatPoly = polyring::SparsePoly<BigRational>;
