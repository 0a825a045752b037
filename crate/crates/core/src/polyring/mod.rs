//! Exact sparse polynomials and truncated power series.

mod coefficient;
mod cyclotomic;
mod json;
mod monomial;
mod poly;
mod qanalog;
mod series;

pub use coefficient::Coefficient;
pub use cyclotomic::{cyclotomic_coefficients, cyclotomic_embed, CyclotomicPoly, OMEGA};
pub use monomial::{Monomial, TruncationCaps};
pub use poly::{mul_truncated, SparsePoly, VarTable};
pub use qanalog::{pochhammer, q_analog, q_binomial, q_factorial, q_int, q_multinomial, QAnalog};
pub use series::{invert_unit_series, qexp_coefficient, qexp_series, QExpKind, QRational};
