//! Joint distributions of colored permutation statistics and the q-series identities
//! obtained from the master generating function by principal specialization.

mod classical;
mod closed;
mod distribution;
mod identities;

pub use classical::{check_dex_lemma, check_macmahon};
pub use closed::{
    check_specialization_pipeline, check_specialized_formulas, distribution_from_formula,
};
pub use distribution::{joint_distribution, type_b_distribution, FmajVariant};
pub use identities::{
    check_cyclotomic_p_series, check_euler, check_exponential_specialization,
    check_p_series_specialization, check_signed_carlitz, check_signed_carlitz_variant,
    check_signed_p_series, eulerian_polynomial, SeriesCaps, PINNED_FMAJ,
};
