//! Colored Eulerian quasisymmetric functions: enumeration, recurrences, and the
//! master generating-function checks.

mod gf;
mod oracle;
mod qn;
mod recurrence;

pub use gf::{
    check_fixed_point_free_identity, check_master_identity, check_recurrence_against_oracle,
    check_root_of_unity_collapse, check_single_color_form, check_symmetry, master_lhs, master_rhs,
    vectors_with_sum_at_most, LhsSource,
};
pub use oracle::{q_bruteforce, q_cv_bruteforce, DexCounts, OracleTable, WKey};
pub use qn::{
    c_term, compositions, p_term, qn_bruteforce, qn_polynomial, vectors_with_sum, QnMethod,
};
pub use recurrence::{d_recurrence, q_padded, q_recurrence, QTable};
