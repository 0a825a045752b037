//! Necklaces, ornaments and banners over the barred colored alphabet, together with the
//! bijections between them.

mod banner;
mod compat;
mod gamma;
mod letter;
mod lyndon;
mod necklace;
mod verify;

pub use banner::{
    banner_profile, banner_to_ornament, enumerate_banners, has_no_unit_factor,
    increasing_sequences, k0_enumerate, k0_index, ornament_to_banner, validate_banner, K0Index,
    MarkedSequence,
};
pub use compat::{
    bijection_f, bijection_g, com_enumerate, decreasing_sequences, CompatiblePair, TieOrder,
};
pub use gamma::{gamma, gamma_inverse, CaseCoverage, GammaImage, FORWARD_CASES, INVERSE_CASES};
pub use letter::{check_colors, cmp_banner, cmp_necklace, format_word, parse_word, BLetter};
pub use lyndon::{cmp_factor_order, increasing_factorization, lyndon_factorize, Block};
pub use necklace::{alphabet, necklaces_of_length, ornaments_of_size, Necklace, Ornament};
pub use verify::{check_bijection_f, check_gamma, check_ornament_banner};
