//! Colored permutations and their statistics.

mod cycles;
mod enumerate;
mod perm;
mod stats;
mod typeb;

pub use cycles::{cycle_structure, CvCycleType, CvPair, CycleStructure};
pub use enumerate::{
    check_guard, enumerate, group_order, resource_bound, Enumeration, DEFAULT_RESOURCE_BOUND,
};
pub use perm::{ColoredLetter, ColoredPermutation};
pub use stats::{dex_set, is_excedance, statistics, StatRecord};
pub use typeb::{reverse_negative_blocks, signed_values, type_b_stats, TypeBStats};
