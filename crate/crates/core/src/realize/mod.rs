//! Decision procedures: which cardinals and which odd-order abelian groups
//! are unit groups of commutative rings, with explicit witness rings.

mod group;
mod odd;
mod s_ring;
mod types;

pub use group::{mersenne_power_check, realize_group_odd, realize_p_group};
pub use odd::{odd_product_decomposition, realize_cardinal};
pub use s_ring::{
    s_ring_degrees, s_ring_degrees_up_to, s_ring_subset_search, DegreeMultiset, S_RING_DIMENSION_LIMIT,
};
pub use types::{Cardinal, OddCertificate, RealizabilityAnswer, WitnessRing};
