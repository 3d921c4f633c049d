//! Brute-force checks on explicit finite algebras and on `R_{2m}`.

mod algebra;
mod r2m;
mod units;
mod verify;

pub use algebra::{
    build_product_of_fields, build_s_ring, quotient_drop_factors, AlgebraJson, FiniteAlgebra,
    MAX_ALGEBRA_DIM,
};
pub use r2m::{r2m_unit_survey, EvenRingUnitRep, MAX_R2M_M};
pub use units::{enumerate_units, UnitSurvey};
pub use verify::{verify_witness, Expected, Verification, VerifyMethod};
