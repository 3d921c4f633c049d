//! Decide which cardinals and which odd-order abelian groups occur as unit
//! groups of commutative rings, build witness rings, and check them by brute
//! force.
//!
//! Layering, bottom up: [`gf2poly`] and [`abgroup`] are independent kernels;
//! [`gf2ext`] builds the fields GF(2^n) on top of both; [`realize`] holds
//! the decision procedures; [`oracle`] enumerates explicit finite algebras
//! to check what [`realize`] claims.

pub mod abgroup;
pub mod error;
mod factoring;
pub mod gf2ext;
pub mod gf2poly;
pub mod oracle;
pub mod realize;

pub use abgroup::{AbelianGroup, OrderStatistics};
pub use error::{Error, Result};
pub use gf2ext::{FieldCtx, FieldElem};
pub use gf2poly::{FactorizationGF2, PolyGF2};
pub use oracle::{Expected, FiniteAlgebra, UnitSurvey, Verification};
pub use realize::{Cardinal, DegreeMultiset, OddCertificate, RealizabilityAnswer, WitnessRing};
