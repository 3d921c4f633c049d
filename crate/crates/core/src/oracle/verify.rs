use serde::{Deserialize, Serialize};

use crate::abgroup::{iso_test, units_of_field_product, AbelianGroup};
use crate::error::Result;
use crate::realize::{Cardinal, WitnessRing};

use super::algebra::{build_product_of_fields, MAX_ALGEBRA_DIM};
use super::r2m::{r2m_unit_survey, MAX_R2M_M};
use super::units::{enumerate_units, UnitSurvey};

/// What a witness is checked against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Cardinal(Cardinal),
    Group(AbelianGroup),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyMethod {
    /// Every element was enumerated.
    Enumeration,
    /// The witness exceeds the enumeration guard; only the closed-form
    /// unit group was compared.
    Formula,
    /// Infinite witness, accepted symbolically.
    Symbolic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub verified: bool,
    pub method: VerifyMethod,
}

impl Verification {
    /// True when the enumeration guard forced a formula-only check.
    pub fn guard_exceeded(&self) -> bool {
        self.method == VerifyMethod::Formula
    }
}

fn matches(survey: &UnitSurvey, expected: &Expected) -> Result<bool> {
    Ok(match expected {
        Expected::Cardinal(Cardinal::Finite(k)) => survey.count == *k,
        Expected::Cardinal(Cardinal::Infinite(_)) => false,
        Expected::Group(g) => {
            g.order()? == survey.count as u128 && g.order_statistics()? == survey.orders
        }
    })
}

fn matches_formula(units: &AbelianGroup, expected: &Expected) -> Result<bool> {
    Ok(match expected {
        Expected::Cardinal(Cardinal::Finite(k)) => units.order()? == *k as u128,
        Expected::Cardinal(Cardinal::Infinite(_)) => false,
        Expected::Group(g) => iso_test(units, g),
    })
}

/// Re-checks a witness ring against the expected unit count or group.
pub fn verify_witness(w: &WitnessRing, expected: &Expected) -> Result<Verification> {
    w.validate()?;
    match w {
        WitnessRing::ProductOfFields { degrees } => {
            let formula = units_of_field_product(degrees)?;
            let dim: u64 = degrees.iter().map(|&d| d as u64).sum();
            if dim <= MAX_ALGEBRA_DIM as u64 {
                let survey = enumerate_units(&build_product_of_fields(degrees)?);
                let consistent = formula.order()? == survey.count as u128;
                Ok(Verification {
                    verified: consistent && matches(&survey, expected)?,
                    method: VerifyMethod::Enumeration,
                })
            } else {
                Ok(Verification {
                    verified: matches_formula(&formula, expected)?,
                    method: VerifyMethod::Formula,
                })
            }
        }
        WitnessRing::EvenUnitRing { m } => {
            if *m <= MAX_R2M_M {
                let survey = r2m_unit_survey(*m)?;
                Ok(Verification {
                    verified: matches(&survey, expected)?,
                    method: VerifyMethod::Enumeration,
                })
            } else {
                let formula = AbelianGroup::from_cyclic_orders(&[2, *m])?;
                Ok(Verification {
                    verified: matches_formula(&formula, expected)?,
                    method: VerifyMethod::Formula,
                })
            }
        }
        WitnessRing::RationalFunctionField { .. } => Ok(Verification {
            verified: matches!(expected, Expected::Cardinal(Cardinal::Infinite(_))),
            method: VerifyMethod::Symbolic,
        }),
    }
}
