use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abgroup::integer::mersenne;
use crate::error::{Error, Result};

/// A cardinal number: a finite count, or a symbolic infinite cardinal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Cardinal {
    Finite(u64),
    /// Label such as `aleph_0`; no arithmetic is done on these.
    Infinite(String),
}

impl Cardinal {
    pub fn aleph(k: u64) -> Self {
        Cardinal::Infinite(format!("aleph_{k}"))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Cardinal::Infinite(_))
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(k) => write!(f, "{k}"),
            Cardinal::Infinite(label) => f.write_str(label),
        }
    }
}

/// Accepts a decimal integer, `inf`/`infinite`, or `aleph<k>`/`aleph_<k>`.
impl FromStr for Cardinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.bytes().all(|b| b.is_ascii_digit()) && !s.is_empty() {
            return s
                .parse::<u64>()
                .map(Cardinal::Finite)
                .map_err(|_| Error::usage(format!("{s:?} does not fit in 64 bits")));
        }
        let lower = s.to_ascii_lowercase();
        if lower == "inf" || lower == "infinite" || lower == "infinity" {
            return Ok(Cardinal::Infinite("infinite".into()));
        }
        if let Some(rest) = lower.strip_prefix("aleph") {
            let idx = rest.strip_prefix('_').unwrap_or(rest);
            if let Ok(k) = idx.parse::<u64>() {
                return Ok(Cardinal::aleph(k));
            }
        }
        Err(Error::usage(format!("not a cardinal: {s:?}")))
    }
}

impl TryFrom<String> for Cardinal {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Cardinal> for String {
    fn from(c: Cardinal) -> Self {
        c.to_string()
    }
}

/// An explicit commutative ring whose unit group is the one asked for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessRing {
    /// `GF(2^d_1) x ... x GF(2^d_k)`; degrees sorted descending.
    ProductOfFields { degrees: Vec<u32> },
    /// `Z[x]/(x^2, m x)`, with units `C_2 x C_m`.
    EvenUnitRing { m: u64 },
    /// `F_2(S)` with `|S|` the given infinite cardinal.
    RationalFunctionField { cardinal: String },
}

impl WitnessRing {
    pub fn product_of_fields(mut degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::domain("a product of fields needs at least one factor"));
        }
        if degrees.contains(&0) {
            return Err(Error::domain("field degrees must be at least 1"));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(WitnessRing::ProductOfFields { degrees })
    }

    pub fn even_unit_ring(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("Z[x]/(x^2, m x) needs m >= 1"));
        }
        Ok(WitnessRing::EvenUnitRing { m })
    }

    pub fn rational_function_field(cardinal: &Cardinal) -> Result<Self> {
        match cardinal {
            Cardinal::Infinite(label) => Ok(WitnessRing::RationalFunctionField { cardinal: label.clone() }),
            Cardinal::Finite(_) => Err(Error::domain("F_2(S) only witnesses infinite cardinals")),
        }
    }

    /// Rechecks the constructor invariants, e.g. after deserializing.
    pub fn validate(&self) -> Result<()> {
        match self {
            WitnessRing::ProductOfFields { degrees } => {
                let canonical = Self::product_of_fields(degrees.clone())?;
                if &canonical != self {
                    return Err(Error::domain("product_of_fields degrees must be sorted descending"));
                }
                Ok(())
            }
            WitnessRing::EvenUnitRing { m } => Self::even_unit_ring(*m).map(|_| ()),
            WitnessRing::RationalFunctionField { cardinal } => {
                match cardinal.parse::<Cardinal>() {
                    Ok(Cardinal::Infinite(_)) => Ok(()),
                    _ => Err(Error::domain(format!("{cardinal:?} is not an infinite cardinal"))),
                }
            }
        }
    }

    /// Human-readable description of the ring.
    pub fn describe(&self) -> String {
        match self {
            WitnessRing::ProductOfFields { degrees } => degrees
                .iter()
                .map(|d| format!("GF(2^{d})"))
                .collect::<Vec<_>>()
                .join(" x "),
            WitnessRing::EvenUnitRing { m } => format!("Z[x]/(x^2, {m}x)"),
            WitnessRing::RationalFunctionField { cardinal } => format!("F_2(S) with |S| = {cardinal}"),
        }
    }
}

/// Exponents `n_i >= 2` with `prod (2^n_i - 1)` equal to the certified odd number.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddCertificate {
    pub exponents: Vec<u32>,
}

impl OddCertificate {
    /// `prod (2^n_i - 1)`, or `None` on 128-bit overflow.
    pub fn value(&self) -> Option<u128> {
        self.exponents
            .iter()
            .try_fold(1u128, |acc, &n| acc.checked_mul(mersenne(n)))
    }

    /// Field degrees of the witness ring; `[1]` for the empty certificate.
    pub fn field_degrees(&self) -> Vec<u32> {
        if self.exponents.is_empty() {
            vec![1]
        } else {
            self.exponents.clone()
        }
    }

    /// Certificate for the product of two certified numbers.
    pub fn union(&self, other: &Self) -> Self {
        let mut exponents = self.exponents.clone();
        exponents.extend_from_slice(&other.exponents);
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        Self { exponents }
    }
}

/// Answer to "is this cardinal the number of units of a commutative ring?".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizabilityAnswer {
    pub realizable: bool,
    pub witness: Option<WitnessRing>,
    pub certificate: Option<OddCertificate>,
    pub reason: Option<String>,
}

impl RealizabilityAnswer {
    pub(crate) fn yes(witness: WitnessRing, certificate: Option<OddCertificate>) -> Self {
        Self { realizable: true, witness: Some(witness), certificate, reason: None }
    }

    pub(crate) fn no(reason: impl Into<String>) -> Self {
        Self { realizable: false, witness: None, certificate: None, reason: Some(reason.into()) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardinal_parsing() {
        assert_eq!("21".parse::<Cardinal>().unwrap(), Cardinal::Finite(21));
        assert_eq!("aleph0".parse::<Cardinal>().unwrap(), Cardinal::aleph(0));
        assert_eq!("aleph_3".parse::<Cardinal>().unwrap(), Cardinal::aleph(3));
        assert!("inf".parse::<Cardinal>().unwrap().is_infinite());
        assert_eq!("18446744073709551615".parse::<Cardinal>().unwrap(), Cardinal::Finite(u64::MAX));
        assert!("18446744073709551616".parse::<Cardinal>().is_err());
        assert!("-3".parse::<Cardinal>().is_err());
        assert!("12a".parse::<Cardinal>().is_err());
        assert!("alephx".parse::<Cardinal>().is_err());
    }

    #[test]
    fn witness_invariants() {
        assert!(WitnessRing::product_of_fields(vec![]).is_err());
        assert!(WitnessRing::product_of_fields(vec![2, 0]).is_err());
        assert_eq!(
            WitnessRing::product_of_fields(vec![2, 3]).unwrap(),
            WitnessRing::ProductOfFields { degrees: vec![3, 2] }
        );
        assert!(WitnessRing::even_unit_ring(0).is_err());
        assert!(WitnessRing::rational_function_field(&Cardinal::Finite(3)).is_err());
        assert!(WitnessRing::ProductOfFields { degrees: vec![2, 3] }.validate().is_err());
        assert!(WitnessRing::RationalFunctionField { cardinal: "7".into() }.validate().is_err());
    }

    #[test]
    fn certificate_helpers() {
        let c = OddCertificate { exponents: vec![3, 2] };
        assert_eq!(c.value(), Some(21));
        assert_eq!(OddCertificate::default().value(), Some(1));
        assert_eq!(OddCertificate::default().field_degrees(), vec![1]);
        assert_eq!(c.union(&OddCertificate { exponents: vec![5] }).exponents, vec![5, 3, 2]);
    }
}
