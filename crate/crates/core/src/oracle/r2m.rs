use crate::error::{Error, Result};

use super::units::{order_sweep, UnitSurvey};

pub const MAX_R2M_M: u64 = 1_000_000;

/// A unit `sign + b x` of `Z[x]/(x^2, m x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EvenRingUnitRep {
    pub negative: bool,
    pub b: u64,
}

impl EvenRingUnitRep {
    pub const ONE: Self = Self { negative: false, b: 0 };

    pub fn sign(&self) -> i8 {
        if self.negative { -1 } else { 1 }
    }

    /// `(s1, b1)(s2, b2) = (s1 s2, s1 b2 + s2 b1 mod m)`.
    pub fn mul(&self, other: &Self, m: u64) -> Self {
        let signed = |neg: bool, v: u64| if neg { (m - v % m) % m } else { v % m };
        let b = (signed(self.negative, other.b) + signed(other.negative, self.b)) % m;
        Self { negative: self.negative != other.negative, b }
    }

    /// `a - b x`, since `(a + b x)(a - b x) = a^2 = 1`.
    pub fn conjugate(&self, m: u64) -> Self {
        Self { negative: self.negative, b: (m - self.b % m) % m }
    }

    fn index(&self, m: u64) -> usize {
        (self.negative as u64 * m + self.b) as usize
    }

    fn from_index(i: usize, m: u64) -> Self {
        let i = i as u64;
        Self { negative: i >= m, b: i % m }
    }
}

/// Enumerates the `2m` units of `R_{2m}` and checks the group axioms on them.
pub fn r2m_unit_survey(m: u64) -> Result<UnitSurvey> {
    if m == 0 {
        return Err(Error::domain("m must be positive"));
    }
    if m > MAX_R2M_M {
        return Err(Error::resource(format!("m = {m} exceeds {MAX_R2M_M}")));
    }
    let size = 2 * m as usize;
    for i in 0..size {
        let u = EvenRingUnitRep::from_index(i, m);
        if u.mul(&EvenRingUnitRep::ONE, m) != u {
            return Err(Error::domain(format!("identity fails at {u:?}")));
        }
        if u.mul(&u.conjugate(m), m) != EvenRingUnitRep::ONE {
            return Err(Error::domain(format!("inverse fails at {u:?}")));
        }
    }
    let survey = order_sweep(size, EvenRingUnitRep::ONE.index(m), 0..size, |i| {
        let u = EvenRingUnitRep::from_index(i, m);
        move |j: usize| EvenRingUnitRep::from_index(j, m).mul(&u, m).index(m)
    });
    if survey.count != 2 * m {
        return Err(Error::domain(format!("found {} units, expected {}", survey.count, 2 * m)));
    }
    Ok(survey)
}
