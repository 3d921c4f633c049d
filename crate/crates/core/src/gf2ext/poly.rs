use std::cmp::Ordering;
use std::fmt;

use rand::Rng;

use super::field::{FieldCtx, FieldElem};
use crate::error::{Error, Result};
use crate::factoring::Char2PolyRing;
use crate::gf2poly::PolyGF2;

/// Polynomial with coefficients in one GF(2^n), lowest degree first.
///
/// Coefficients are kept as raw reduced encodings next to the shared
/// context; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyExt {
    ctx: FieldCtx,
    coeffs: Vec<u64>,
}

impl PolyExt {
    pub fn zero(ctx: FieldCtx) -> Self {
        Self { ctx, coeffs: Vec::new() }
    }

    pub fn one(ctx: FieldCtx) -> Self {
        Self::from_raw(ctx, vec![1])
    }

    pub fn from_coeffs(ctx: FieldCtx, coeffs: &[FieldElem]) -> Result<Self> {
        if coeffs.iter().any(|c| *c.ctx() != ctx) {
            return Err(Error::usage("coefficient from a different field context"));
        }
        Ok(Self::from_raw(ctx, coeffs.iter().map(FieldElem::bits).collect()))
    }

    /// Image of a GF(2) polynomial under the inclusion GF(2) -> GF(2^n).
    pub fn lift(ctx: FieldCtx, p: &PolyGF2) -> Self {
        let coeffs = match p.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| p.coeff(i) as u64).collect(),
        };
        Self::from_raw(ctx, coeffs)
    }

    pub(crate) fn from_raw(ctx: FieldCtx, coeffs: Vec<u64>) -> Self {
        let mut p = Self { ctx, coeffs: coeffs.into_iter().map(|c| ctx.reduce(c as u128)).collect() };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.ctx.elem(self.coeffs.get(i).copied().unwrap_or(0))
    }

    pub fn coeffs(&self) -> Vec<FieldElem> {
        self.coeffs.iter().map(|&c| self.ctx.elem(c)).collect()
    }

    fn leading(&self) -> u64 {
        *self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a ^= b;
        }
        let mut p = Self { ctx: self.ctx, coeffs };
        p.trim();
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero(self.ctx);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] ^= self.ctx.mul_raw(a, b);
            }
        }
        let mut p = Self { ctx: self.ctx, coeffs: out };
        p.trim();
        p
    }

    fn scale(&self, c: u64) -> Self {
        let mut p = Self {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|&a| self.ctx.mul_raw(a, c)).collect(),
        };
        p.trim();
        p
    }

    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::domain("division by the zero polynomial"))?;
        let lead_inv = self.ctx.inv_raw(divisor.leading());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = self.ctx.mul_raw(rem[top], lead_inv);
            if c != 0 {
                let shift = top - dd;
                quot[shift] = c;
                for (i, &b) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] ^= self.ctx.mul_raw(b, c);
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        let mut q = Self { ctx: self.ctx, coeffs: quot };
        q.trim();
        Ok((q, Self { ctx: self.ctx, coeffs: rem }))
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&lc) => self.scale(self.ctx.inv_raw(lc)),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.coeffs.is_empty() {
            let r = a.divrem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| if i % 2 == 1 { c } else { 0 })
            .collect();
        let mut p = Self { ctx: self.ctx, coeffs };
        p.trim();
        p
    }

    /// Evaluates at a field element.
    pub fn eval(&self, at: &FieldElem) -> Result<FieldElem> {
        if *at.ctx() != self.ctx {
            return Err(Error::usage("evaluation point from a different field context"));
        }
        let v = self
            .coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| self.ctx.mul_raw(acc, at.bits()) ^ c);
        Ok(self.ctx.elem(v))
    }
}

impl Ord for PolyExt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for PolyExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PolyExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyExt[GF(2^{})](", self.ctx.degree())?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c:x}")?;
        }
        f.write_str(")")
    }
}

impl Char2PolyRing for PolyExt {
    fn degree(&self) -> Option<usize> {
        PolyExt::degree(self)
    }

    fn ground_degree(&self) -> u32 {
        self.ctx.degree()
    }

    fn add(&self, other: &Self) -> Self {
        PolyExt::add(self, other)
    }

    fn monic(&self) -> Self {
        PolyExt::monic(self)
    }

    fn gcd(&self, other: &Self) -> Self {
        PolyExt::gcd(self, other)
    }

    fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.divrem(divisor).expect("nonzero divisor");
        debug_assert!(r.coeffs.is_empty());
        q
    }

    fn rem(&self, modulus: &Self) -> Self {
        self.divrem(modulus).expect("nonzero modulus").1
    }

    fn square_mod(&self, modulus: &Self) -> Self {
        let mut sq = vec![0u64; (2 * self.coeffs.len()).saturating_sub(1)];
        for (i, &c) in self.coeffs.iter().enumerate() {
            sq[2 * i] = self.ctx.mul_raw(c, c);
        }
        let mut p = Self { ctx: self.ctx, coeffs: sq };
        p.trim();
        Char2PolyRing::rem(&p, modulus)
    }

    fn derivative(&self) -> Self {
        PolyExt::derivative(self)
    }

    fn root_of_square(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .step_by(2)
            .map(|&c| self.ctx.sqrt_raw(c))
            .collect();
        Self { ctx: self.ctx, coeffs }
    }

    fn x_like(&self) -> Self {
        Self::from_raw(self.ctx, vec![0, 1])
    }

    fn random_below<R: Rng>(&self, degree: usize, rng: &mut R) -> Self {
        let mask = (self.ctx.size() - 1) as u64;
        let coeffs = (0..degree).map(|_| rng.gen::<u64>() & mask).collect();
        let mut p = Self { ctx: self.ctx, coeffs };
        p.trim();
        p
    }
}
