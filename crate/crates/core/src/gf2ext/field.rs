use std::fmt;

use crate::abgroup::integer::factor_integer;
use crate::error::{Error, Result};
use crate::gf2poly::{is_irreducible, PolyGF2};
use crate::gf2poly::poly::clmul;

/// Largest supported extension degree; elements live in a `u64`.
pub const MAX_EXTENSION_DEGREE: u32 = 63;

/// The field GF(2^n) = GF(2)[x]/(modulus).
///
/// The modulus is the irreducible polynomial of degree `n` with the
/// smallest integer encoding, so equal degrees give equal contexts.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    n: u32,
    modulus: u64,
}

impl FieldCtx {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("extension degree must be positive"));
        }
        if n > MAX_EXTENSION_DEGREE {
            return Err(Error::resource(format!(
                "extension degree {n} exceeds {MAX_EXTENSION_DEGREE}"
            )));
        }
        let lo = 1u64 << n;
        let hi = lo.wrapping_shl(1).wrapping_sub(1).max(lo);
        for cand in lo..=hi {
            if is_irreducible(&PolyGF2::from_u64(cand))? {
                return Ok(Self { n, modulus: cand });
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> PolyGF2 {
        PolyGF2::from_u64(self.modulus)
    }

    /// Number of elements, `2^n`.
    pub fn size(&self) -> u128 {
        1u128 << self.n
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { ctx: *self, rep: 0 }
    }

    pub fn one(&self) -> FieldElem {
        FieldElem { ctx: *self, rep: self.reduce(1) }
    }

    /// The class of `x`.
    pub fn generator(&self) -> FieldElem {
        FieldElem { ctx: *self, rep: self.reduce(2) }
    }

    /// Element from an encoding, reduced modulo the modulus.
    pub fn elem(&self, bits: u64) -> FieldElem {
        FieldElem { ctx: *self, rep: self.reduce(bits as u128) }
    }

    pub fn elem_from_poly(&self, p: &PolyGF2) -> Result<FieldElem> {
        let r = p.rem(&self.modulus())?;
        Ok(FieldElem { ctx: *self, rep: r.to_u64().expect("degree below 63") })
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..1u64 << self.n).map(|rep| FieldElem { ctx: *self, rep })
    }

    pub(crate) fn reduce(&self, mut v: u128) -> u64 {
        let n = self.n;
        while v >> n != 0 {
            let top = 127 - v.leading_zeros();
            v ^= (self.modulus as u128) << (top - n);
        }
        v as u64
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u64, b: u64) -> u64 {
        self.reduce(clmul(a, b))
    }

    pub(crate) fn pow_raw(&self, base: u64, mut exp: u128) -> u64 {
        let mut acc = self.reduce(1);
        let mut b = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_raw(acc, b);
            }
            b = self.mul_raw(b, b);
            exp >>= 1;
        }
        acc
    }

    /// `a^(2^n - 2)`; zero maps to zero.
    pub(crate) fn inv_raw(&self, a: u64) -> u64 {
        self.pow_raw(a, self.size() - 2)
    }

    /// The unique square root, `a^(2^(n-1))`.
    pub(crate) fn sqrt_raw(&self, a: u64) -> u64 {
        (1..self.n).fold(a, |acc, _| self.mul_raw(acc, acc))
    }
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod {:x}", self.n, self.modulus)
    }
}

/// Element of a [`FieldCtx`], stored as a reduced polynomial in its low bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    ctx: FieldCtx,
    rep: u64,
}

impl FieldElem {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn bits(&self) -> u64 {
        self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep == 0
    }

    fn same_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::usage(format!(
                "field context mismatch: {:?} vs {:?}",
                self.ctx, other.ctx
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        Ok(Self { ctx: self.ctx, rep: self.rep ^ other.rep })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        Ok(Self { ctx: self.ctx, rep: self.ctx.mul_raw(self.rep, other.rep) })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("zero has no inverse"));
        }
        Ok(Self { ctx: self.ctx, rep: self.ctx.inv_raw(self.rep) })
    }

    pub fn pow(&self, exp: u128) -> Self {
        Self { ctx: self.ctx, rep: self.ctx.pow_raw(self.rep, exp) }
    }

    /// Least `t >= 1` with `self^t = 1`, found by stripping prime factors off `2^n - 1`.
    pub fn multiplicative_order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::domain("zero has no multiplicative order"));
        }
        let group_order = (self.ctx.size() - 1) as u64;
        let mut t = group_order;
        for (p, _) in factor_integer(group_order)? {
            while t % p == 0 && self.pow((t / p) as u128).rep == self.ctx.reduce(1) {
                t /= p;
            }
        }
        Ok(t)
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}@GF(2^{})", self.rep, self.ctx.n)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.rep)
    }
}
