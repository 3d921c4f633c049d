use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Polynomial over GF(2), bit `i` of the packed words is the coefficient of `x^i`.
///
/// Always trimmed: the last word is nonzero, and zero is the empty vector.
/// Ordering is the ordering of the integer encoding, which sorts first by
/// degree.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PolyGF2 {
    words: Vec<u64>,
}

/// Carry-less 64x64 -> 128 bit multiplication.
#[inline]
pub(crate) fn clmul(a: u64, b: u64) -> u128 {
    let a = a as u128;
    let mut acc = 0u128;
    let mut b = b;
    while b != 0 {
        let i = b.trailing_zeros();
        acc ^= a << i;
        b &= b - 1;
    }
    acc
}

/// Spreads the 32 bits of `x` to the even positions of a `u64`.
#[inline]
fn spread(x: u32) -> u64 {
    let mut x = x as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

/// Inverse of [`spread`]: gathers the even-position bits.
#[inline]
fn gather(x: u64) -> u32 {
    let mut x = x & 0x5555_5555_5555_5555;
    x = (x | (x >> 1)) & 0x3333_3333_3333_3333;
    x = (x | (x >> 2)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x >> 4)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x >> 8)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x >> 16)) & 0x0000_0000_FFFF_FFFF;
    x as u32
}

impl PolyGF2 {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self { words: vec![1] }
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self { words: vec![2] }
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        let mut p = Self { words };
        p.trim();
        p
    }

    pub fn from_u64(bits: u64) -> Self {
        Self::from_words(vec![bits])
    }

    pub fn from_u128(bits: u128) -> Self {
        Self::from_words(vec![bits as u64, (bits >> 64) as u64])
    }

    /// Sum of `x^e` over the given exponents (repeats cancel).
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exps {
            p.flip(e);
        }
        p
    }

    /// `x^q - 1`, which equals `x^q + 1` here.
    pub fn x_pow_minus_one(q: usize) -> Self {
        Self::from_exponents(&[q, 0])
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The encoding as a `u64`, if it fits.
    pub fn to_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.words
            .last()
            .map(|w| 64 * (self.words.len() - 1) + 63 - w.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    fn flip(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] ^= 1 << (i % 64);
        self.trim();
    }

    /// Number of nonzero terms.
    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    fn xor_shifted(&mut self, other: &Self, shift: usize) {
        let (ws, bs) = (shift / 64, shift % 64);
        let need = other.words.len() + ws + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + ws] ^= w << bs;
            if bs != 0 {
                self.words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        self.trim();
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0u64; self.words.len() + other.words.len()];
        for (i, &a) in self.words.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.words.iter().enumerate() {
                let p = clmul(a, b);
                out[i + j] ^= p as u64;
                out[i + j + 1] ^= (p >> 64) as u64;
            }
        }
        Self::from_words(out)
    }

    pub fn square(&self) -> Self {
        let mut out = Vec::with_capacity(2 * self.words.len());
        for &w in &self.words {
            out.push(spread(w as u32));
            out.push(spread((w >> 32) as u32));
        }
        Self::from_words(out)
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::domain("division by the zero polynomial"))?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            rem.xor_shifted(divisor, shift);
            quot.flip(shift);
        }
        Ok((quot, rem))
    }

    pub fn rem(&self, modulus: &Self) -> Result<Self> {
        let dd = modulus
            .degree()
            .ok_or_else(|| Error::domain("division by the zero polynomial"))?;
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            rem.xor_shifted(modulus, rd - dd);
        }
        Ok(rem)
    }

    /// Greatest common divisor; monic automatically since the only unit is 1.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a
    }

    /// Formal derivative: odd-exponent terms shift down, even ones vanish.
    pub fn derivative(&self) -> Self {
        const ODD: u64 = 0xAAAA_AAAA_AAAA_AAAA;
        // Bit 0 of the next word is an even exponent, so nothing crosses words.
        let words = self.words.iter().map(|w| (w & ODD) >> 1).collect();
        Self::from_words(words)
    }

    /// `g` with `g^2 = self`, or `None` if `self` has an odd-exponent term.
    pub fn sqrt(&self) -> Option<Self> {
        const ODD: u64 = 0xAAAA_AAAA_AAAA_AAAA;
        if self.words.iter().any(|w| w & ODD != 0) {
            return None;
        }
        let halves: Vec<u32> = self.words.iter().map(|&w| gather(w)).collect();
        let words = halves
            .chunks(2)
            .map(|c| c[0] as u64 | (c.get(1).copied().unwrap_or(0) as u64) << 32)
            .collect();
        Some(Self::from_words(words))
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Result<Self> {
        self.mul(other).rem(modulus)
    }

    pub fn square_mod(&self, modulus: &Self) -> Result<Self> {
        self.square().rem(modulus)
    }

    /// `self^exp mod modulus` by left-to-right square and multiply.
    pub fn pow_mod(&self, exp: u128, modulus: &Self) -> Result<Self> {
        let base = self.rem(modulus)?;
        let mut acc = Self::one().rem(modulus)?;
        for i in (0..128 - exp.leading_zeros()).rev() {
            acc = acc.square_mod(modulus)?;
            if (exp >> i) & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
        }
        Ok(acc)
    }

    /// Lowercase hex of the integer encoding, most significant digit first.
    pub fn to_hex(&self) -> String {
        match self.words.split_last() {
            None => "0".to_string(),
            Some((top, rest)) => {
                let mut s = format!("{top:x}");
                for w in rest.iter().rev() {
                    s.push_str(&format!("{w:016x}"));
                }
                s
            }
        }
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix("0x").unwrap_or(s);
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(Error::usage(format!("not a hexadecimal polynomial encoding: {s:?}")));
        }
        let bytes = s.as_bytes();
        let words = bytes
            .rchunks(16)
            .map(|chunk| u64::from_str_radix(std::str::from_utf8(chunk).unwrap(), 16).unwrap())
            .collect();
        Ok(Self::from_words(words))
    }
}

impl Ord for PolyGF2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for PolyGF2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &PolyGF2 {
    type Output = PolyGF2;

    fn add(self, rhs: &PolyGF2) -> PolyGF2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&PolyGF2> for PolyGF2 {
    fn add_assign(&mut self, rhs: &PolyGF2) {
        if self.words.len() < rhs.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
        self.trim();
    }
}

impl Mul for &PolyGF2 {
    type Output = PolyGF2;

    fn mul(self, rhs: &PolyGF2) -> PolyGF2 {
        PolyGF2::mul(self, rhs)
    }
}

impl fmt::Display for PolyGF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return f.write_str("0");
        };
        let mut first = true;
        for i in (0..=deg).rev().filter(|&i| self.coeff(i)) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyGF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyGF2({})", self.to_hex())
    }
}

impl FromStr for PolyGF2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_hex(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(bits: u64) -> PolyGF2 {
        PolyGF2::from_u64(bits)
    }

    #[test]
    fn arithmetic_examples() {
        // x^2+1 + x^2+x = x+1
        assert_eq!(&p(0b101) + &p(0b110), p(0b11));
        // d/dx (x^3+x^2+1) = x^2
        assert_eq!(p(0b1101).derivative(), p(0b100));
        assert_eq!(p(0b1001).gcd(&p(0b101)), p(0b11));
        assert!(p(3).divrem(&PolyGF2::zero()).is_err());
        assert_eq!(PolyGF2::zero().degree(), None);
        assert_eq!(p(1).degree(), Some(0));
    }

    #[test]
    fn gcd_by_trial_division() {
        // Common divisors of x^3+1 and x^2+1 among all polynomials of degree <= 1.
        let (a, b) = (p(0b1001), p(0b101));
        let common: Vec<u64> = (1u64..4)
            .filter(|&d| a.rem(&p(d)).unwrap().is_zero() && b.rem(&p(d)).unwrap().is_zero())
            .collect();
        assert_eq!(common, vec![1, 3]);
        assert_eq!(a.gcd(&b), p(3));
    }

    #[test]
    fn multiword_shifts_and_division() {
        let a = PolyGF2::from_exponents(&[200, 130, 64, 63, 1]);
        let b = PolyGF2::from_exponents(&[70, 3, 0]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < 70);
        assert_eq!(a.square(), &a * &a);
        assert_eq!(a.square().sqrt().unwrap(), a);
        assert_eq!(a.sqrt(), None);
    }

    #[test]
    fn derivative_across_word_boundary() {
        let a = PolyGF2::from_exponents(&[129, 65, 64, 3]);
        assert_eq!(a.derivative(), PolyGF2::from_exponents(&[128, 64, 2]));
    }

    #[test]
    fn hex_round_trip_and_order() {
        let a = PolyGF2::from_exponents(&[100, 7, 0]);
        assert_eq!(PolyGF2::from_hex(&a.to_hex()).unwrap(), a);
        assert_eq!(p(0b1011).to_hex(), "b");
        assert_eq!(PolyGF2::zero().to_hex(), "0");
        assert!(PolyGF2::from_hex("xyz").is_err());
        assert!(p(0b111) < p(0b1011));
        assert!(a > p(u64::MAX));
    }

    #[test]
    fn pow_mod_matches_repeated_multiplication() {
        let m = p(0b1011);
        let mut acc = PolyGF2::one();
        for e in 0..20u128 {
            assert_eq!(PolyGF2::x().pow_mod(e, &m).unwrap(), acc);
            acc = acc.mul_mod(&PolyGF2::x(), &m).unwrap();
        }
    }
}
