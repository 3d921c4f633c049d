//! The fields GF(2^n), polynomials over them, and the splitting of
//! `GF(2^a) (x) GF(2^b)` into a product of fields.

mod field;
mod poly;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::abgroup::integer::gcd;
use crate::error::{Error, Result};
use crate::factoring;
use crate::gf2poly::DEFAULT_SEED;
pub use field::{FieldCtx, FieldElem, MAX_EXTENSION_DEGREE};
pub use poly::PolyExt;

/// Complete factorization over GF(2^n) into monic irreducibles, canonical order.
pub fn factor_over_ext(f: &PolyExt) -> Result<Vec<(PolyExt, u32)>> {
    factor_over_ext_seeded(f, DEFAULT_SEED)
}

pub fn factor_over_ext_seeded(f: &PolyExt, seed: u64) -> Result<Vec<(PolyExt, u32)>> {
    match f.degree() {
        None => return Err(Error::domain("cannot factor the zero polynomial")),
        Some(0) => return Err(Error::domain("cannot factor a constant polynomial")),
        Some(d) if d > crate::gf2poly::MAX_DEGREE => {
            return Err(Error::resource(format!("degree {d} exceeds the factorization limit")))
        }
        Some(_) => {}
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(factoring::factor(f, &mut rng))
}

fn check_degrees(a: u32, b: u32) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::domain("extension degrees must be positive"));
    }
    Ok(())
}

/// Degrees of the fields in `GF(2^a) (x) GF(2^b)`: `gcd(a, b)` copies of `lcm(a, b)`.
pub fn tensor_split(a: u32, b: u32) -> Result<Vec<u64>> {
    check_degrees(a, b)?;
    let g = gcd(a as u128, b as u128) as u64;
    let l = a as u64 * b as u64 / g;
    Ok(vec![l; g as usize])
}

/// The same splitting computed the long way: factor the modulus of
/// GF(2^b) over GF(2^a); a factor of degree `k` is a residue field of
/// degree `a k` over GF(2). Sorted descending.
pub fn tensor_split_explicit(a: u32, b: u32) -> Result<Vec<u64>> {
    check_degrees(a, b)?;
    let base = FieldCtx::new(a)?;
    let modulus = FieldCtx::new(b)?.modulus();
    let factors = factor_over_ext(&PolyExt::lift(base, &modulus))?;
    let mut degrees = Vec::new();
    for (f, m) in factors {
        if m != 1 {
            return Err(Error::domain("modulus of a finite field is separable; got a repeated factor"));
        }
        degrees.push(a as u64 * f.degree().unwrap() as u64);
    }
    degrees.sort_unstable_by(|x, y| y.cmp(x));
    Ok(degrees)
}

/// Dimension count: the field degrees of the tensor product add up to `a b`.
pub fn tensor_dim_check(a: u32, b: u32) -> Result<bool> {
    Ok(tensor_split(a, b)?.iter().sum::<u64>() == a as u64 * b as u64)
}
