//! Polynomials over GF(2): arithmetic, squarefree testing, irreducibility
//! and complete factorization.

pub(crate) mod poly;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abgroup::integer::factor_integer;
use crate::error::{Error, Result};
use crate::factoring::{self, Char2PolyRing};
pub use poly::PolyGF2;

/// Inputs of larger degree are refused by the factorization entry points.
pub const MAX_DEGREE: usize = 1 << 16;

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_0ff2;

/// Irreducible factors with multiplicities, sorted by degree then encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationGF2 {
    factors: Vec<(PolyGF2, u32)>,
}

impl FactorizationGF2 {
    pub fn factors(&self) -> &[(PolyGF2, u32)] {
        &self.factors
    }

    /// Multiplies the factors back together.
    pub fn product(&self) -> PolyGF2 {
        self.factors.iter().fold(PolyGF2::one(), |acc, (f, m)| {
            (0..*m).fold(acc, |acc, _| &acc * f)
        })
    }

    /// Factor degrees repeated by multiplicity, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        self.factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.degree().unwrap(), *m as usize))
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, m)| m == 1)
    }
}

impl Char2PolyRing for PolyGF2 {
    fn degree(&self) -> Option<usize> {
        PolyGF2::degree(self)
    }

    fn ground_degree(&self) -> u32 {
        1
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn monic(&self) -> Self {
        self.clone()
    }

    fn gcd(&self, other: &Self) -> Self {
        PolyGF2::gcd(self, other)
    }

    fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.divrem(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        q
    }

    fn rem(&self, modulus: &Self) -> Self {
        PolyGF2::rem(self, modulus).expect("nonzero modulus")
    }

    fn square_mod(&self, modulus: &Self) -> Self {
        PolyGF2::square_mod(self, modulus).expect("nonzero modulus")
    }

    fn derivative(&self) -> Self {
        PolyGF2::derivative(self)
    }

    fn root_of_square(&self) -> Self {
        self.sqrt().expect("derivative vanished, so the polynomial is a square")
    }

    fn x_like(&self) -> Self {
        PolyGF2::x()
    }

    fn random_below<R: Rng>(&self, degree: usize, rng: &mut R) -> Self {
        let mut words: Vec<u64> = (0..degree.div_ceil(64)).map(|_| rng.gen()).collect();
        if degree % 64 != 0 {
            if let Some(top) = words.last_mut() {
                *top &= (1u64 << (degree % 64)) - 1;
            }
        }
        PolyGF2::from_words(words)
    }
}

fn check_input(f: &PolyGF2, what: &str) -> Result<usize> {
    match f.degree() {
        None => Err(Error::domain(format!("{what} of the zero polynomial"))),
        Some(d) if d > MAX_DEGREE => Err(Error::resource(format!(
            "degree {d} exceeds the limit of {MAX_DEGREE}"
        ))),
        Some(d) => Ok(d),
    }
}

/// True iff `gcd(f, f') = 1`.
///
/// A polynomial with vanishing derivative is a square, so it fails
/// unless it is the constant 1.
pub fn squarefree_check(f: &PolyGF2) -> Result<bool> {
    let deg = check_input(f, "squarefree check")?;
    if deg == 0 {
        return Ok(true);
    }
    let df = f.derivative();
    if df.is_zero() {
        return Ok(false);
    }
    Ok(f.gcd(&df).is_one())
}

/// Rabin's test: `f` of degree `n` is irreducible iff `x^(2^n) = x mod f`
/// and `gcd(x^(2^(n/p)) - x, f) = 1` for every prime `p | n`.
pub fn is_irreducible(f: &PolyGF2) -> Result<bool> {
    let n = check_input(f, "irreducibility test")?;
    if n == 0 {
        return Err(Error::domain("constants are neither irreducible nor reducible"));
    }
    let x = PolyGF2::x();
    let frob = |k: usize| -> PolyGF2 {
        (0..k).fold(x.rem(f).unwrap(), |acc, _| acc.square_mod(f).unwrap())
    };
    if frob(n) != x.rem(f).unwrap() {
        return Ok(false);
    }
    for (p, _) in factor_integer(n as u64)? {
        let h = &frob(n / p as usize) + &x;
        if !f.gcd(&h).is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Factors `f` with the default seed.
pub fn factor(f: &PolyGF2) -> Result<FactorizationGF2> {
    factor_seeded(f, DEFAULT_SEED)
}

/// Factors `f`; the seed only steers the equal-degree splitting, never the result.
pub fn factor_seeded(f: &PolyGF2, seed: u64) -> Result<FactorizationGF2> {
    let deg = check_input(f, "factorization")?;
    if deg == 0 {
        return Err(Error::domain("cannot factor a constant polynomial"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(FactorizationGF2 { factors: factoring::factor(f, &mut rng) })
}

/// Degrees of the irreducible factors of `x^q - 1` for odd `q`, ascending.
pub fn factor_xq_minus_1(q: u64) -> Result<Vec<usize>> {
    if q == 0 || q % 2 == 0 {
        return Err(Error::domain(format!("x^q - 1 needs odd q >= 1, got {q}")));
    }
    if q as u128 > MAX_DEGREE as u128 {
        return Err(Error::resource(format!("degree {q} exceeds the limit of {MAX_DEGREE}")));
    }
    let fac = factor(&PolyGF2::x_pow_minus_one(q as usize))?;
    debug_assert!(fac.is_squarefree());
    Ok(fac.degrees())
}

/// The degrees `<= max_degree` among the irreducible factors of `x^q - 1`, ascending.
///
/// Same pipeline as [`factor_xq_minus_1`], but distinct-degree splitting
/// stops at `max_degree`, so large `q` with high-degree factors stay cheap.
pub fn factor_xq_minus_1_up_to(q: u64, max_degree: usize) -> Result<Vec<usize>> {
    if q == 0 || q % 2 == 0 {
        return Err(Error::domain(format!("x^q - 1 needs odd q >= 1, got {q}")));
    }
    if q as u128 > MAX_DEGREE as u128 {
        return Err(Error::resource(format!("degree {q} exceeds the limit of {MAX_DEGREE}")));
    }
    let f = PolyGF2::x_pow_minus_one(q as usize);
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut degrees = Vec::new();
    for (part, mult) in factoring::squarefree_parts(&f) {
        if mult != 1 {
            return Err(Error::domain("x^q - 1 is squarefree for odd q"));
        }
        for (block, d) in factoring::distinct_degree_bounded(&part, max_degree) {
            let count = factoring::equal_degree(&block, d, &mut rng).len();
            degrees.extend(std::iter::repeat_n(d, count));
        }
    }
    degrees.sort_unstable();
    Ok(degrees)
}
