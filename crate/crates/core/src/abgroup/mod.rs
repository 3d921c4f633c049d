//! Finite abelian groups in primary decomposition, plus the integer
//! factorization needed to get them there.

pub mod integer;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use integer::{factor_integer, is_prime};

/// Orders beyond this are refused by [`AbelianGroup::order_statistics`].
pub const ORDER_STATISTICS_LIMIT: u128 = 1 << 40;

/// Largest field degree whose unit group `C_{2^d - 1}` we factor.
pub const MAX_FIELD_DEGREE: u32 = 64;

/// A finite abelian group stored as its multiset of prime-power cyclic factors.
///
/// Entries are sorted by prime, then exponent, so structural equality is
/// isomorphism.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u64, u32)>", into = "Vec<(u64, u32)>")]
pub struct AbelianGroup {
    primary: Vec<(u64, u32)>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Builds a group from `(prime, exponent)` pairs in any order.
    pub fn from_primary(mut primary: Vec<(u64, u32)>) -> Result<Self> {
        for &(p, e) in &primary {
            if !is_prime(p) {
                return Err(Error::domain(format!("{p} is not prime")));
            }
            if e == 0 {
                return Err(Error::domain(format!("zero exponent for prime {p}")));
            }
        }
        primary.sort_unstable();
        let group = Self { primary };
        group.order()?;
        Ok(group)
    }

    /// `C_{m_1} x ... x C_{m_k}`, refined into prime-power parts.
    pub fn from_cyclic_orders(orders: &[u64]) -> Result<Self> {
        let mut primary = Vec::new();
        for &m in orders {
            if m == 0 {
                return Err(Error::domain("cyclic group of order 0"));
            }
            primary.extend(factor_integer(m)?);
        }
        primary.sort_unstable();
        let group = Self { primary };
        group.order()?;
        Ok(group)
    }

    /// `C_{p^e_1} x ... x C_{p^e_k}` for a single prime.
    pub fn p_group(p: u64, exponents: &[u32]) -> Result<Self> {
        Self::from_primary(exponents.iter().map(|&e| (p, e)).collect())
    }

    pub fn primary(&self) -> &[(u64, u32)] {
        &self.primary
    }

    pub fn is_trivial(&self) -> bool {
        self.primary.is_empty()
    }

    /// Group order; errors if it does not fit in 128 bits.
    pub fn order(&self) -> Result<u128> {
        self.primary.iter().try_fold(1u128, |acc, &(p, e)| {
            (p as u128)
                .checked_pow(e)
                .and_then(|q| acc.checked_mul(q))
                .ok_or_else(|| Error::resource("group order exceeds 128 bits"))
        })
    }

    /// Distinct primes dividing the order.
    pub fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.primary.iter().map(|&(p, _)| p).collect();
        ps.dedup();
        ps
    }

    /// Least common multiple of the cyclic factor orders.
    pub fn exponent(&self) -> u128 {
        let mut best: BTreeMap<u64, u32> = BTreeMap::new();
        for &(p, e) in &self.primary {
            let slot = best.entry(p).or_default();
            *slot = (*slot).max(e);
        }
        // Divides the order, which already fits.
        best.into_iter().map(|(p, e)| (p as u128).pow(e)).product()
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        self.primary.iter().all(|&(q, _)| q == p)
    }

    pub fn is_elementary_abelian(&self, p: u64) -> bool {
        self.primary.iter().all(|&(q, e)| q == p && e == 1)
    }

    /// True iff every prime dividing the order is odd.
    pub fn has_odd_order(&self) -> bool {
        self.primary.iter().all(|&(p, _)| p != 2)
    }

    /// Invariant factors `d_1 | d_2 | ... | d_r`, derived from the primary form.
    pub fn invariant_factors(&self) -> Vec<u128> {
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &(p, e) in &self.primary {
            by_prime.entry(p).or_default().push(e);
        }
        let rank = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u128; rank];
        for (p, mut exps) in by_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (i, e) in exps.into_iter().enumerate() {
                factors[rank - 1 - i] *= (p as u128).pow(e);
            }
        }
        factors
    }

    /// Direct product.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let mut primary = self.primary.clone();
        primary.extend_from_slice(&other.primary);
        primary.sort_unstable();
        let group = Self { primary };
        group.order()?;
        Ok(group)
    }

    /// Exact number of elements of each order.
    ///
    /// Within one prime `p`, the elements killed by `p^k` number
    /// `p^(sum_i min(e_i, k))`; differences give exact counts, and the
    /// Sylow parts combine multiplicatively.
    pub fn order_statistics(&self) -> Result<OrderStatistics> {
        if self.order()? > ORDER_STATISTICS_LIMIT {
            return Err(Error::resource("order statistics limited to groups of order <= 2^40"));
        }
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &(p, e) in &self.primary {
            by_prime.entry(p).or_default().push(e);
        }
        let mut stats: BTreeMap<u64, u64> = BTreeMap::from([(1, 1)]);
        for (p, exps) in by_prime {
            let top = *exps.iter().max().unwrap();
            let killed = |k: u32| p.pow(exps.iter().map(|&e| e.min(k)).sum::<u32>());
            let mut next = BTreeMap::new();
            for (&d, &c) in &stats {
                next.insert(d, c);
                for k in 1..=top {
                    let exact = killed(k) - killed(k - 1);
                    *next.entry(d * p.pow(k)).or_default() += c * exact;
                }
            }
            stats = next;
        }
        Ok(OrderStatistics(stats))
    }
}

/// Isomorphism test: equal canonical primary decompositions.
pub fn iso_test(g: &AbelianGroup, h: &AbelianGroup) -> bool {
    g == h
}

/// `(GF(2^d_1) x ... x GF(2^d_k))^x`, i.e. `C_{2^d_1 - 1} x ... x C_{2^d_k - 1}`.
pub fn units_of_field_product(degrees: &[u32]) -> Result<AbelianGroup> {
    let mut orders = Vec::with_capacity(degrees.len());
    let mut total = 1u128;
    for &d in degrees {
        if d == 0 {
            return Err(Error::domain("field degree must be at least 1"));
        }
        if d > MAX_FIELD_DEGREE {
            return Err(Error::resource(format!("field degree {d} exceeds {MAX_FIELD_DEGREE}")));
        }
        let m = integer::mersenne(d);
        total = total
            .checked_mul(m)
            .ok_or_else(|| Error::resource("unit group order exceeds 128 bits"))?;
        orders.push(m as u64);
    }
    AbelianGroup::from_cyclic_orders(&orders)
}

impl TryFrom<Vec<(u64, u32)>> for AbelianGroup {
    type Error = Error;

    fn try_from(primary: Vec<(u64, u32)>) -> Result<Self> {
        Self::from_primary(primary)
    }
}

impl From<AbelianGroup> for Vec<(u64, u32)> {
    fn from(g: AbelianGroup) -> Self {
        g.primary
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primary.is_empty() {
            return f.write_str("C1");
        }
        for (i, &(p, e)) in self.primary.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "C{}", (p as u128).pow(e))?;
        }
        Ok(())
    }
}

/// Parses the group grammar: cyclic orders joined by `x` or `,`, each an
/// optional `C` followed by a positive integer. `C1` is the trivial group.
pub fn parse_cyclic_orders(text: &str) -> Result<Vec<u64>> {
    let tokens: Vec<&str> = text
        .split([',', 'x', 'X', '\u{d7}'])
        .map(str::trim)
        .collect();
    if tokens.iter().all(|t| t.is_empty()) {
        return Err(Error::usage("empty group specification"));
    }
    tokens
        .into_iter()
        .map(|tok| {
            let digits = tok.strip_prefix(['C', 'c']).unwrap_or(tok).trim();
            match digits.parse::<u64>() {
                Ok(0) => Err(Error::usage(format!("cyclic order must be positive: {tok:?}"))),
                Ok(m) => Ok(m),
                Err(_) => Err(Error::usage(format!("bad cyclic factor: {tok:?}"))),
            }
        })
        .collect()
}

impl FromStr for AbelianGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_cyclic_orders(&parse_cyclic_orders(s)?)
    }
}

/// Number of elements of each exact order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderStatistics(pub BTreeMap<u64, u64>);

impl OrderStatistics {
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn count_of_order(&self, d: u64) -> u64 {
        self.0.get(&d).copied().unwrap_or(0)
    }

    pub(crate) fn record(&mut self, order: u64, count: u64) {
        *self.0.entry(order).or_default() += count;
    }
}
