use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::abgroup::integer::mersenne;
use crate::abgroup::{iso_test, units_of_field_product, AbelianGroup};
use crate::error::{Error, Result};
use crate::gf2ext::tensor_split;
use crate::gf2poly::{factor_xq_minus_1, factor_xq_minus_1_up_to};

/// Largest `prod p_i^a_i` for which the group algebra is decomposed.
pub const S_RING_DIMENSION_LIMIT: u128 = 1 << 20;

/// Multiset of field degrees, stored as degree -> multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeMultiset(pub BTreeMap<u64, u64>);

impl DegreeMultiset {
    pub fn from_degrees(degrees: impl IntoIterator<Item = u64>) -> Self {
        let mut m = BTreeMap::new();
        for d in degrees {
            *m.entry(d).or_default() += 1;
        }
        Self(m)
    }

    /// Sum of the degrees, i.e. the GF(2)-dimension of the product of fields.
    pub fn dimension(&self) -> u128 {
        self.0.iter().map(|(&d, &c)| d as u128 * c as u128).sum()
    }

    pub fn count(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn multiplicity(&self, degree: u64) -> u64 {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    /// Expanded degree list, descending.
    pub fn to_vec_desc(&self) -> Vec<u64> {
        self.0
            .iter()
            .rev()
            .flat_map(|(&d, &c)| std::iter::repeat_n(d, c as usize))
            .collect()
    }

    /// Fields of `A (x) B` when `self` and `other` list the fields of `A` and `B`.
    pub fn tensor(&self, other: &Self, max_degree: u64) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (&a, &ca) in &self.0 {
            for (&b, &cb) in &other.0 {
                let split = tensor_split(a as u32, b as u32)?;
                let l = split[0];
                if l <= max_degree {
                    *out.entry(l).or_default() += ca * cb * split.len() as u64;
                }
            }
        }
        Ok(Self(out))
    }
}

fn check(g: &AbelianGroup) -> Result<u128> {
    if !g.has_odd_order() {
        return Err(Error::domain(format!("{g} has even order; the S-ring needs odd order")));
    }
    let dim = g.order()?;
    if dim > S_RING_DIMENSION_LIMIT {
        return Err(Error::resource(format!(
            "S-ring dimension {dim} exceeds the limit of {S_RING_DIMENSION_LIMIT}"
        )));
    }
    Ok(dim)
}

fn cyclic_parts(g: &AbelianGroup) -> impl Iterator<Item = u64> + '_ {
    g.primary().iter().map(|&(p, e)| p.pow(e))
}

/// Field degrees of `S = GF(2)[x_1..x_k]/(x_i^{q_i} - 1)` where `q_i` are
/// the prime-power orders of the cyclic factors of `g`.
///
/// `S` is the tensor product of the `GF(2)[x]/(x^{q_i} - 1)`; each of those
/// splits by the factorization of `x^{q_i} - 1`, and the pieces are
/// combined pairwise with [`tensor_split`].
pub fn s_ring_degrees(g: &AbelianGroup) -> Result<DegreeMultiset> {
    check(g)?;
    let mut acc = DegreeMultiset::from_degrees([1]);
    for q in cyclic_parts(g) {
        let layer = DegreeMultiset::from_degrees(factor_xq_minus_1(q)?.into_iter().map(|d| d as u64));
        acc = acc.tensor(&layer, u64::MAX)?;
    }
    Ok(acc)
}

/// The part of [`s_ring_degrees`] with degree at most `max_degree`.
///
/// Tensoring never lowers degrees, so the small fields of `S` come only
/// from the small fields of the factors.
pub fn s_ring_degrees_up_to(g: &AbelianGroup, max_degree: u64) -> Result<DegreeMultiset> {
    check(g)?;
    let mut acc = DegreeMultiset::from_degrees([1]);
    for q in cyclic_parts(g) {
        let small = factor_xq_minus_1_up_to(q, max_degree as usize)?;
        let layer = DegreeMultiset::from_degrees(small.into_iter().map(|d| d as u64));
        acc = acc.tensor(&layer, max_degree)?;
    }
    Ok(acc)
}

/// Looks for a sub-multiset of the fields of `S` whose unit group is `g`.
///
/// Projecting `S` onto some of its field factors is a quotient, so any
/// hit is a witness. Only degrees `d` with `2^d - 1` dividing `|g|` can
/// appear, which bounds how much of `S` needs decomposing. Degree-1
/// factors contribute nothing and are left out unless `g` is trivial.
pub fn s_ring_subset_search(g: &AbelianGroup) -> Result<Option<Vec<u32>>> {
    let order = check(g)?;
    if g.is_trivial() {
        return Ok(Some(vec![1]));
    }
    let max_degree = 128 - (order + 1).leading_zeros() as u64 - 1;
    let available: Vec<(u32, u64)> = s_ring_degrees_up_to(g, max_degree)?
        .0
        .into_iter()
        .rev()
        .filter(|&(d, _)| d >= 2 && order % mersenne(d as u32) == 0)
        .map(|(d, c)| (d as u32, c))
        .collect();
    let mut chosen = Vec::new();
    Ok(choose(g, order, &available, &mut chosen)?.then_some(chosen))
}

fn choose(
    g: &AbelianGroup,
    remaining: u128,
    available: &[(u32, u64)],
    chosen: &mut Vec<u32>,
) -> Result<bool> {
    if remaining == 1 {
        return Ok(iso_test(&units_of_field_product(chosen)?, g));
    }
    let Some((&(d, avail), rest)) = available.split_first() else {
        return Ok(false);
    };
    let m = mersenne(d);
    let mut max_copies = 0u64;
    let mut r = remaining;
    while max_copies < avail && r % m == 0 {
        r /= m;
        max_copies += 1;
    }
    for copies in (0..=max_copies).rev() {
        let before = chosen.len();
        chosen.extend(std::iter::repeat_n(d, copies as usize));
        if choose(g, remaining / m.pow(copies as u32), rest, chosen)? {
            return Ok(true);
        }
        chosen.truncate(before);
    }
    Ok(false)
}
