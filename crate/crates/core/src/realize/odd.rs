use std::collections::HashSet;

use super::types::{Cardinal, OddCertificate, RealizabilityAnswer, WitnessRing};
use crate::abgroup::integer::mersenne;
use crate::error::{Error, Result};

/// Writes an odd `k` as `prod (2^n_i - 1)` with every `n_i >= 2`.
///
/// Depth-first over nonincreasing exponents, largest first, so the first
/// hit is the lexicographically largest exponent sequence. Dead ends are
/// memoized on `(remaining, largest allowed exponent)`.
pub fn odd_product_decomposition(k: u64) -> Result<Option<OddCertificate>> {
    if k == 0 || k % 2 == 0 {
        return Err(Error::domain(format!("expected an odd positive integer, got {k}")));
    }
    let candidates: Vec<u32> = (2..=64u32).rev().filter(|&n| k as u128 % mersenne(n) == 0).collect();
    let mut dead = HashSet::new();
    let mut path = Vec::new();
    if search(k, 64, &candidates, &mut dead, &mut path) {
        Ok(Some(OddCertificate { exponents: path }))
    } else {
        Ok(None)
    }
}

fn search(
    remaining: u64,
    bound: u32,
    candidates: &[u32],
    dead: &mut HashSet<(u64, u32)>,
    path: &mut Vec<u32>,
) -> bool {
    if remaining == 1 {
        return true;
    }
    if dead.contains(&(remaining, bound)) {
        return false;
    }
    for &n in candidates.iter().filter(|&&n| n <= bound) {
        let m = mersenne(n) as u64;
        if remaining % m == 0 {
            path.push(n);
            if search(remaining / m, n, candidates, dead, path) {
                return true;
            }
            path.pop();
        }
    }
    dead.insert((remaining, bound));
    false
}

/// Decides whether some commutative ring has exactly `lambda` units.
///
/// Infinite cardinals are witnessed by a rational function field over
/// GF(2), positive even counts `2m` by `Z[x]/(x^2, m x)`, and odd counts
/// by a product of fields exactly when a certificate exists.
pub fn realize_cardinal(lambda: &Cardinal) -> RealizabilityAnswer {
    match *lambda {
        Cardinal::Infinite(_) => RealizabilityAnswer::yes(
            WitnessRing::rational_function_field(lambda).expect("infinite"),
            None,
        ),
        Cardinal::Finite(0) => RealizabilityAnswer::no(
            "every unit group contains the identity, so no ring has zero units",
        ),
        Cardinal::Finite(k) if k % 2 == 0 => {
            RealizabilityAnswer::yes(WitnessRing::even_unit_ring(k / 2).expect("k >= 2"), None)
        }
        Cardinal::Finite(k) => match odd_product_decomposition(k).expect("odd and positive") {
            Some(cert) => RealizabilityAnswer::yes(
                WitnessRing::product_of_fields(cert.field_degrees()).expect("degrees >= 1"),
                Some(cert),
            ),
            None => RealizabilityAnswer::no(format!(
                "{k} is odd and is not a product of numbers of the form 2^n - 1"
            )),
        },
    }
}
