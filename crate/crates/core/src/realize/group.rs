use std::collections::HashSet;

use super::types::WitnessRing;
use crate::abgroup::integer::{integer_root, is_prime, mersenne, split_over_primes};
use crate::abgroup::AbelianGroup;
use crate::error::{Error, Result};

type Primary = Vec<(u64, u32)>;

/// A cyclic block `C_{2^n - 1}` in primary form.
struct Block {
    degree: u32,
    parts: Primary,
}

fn check_odd(g: &AbelianGroup) -> Result<()> {
    if !g.has_odd_order() {
        return Err(Error::domain(format!(
            "{g} has even order; even-order groups are outside the odd-order classification \
             (the unit-group problem for abelian 2-groups is open)"
        )));
    }
    Ok(())
}

/// Finds field degrees `d_i` with `prod C_{2^d_i - 1}` isomorphic to `g`.
///
/// Exact cover of the primary multiset of `g` by the primary parts of
/// the `C_{2^n - 1}` that fit, tried largest block first. The first cover
/// found is the lexicographically largest nonincreasing degree sequence.
pub fn realize_group_odd(g: &AbelianGroup) -> Result<Option<WitnessRing>> {
    check_odd(g)?;
    if g.is_trivial() {
        return Ok(Some(WitnessRing::product_of_fields(vec![1])?));
    }
    let order = g.order()?;
    let primes = g.primes();
    let target: Primary = g.primary().to_vec();
    let mut blocks = Vec::new();
    for n in (2..=127u32).rev() {
        let m = mersenne(n);
        if m > order || order % m != 0 {
            continue;
        }
        let (parts, rest) = split_over_primes(m, &primes);
        if rest == 1 && remove_all(&target, &parts).is_some() {
            blocks.push(Block { degree: n, parts });
        }
    }
    let mut dead = HashSet::new();
    let mut path = Vec::new();
    if cover(&target, 0, &blocks, &mut dead, &mut path) {
        Ok(Some(WitnessRing::product_of_fields(path)?))
    } else {
        Ok(None)
    }
}

/// Multiset difference `have - take`, or `None` if `take` is not contained.
fn remove_all(have: &[(u64, u32)], take: &[(u64, u32)]) -> Option<Primary> {
    let mut rest = have.to_vec();
    for part in take {
        let pos = rest.iter().position(|x| x == part)?;
        rest.remove(pos);
    }
    Some(rest)
}

fn cover(
    remaining: &[(u64, u32)],
    first_block: usize,
    blocks: &[Block],
    dead: &mut HashSet<(Primary, usize)>,
    path: &mut Vec<u32>,
) -> bool {
    if remaining.is_empty() {
        return true;
    }
    let key = (remaining.to_vec(), first_block);
    if dead.contains(&key) {
        return false;
    }
    for (i, block) in blocks.iter().enumerate().skip(first_block) {
        if let Some(rest) = remove_all(remaining, &block.parts) {
            path.push(block.degree);
            // Blocks may repeat, so recurse from `i`, not `i + 1`.
            if cover(&rest, i, blocks, dead, path) {
                return true;
            }
            path.pop();
        }
    }
    dead.insert(key);
    false
}

/// Odd-prime `p`-group case: realizable iff `p = 2^n - 1` is a Mersenne
/// prime and `g` is elementary abelian, witnessed by `rank` copies of GF(2^n).
pub fn realize_p_group(p: u64, g: &AbelianGroup) -> Result<Option<WitnessRing>> {
    if p == 2 {
        return Err(Error::domain(
            "the elementary-abelian criterion does not hold for p = 2: C4 is the unit group of GF(5)",
        ));
    }
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if !g.is_p_group(p) {
        return Err(Error::domain(format!("{g} is not a {p}-group")));
    }
    let p1 = p as u128 + 1;
    if !p1.is_power_of_two() || !g.is_elementary_abelian(p) {
        return Ok(None);
    }
    let n = p1.trailing_zeros();
    let rank = g.primary().len();
    let degrees = if rank == 0 { vec![1] } else { vec![n; rank] };
    Ok(Some(WitnessRing::product_of_fields(degrees)?))
}

/// Checks that no `2^n - 1` with `2 <= n <= n_max` is a perfect power.
pub fn mersenne_power_check(n_max: u32) -> Result<bool> {
    if !(2..=63).contains(&n_max) {
        return Err(Error::domain(format!("n_max must be in 2..=63, got {n_max}")));
    }
    for n in 2..=n_max {
        let v = mersenne(n) as u64;
        for z in 2..=63 {
            let r = integer_root(v, z);
            if r >= 2 && (r as u128).pow(z) == v as u128 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::{iso_test, units_of_field_product};

    fn group(s: &str) -> AbelianGroup {
        s.parse().unwrap()
    }

    fn degrees(w: Option<WitnessRing>) -> Option<Vec<u32>> {
        w.map(|w| match w {
            WitnessRing::ProductOfFields { degrees } => degrees,
            other => panic!("unexpected witness {other:?}"),
        })
    }

    #[test]
    fn odd_group_examples() {
        assert_eq!(degrees(realize_group_odd(&group("C3 x C3")).unwrap()), Some(vec![2, 2]));
        assert_eq!(degrees(realize_group_odd(&group("C21")).unwrap()), Some(vec![3, 2]));
        assert_eq!(degrees(realize_group_odd(&group("C9")).unwrap()), None);
        assert_eq!(degrees(realize_group_odd(&group("C1")).unwrap()), Some(vec![1]));
        assert_eq!(degrees(realize_group_odd(&group("C63")).unwrap()), Some(vec![6]));
        assert_eq!(degrees(realize_group_odd(&group("C3 x C3 x C7")).unwrap()), Some(vec![3, 2, 2]));
        assert!(matches!(realize_group_odd(&group("C4")), Err(Error::Domain(_))));
    }

    #[test]
    fn witnesses_have_the_right_units() {
        for name in ["C3 x C3", "C21", "C63", "C3 x C63 x C7", "C31 x C31 x C3", "C8191", "C3 x C5 x C17"] {
            let g = group(name);
            let d = degrees(realize_group_odd(&g).unwrap()).unwrap();
            assert!(iso_test(&units_of_field_product(&d).unwrap(), &g), "{name}");
        }
    }

    #[test]
    fn large_mersenne_blocks() {
        // 2^61 - 1 is prime.
        let g = AbelianGroup::from_primary(vec![((1 << 61) - 1, 1), (7, 1)]).unwrap();
        assert_eq!(degrees(realize_group_odd(&g).unwrap()), Some(vec![61, 3]));
    }

    #[test]
    fn p_group_examples() {
        assert_eq!(degrees(realize_p_group(3, &group("C3 x C3")).unwrap()), Some(vec![2, 2]));
        assert_eq!(degrees(realize_p_group(5, &group("C5")).unwrap()), None);
        assert_eq!(degrees(realize_p_group(7, &group("C49")).unwrap()), None);
        assert_eq!(degrees(realize_p_group(7, &group("C7 x C7 x C7")).unwrap()), Some(vec![3, 3, 3]));
        assert!(realize_p_group(2, &group("C2")).unwrap_err().to_string().contains("does not hold"));
        assert!(realize_p_group(9, &group("C9")).is_err());
        assert!(realize_p_group(3, &group("C5")).is_err());
    }

    #[test]
    fn perfect_power_check() {
        assert!(mersenne_power_check(2).unwrap());
        assert!(mersenne_power_check(10).unwrap());
        assert!(mersenne_power_check(63).unwrap());
        assert!(mersenne_power_check(1).is_err());
        assert!(mersenne_power_check(64).is_err());
    }
}
