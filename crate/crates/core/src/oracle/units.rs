use crate::abgroup::OrderStatistics;
use crate::abgroup::integer::gcd;

use super::algebra::FiniteAlgebra;

/// Exact unit count and order statistics of a finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitSurvey {
    pub count: u64,
    pub orders: OrderStatistics,
}

/// Orders of every unit, visiting each cyclic subgroup once.
///
/// `units` lists the group elements by index, `identity` is the index of
/// one and `multiplier(u)` returns the map `v -> v u`. Walking the powers
/// of `u` gives a cycle of length `k = ord(u)`, and `u^j` has order
/// `k / gcd(j, k)`, so each power is recorded the first time it is seen.
pub(crate) fn order_sweep<F, M>(
    universe: usize,
    identity: usize,
    units: impl IntoIterator<Item = usize>,
    multiplier: F,
) -> UnitSurvey
where
    F: Fn(usize) -> M,
    M: Fn(usize) -> usize,
{
    let mut seen = vec![false; universe];
    let mut orders = OrderStatistics::default();
    let mut count = 0;
    let mut powers = Vec::new();
    for u in units {
        if seen[u] {
            continue;
        }
        let times_u = multiplier(u);
        powers.clear();
        powers.push(identity);
        let mut cur = u;
        while cur != identity {
            powers.push(cur);
            assert!(powers.len() <= universe, "element {u} has no finite order");
            cur = times_u(cur);
        }
        let k = powers.len() as u128;
        for (j, &p) in powers.iter().enumerate() {
            if !seen[p] {
                seen[p] = true;
                count += 1;
                orders.record((k / gcd(j as u128, k)) as u64, 1);
            }
        }
    }
    UnitSurvey { count, orders }
}

/// Units of `a` by brute force over all `2^dim` elements.
///
/// `u` is a unit iff multiplication by `u` is injective, i.e. its matrix
/// has full rank. The matrix is linear in `u`, so elements are visited in
/// Gray-code order and each step flips one basis matrix in.
pub fn enumerate_units(a: &FiniteAlgebra) -> UnitSurvey {
    let dim = a.dim();
    let size = 1usize << dim;
    let basis: Vec<Vec<u32>> = (0..dim).map(|i| a.multiplication_columns(1 << i)).collect();
    let mut cols = vec![0u32; dim];
    let mut is_unit = vec![false; size];
    for step in 1..size {
        let flip = step.trailing_zeros() as usize;
        for (c, b) in cols.iter_mut().zip(&basis[flip]) {
            *c ^= b;
        }
        let u = step ^ (step >> 1);
        is_unit[u] = full_rank(&cols);
    }
    let one = a.one() as usize;
    let units = (1..size).filter(|&u| is_unit[u]);
    order_sweep(size, one, units, |u| {
        let cols = a.multiplication_columns(u as u32);
        move |v: usize| {
            let mut acc = 0u32;
            let mut bits = v as u32;
            while bits != 0 {
                acc ^= cols[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            acc as usize
        }
    })
}

fn full_rank(cols: &[u32]) -> bool {
    let mut basis = [0u32; 32];
    for &v in cols {
        let mut v = v;
        loop {
            if v == 0 {
                return false;
            }
            let top = 31 - v.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = v;
                break;
            }
            v ^= basis[top];
        }
    }
    true
}
