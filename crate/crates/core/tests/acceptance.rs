//! End-to-end acceptance checks. Runs without the libtest harness so every
//! criterion prints exactly one PASS/FAIL line.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unitring_core::abgroup::{units_of_field_product, AbelianGroup};
use unitring_core::gf2ext::tensor_split_explicit;
use unitring_core::gf2poly::{factor, factor_xq_minus_1, PolyGF2};
use unitring_core::oracle::{
    build_product_of_fields, build_s_ring, enumerate_units, r2m_unit_survey, verify_witness, Expected,
};
use unitring_core::realize::{
    mersenne_power_check, realize_cardinal, realize_group_odd, realize_p_group, s_ring_degrees,
    s_ring_subset_search,
};
use unitring_core::{Cardinal, WitnessRing};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Primary decomposition of `n` by trial division.
fn prime_powers(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for d in (1..=n.min(max)).rev() {
            prefix.push(d);
            go(n - d, d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every abelian group of order `n`, one per isomorphism class.
fn groups_of_order(n: u64) -> Vec<AbelianGroup> {
    let mut groups = vec![Vec::new()];
    for (p, e) in prime_powers(n) {
        let mut next = Vec::new();
        for g in &groups {
            for part in partitions(e) {
                let mut h: Vec<(u64, u32)> = g.clone();
                h.extend(part.iter().map(|&k| (p, k)));
                next.push(h);
            }
        }
        groups = next;
    }
    groups.into_iter().map(|g| AbelianGroup::from_primary(g).unwrap()).collect()
}

fn criterion_1() -> String {
    const BOUND: usize = 1 << 20;
    let mut reachable = vec![false; BOUND];
    reachable[1] = true;
    for n in 2..=20 {
        let m = (1usize << n) - 1;
        for k in 1..BOUND {
            if reachable[k] && k * m < BOUND {
                reachable[k * m] = true;
            }
        }
    }
    let mut count = 0;
    for k in (1..BOUND).step_by(2) {
        let answer = realize_cardinal(&Cardinal::Finite(k as u64));
        assert_eq!(answer.realizable, reachable[k], "k = {k}");
        if answer.realizable {
            count += 1;
            let cert = answer.certificate.expect("odd yes-answers carry a certificate");
            assert_eq!(cert.value(), Some(k as u128));
            let Some(WitnessRing::ProductOfFields { degrees }) = answer.witness else {
                panic!("k = {k}: expected a product of fields");
            };
            assert_eq!(units_of_field_product(&degrees).unwrap().order().unwrap(), k as u128);
        }
    }
    for k in [1, 3, 7, 9, 15, 21] {
        assert!(reachable[k] && realize_cardinal(&Cardinal::Finite(k as u64)).realizable);
    }
    for k in [5, 11, 13, 35] {
        assert!(!reachable[k] && !realize_cardinal(&Cardinal::Finite(k as u64)).realizable);
    }
    format!("{count} realizable odd k < 2^20, all agree")
}

fn criterion_2() -> String {
    for m in 1..=1000u64 {
        let s = r2m_unit_survey(m).unwrap();
        assert_eq!(s.count, 2 * m);
        let c2cm = AbelianGroup::from_cyclic_orders(&[2, m]).unwrap();
        assert_eq!(s.orders, c2cm.order_statistics().unwrap(), "m = {m}");
    }
    "m = 1..=1000".into()
}

fn criterion_3() -> String {
    for a in 1..=10u32 {
        for b in 1..=10u32 {
            let degrees = tensor_split_explicit(a, b).unwrap();
            assert_eq!(degrees.len() as u64, gcd(a as u64, b as u64), "a = {a}, b = {b}");
            assert_eq!(degrees.iter().sum::<u64>(), (a * b) as u64, "a = {a}, b = {b}");
        }
    }
    "a, b in 1..=10".into()
}

fn criterion_4() -> String {
    let mut checked = 0;
    for q in (3..=243u64).step_by(2) {
        let pp = prime_powers(q);
        if pp.len() != 1 {
            continue;
        }
        // x^q - 1 is the product of cyclotomic polynomials Phi_d, d | q, and
        // Phi_d splits into phi(d)/ord_d(2) factors of degree ord_d(2).
        let mut expected = Vec::new();
        for d in (1..=q).filter(|d| q % d == 0) {
            let phi = (1..=d).filter(|&i| gcd(i, d) == 1).count() as u64;
            let ord = if d == 1 {
                1
            } else {
                (1..).find(|&k| (1..=k).fold(1u64, |acc, _| acc * 2 % d) == 1).unwrap()
            };
            expected.extend(std::iter::repeat_n(ord as usize, (phi / ord) as usize));
        }
        expected.sort_unstable();
        let mut got = factor_xq_minus_1(q).unwrap();
        got.sort_unstable();
        assert_eq!(got, expected, "q = {q}");
        assert_eq!(got.iter().sum::<usize>() as u64, q);
        let full = factor(&PolyGF2::x_pow_minus_one(q as usize)).unwrap();
        assert!(full.factors().iter().all(|&(_, e)| e == 1), "q = {q}");
        checked += 1;
    }
    format!("{checked} odd prime powers q <= 243")
}

fn criterion_5() -> String {
    let mut groups = 0;
    for p in (3..=127u64).filter(|&p| is_prime(p)) {
        let mersenne = [3, 7, 31, 127].contains(&p);
        for e in 1..=5 {
            for part in partitions(e) {
                let g = AbelianGroup::p_group(p, &part).unwrap();
                let elementary = part.iter().all(|&k| k == 1);
                let w = realize_p_group(p, &g).unwrap();
                assert_eq!(w.is_some(), mersenne && elementary, "p = {p}, {g}");
                let general = realize_group_odd(&g).unwrap();
                assert_eq!(general.is_some(), w.is_some(), "p = {p}, {g}");
                if let Some(WitnessRing::ProductOfFields { degrees }) = &w {
                    assert!(unitring_core::abgroup::iso_test(&units_of_field_product(degrees).unwrap(), &g));
                }
                groups += 1;
            }
        }
    }
    assert!(mersenne_power_check(63).unwrap());
    format!("{groups} p-groups, mersenne_power_check(63) holds")
}

fn agree_and_verify(g: &AbelianGroup) {
    let first = realize_group_odd(g).unwrap();
    let second = s_ring_subset_search(g).unwrap();
    assert_eq!(first.is_some(), second.is_some(), "deciders disagree on {g}");
    let expected = Expected::Group(g.clone());
    if let Some(w) = first {
        assert!(verify_witness(&w, &expected).unwrap().verified, "{g}: {w:?}");
    }
    if let Some(degrees) = second {
        let w = WitnessRing::product_of_fields(degrees).unwrap();
        assert!(verify_witness(&w, &expected).unwrap().verified, "{g}: {w:?}");
    }
}

fn criterion_6() -> String {
    let mut exhaustive = 0;
    for n in (1..=500u64).step_by(2) {
        for g in groups_of_order(n) {
            agree_and_verify(&g);
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..200 {
        let n = rng.gen_range(0..5000u64) * 2 + 1;
        let all = groups_of_order(n);
        let g = &all[rng.gen_range(0..all.len())];
        agree_and_verify(g);
    }
    format!("{exhaustive} groups with |G| <= 500 plus 200 random with |G| <= 10^4")
}

fn criterion_7() -> String {
    let mut multisets = 0;
    for n in 1..=16 {
        for degrees in partitions(n) {
            let u = enumerate_units(&build_product_of_fields(&degrees).unwrap());
            let predicted = units_of_field_product(&degrees).unwrap();
            let formula: u64 = degrees.iter().map(|&d| (1u64 << d) - 1).product();
            assert_eq!(u.count, formula, "{degrees:?}");
            assert_eq!(u.orders, predicted.order_statistics().unwrap(), "{degrees:?}");
            multisets += 1;
        }
    }
    let mut s_rings = 0;
    for n in (1..=16u64).step_by(2) {
        for g in groups_of_order(n) {
            let s = build_s_ring(&g).unwrap();
            let degrees = s_ring_degrees(&g).unwrap();
            assert_eq!(degrees.dimension(), s.dim() as u128, "{g}");
            assert_eq!(s.dim() as u64, n);
            let flat: Vec<u32> = degrees.to_vec_desc().iter().map(|&d| d as u32).collect();
            let predicted = units_of_field_product(&flat).unwrap();
            let u = enumerate_units(&s);
            assert_eq!(u.count as u128, predicted.order().unwrap(), "{g}");
            assert_eq!(u.orders, predicted.order_statistics().unwrap(), "{g}");
            s_rings += 1;
        }
    }
    format!("{multisets} degree multisets, {s_rings} S-rings")
}

fn criterion_8() -> String {
    let labels = ["inf", "infinite", "Infinity", "aleph0", "aleph_1", "aleph_17", "ALEPH5"];
    for label in labels {
        let c: Cardinal = label.parse().unwrap();
        let answer = realize_cardinal(&c);
        assert!(answer.realizable, "{label}");
        let w = answer.witness.unwrap();
        assert!(matches!(w, WitnessRing::RationalFunctionField { .. }), "{label}");
        assert!(verify_witness(&w, &Expected::Cardinal(c)).unwrap().verified);
    }
    format!("{} infinite labels", labels.len())
}

fn main() -> ExitCode {
    type Check = fn() -> String;
    let criteria: [(u32, &str, Check, Option<u64>); 8] = [
        (1, "odd cardinals agree with the exhaustive product oracle", criterion_1, Some(30)),
        (2, "R_2m has 2m units forming C2 x Cm", criterion_2, Some(10)),
        (3, "explicit tensor splitting", criterion_3, Some(10)),
        (4, "cyclotomic splitting of x^q - 1", criterion_4, None),
        (5, "p-group criterion", criterion_5, None),
        (6, "two deciders agree and witnesses verify", criterion_6, Some(120)),
        (7, "brute-force unit enumeration matches prediction", criterion_7, None),
        (8, "infinite cardinals get F_2(S)", criterion_8, None),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, name, check, limit) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let over_time = limit.is_some_and(|s| elapsed > Duration::from_secs(s));
        let budget = limit.map(|s| format!(" / limit {s}s")).unwrap_or_default();
        match result {
            Ok(detail) if !over_time => {
                println!("[PASS] criterion {n}: {name} ({detail}; {elapsed:.2?}{budget})");
            }
            Ok(_) => {
                failed += 1;
                println!("[FAIL] criterion {n}: {name} (took {elapsed:.2?}{budget})");
            }
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("[FAIL] criterion {n}: {name} ({msg})");
            }
        }
    }
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
