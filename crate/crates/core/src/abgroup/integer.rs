//! 64-bit integer factorization: trial division, deterministic Miller-Rabin
//! and Brent's variant of Pollard rho.

use crate::error::{Error, Result};

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

// Trial division bound before switching to rho.
const TRIAL_BOUND: u64 = 1 << 10;

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: u128, b: u128) -> Option<u128> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for the full `u64` range.
///
/// The first twelve primes as Miller-Rabin bases are sufficient for every
/// `n < 3.3 * 10^24`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Finds a nontrivial divisor of an odd composite `n`.
///
/// Iterates `x -> x^2 + c` with Brent's cycle detection and batched gcds.
/// On failure the additive constant is incremented, so the sequence of
/// attempts is the same on every run.
fn rho_divisor(n: u64) -> u64 {
    const BATCH: u64 = 128;
    let mut c = 1u64;
    loop {
        let step = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut y = 2u64;
        let mut x = y;
        let mut ys = y;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = step(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q as u128, n as u128) as u64;
                k += BATCH;
            }
            r <<= 1;
        }
        if g == n {
            // Batched product collapsed; walk the last batch one step at a time.
            loop {
                ys = step(ys);
                g = gcd(x.abs_diff(ys) as u128, n as u128) as u64;
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = rho_divisor(n);
    split_into(d, out);
    split_into(n / d, out);
}

/// Complete prime factorization of `n`, as `(prime, exponent)` pairs sorted by prime.
pub fn factor_integer(n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::domain("cannot factor zero"));
    }
    let mut rest = n;
    let mut primes = Vec::new();
    let tz = rest.trailing_zeros();
    for _ in 0..tz {
        primes.push(2);
    }
    rest >>= tz;
    let mut p = 3u64;
    while p < TRIAL_BOUND && p * p <= rest {
        while rest % p == 0 {
            primes.push(p);
            rest /= p;
        }
        p += 2;
    }
    if rest > 1 {
        if rest < TRIAL_BOUND * TRIAL_BOUND || is_prime(rest) {
            primes.push(rest);
        } else {
            split_into(rest, &mut primes);
        }
    }
    primes.sort_unstable();
    Ok(collect_powers(&primes))
}

fn collect_powers(sorted: &[u64]) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    for &p in sorted {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Splits `n` over a known set of primes.
///
/// Returns the exponents of each prime in `n` together with the cofactor
/// left after removing all of them. Works for full 128-bit values, which
/// matters for `2^k - 1` with `k > 64`.
pub fn split_over_primes(mut n: u128, primes: &[u64]) -> (Vec<(u64, u32)>, u128) {
    let mut out = Vec::new();
    for &p in primes {
        let p128 = p as u128;
        let mut e = 0;
        while n % p128 == 0 {
            n /= p128;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    (out, n)
}

/// `2^n - 1` for `n <= 128`.
pub fn mersenne(n: u32) -> u128 {
    debug_assert!(n <= 128);
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Exact integer `k`-th root: the largest `r` with `r^k <= n`.
pub fn integer_root(n: u64, k: u32) -> u64 {
    assert!(k >= 1);
    if k == 1 || n < 2 {
        return n;
    }
    let mut r = (n as f64).powf(1.0 / k as f64) as u64;
    let fits = |r: u64| matches!((r as u128).checked_pow(k), Some(v) if v <= n as u128);
    while !fits(r) {
        r -= 1;
    }
    while fits(r + 1) {
        r += 1;
    }
    r
}

/// Multiplicative order of 2 modulo an odd `d > 1`.
pub fn order_of_two_mod(d: u64) -> Result<u64> {
    if d < 3 || d % 2 == 0 {
        return Err(Error::domain(format!("order of 2 mod {d} is undefined")));
    }
    // ord divides the Carmichael function, which divides phi(d).
    let phi = euler_phi(d)?;
    let mut ord = phi;
    for (p, _) in factor_integer(phi)? {
        while ord % p == 0 && pow_mod(2, ord / p, d) == 1 {
            ord /= p;
        }
    }
    Ok(ord)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let mut phi = n;
    for (p, _) in factor_integer(n)? {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let mut divs = vec![1u64];
    for (p, e) in factor_integer(n)? {
        let base = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(base.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    Ok(divs)
}
