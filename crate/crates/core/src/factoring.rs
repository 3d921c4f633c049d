//! Factorization pipeline shared by GF(2)[x] and GF(2^n)[x]: squarefree
//! decomposition, distinct-degree splitting, then equal-degree splitting
//! with the absolute trace to GF(2).

use rand::Rng;

/// Univariate polynomial ring over a field of characteristic 2.
///
/// All methods take `self` as a template for the coefficient field, so
/// implementations that carry a field context need no extra parameter.
pub(crate) trait Char2PolyRing: Clone + Ord {
    fn degree(&self) -> Option<usize>;
    /// Degree of the coefficient field over GF(2).
    fn ground_degree(&self) -> u32;
    fn add(&self, other: &Self) -> Self;
    fn monic(&self) -> Self;
    /// Monic gcd.
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, divisor: &Self) -> Self;
    fn rem(&self, modulus: &Self) -> Self;
    fn square_mod(&self, modulus: &Self) -> Self;
    fn derivative(&self) -> Self;
    /// Square root of a polynomial whose derivative vanishes.
    fn root_of_square(&self) -> Self;
    fn x_like(&self) -> Self;
    fn random_below<R: Rng>(&self, degree: usize, rng: &mut R) -> Self;

    fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    /// `self^(2^n) mod modulus` with `2^n` the size of the coefficient field.
    fn frobenius_mod(&self, modulus: &Self) -> Self {
        (0..self.ground_degree()).fold(self.rem(modulus), |acc, _| acc.square_mod(modulus))
    }
}

/// Squarefree decomposition of a monic `f` of positive degree.
///
/// Returns pairwise coprime squarefree parts with their multiplicities.
pub(crate) fn squarefree_parts<P: Char2PolyRing>(f: &P) -> Vec<(P, u32)> {
    let mut out = Vec::new();
    squarefree_into(f, 1, &mut out);
    out
}

fn squarefree_into<P: Char2PolyRing>(f: &P, scale: u32, out: &mut Vec<(P, u32)>) {
    if f.is_constant() {
        return;
    }
    let df = f.derivative();
    if df.is_zero() {
        squarefree_into(&f.root_of_square(), scale * 2, out);
        return;
    }
    // Yun's loop; whatever survives in `rest` has vanishing derivative.
    let mut rest = f.gcd(&df);
    let mut w = f.div_exact(&rest);
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&rest);
        let z = w.div_exact(&y);
        if !z.is_constant() {
            out.push((z, i * scale));
        }
        i += 1;
        rest = rest.div_exact(&y);
        w = y;
    }
    if !rest.is_constant() {
        squarefree_into(&rest.root_of_square(), scale * 2, out);
    }
}

/// Splits a squarefree monic `f` into products of irreducibles of equal degree.
pub(crate) fn distinct_degree<P: Char2PolyRing>(f: &P) -> Vec<(P, usize)> {
    distinct_degree_bounded(f, usize::MAX)
}

/// Like [`distinct_degree`], but stops after degree `bound`; blocks of
/// irreducibles of larger degree are not reported.
pub(crate) fn distinct_degree_bounded<P: Char2PolyRing>(f: &P, bound: usize) -> Vec<(P, usize)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = f.x_like();
    let mut h = x.rem(&rest);
    let mut d = 0;
    while d < bound && rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.frobenius_mod(&rest);
        let g = rest.gcd(&h.add(&x));
        if !g.is_constant() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        // Everything left is irreducible once d passed half its degree.
        if d >= deg / 2 && deg <= bound {
            out.push((rest, deg));
        }
    }
    out
}

/// Splits a squarefree monic product of irreducibles of degree `d`.
///
/// Each residue field has `2^(n d)` elements, so the absolute trace
/// `T(r) = r + r^2 + ... + r^(2^(n d - 1))` lands in GF(2) on every factor,
/// and `gcd(f, T(r))` separates the factors where it vanishes.
pub(crate) fn equal_degree<P: Char2PolyRing, R: Rng>(f: &P, d: usize, rng: &mut R) -> Vec<P> {
    let deg = f.degree().expect("nonzero");
    if deg == d {
        return vec![f.clone()];
    }
    let steps = f.ground_degree() as usize * d;
    loop {
        let r = f.random_below(deg, rng);
        let mut term = r.rem(f);
        let mut trace = term.clone();
        for _ in 1..steps {
            term = term.square_mod(f);
            trace = trace.add(&term);
        }
        let g = f.gcd(&trace);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < deg {
            let mut parts = equal_degree(&g, d, rng);
            parts.extend(equal_degree(&f.div_exact(&g), d, rng));
            return parts;
        }
    }
}

/// Complete factorization of a polynomial of positive degree, in canonical order.
pub(crate) fn factor<P: Char2PolyRing, R: Rng>(f: &P, rng: &mut R) -> Vec<(P, u32)> {
    let mut out: Vec<(P, u32)> = Vec::new();
    for (part, mult) in squarefree_parts(&f.monic()) {
        for (block, d) in distinct_degree(&part) {
            for irreducible in equal_degree(&block, d, rng) {
                out.push((irreducible, mult));
            }
        }
    }
    out.sort();
    // Parts are coprime, so duplicates cannot occur; merge anyway to keep the invariant local.
    out.dedup_by(|b, a| {
        if a.0 == b.0 {
            a.1 += b.1;
            true
        } else {
            false
        }
    });
    out
}
