use serde::{Deserialize, Serialize};

use crate::abgroup::AbelianGroup;
use crate::error::{Error, Result};
use crate::gf2ext::FieldCtx;

/// Enumeration guard: algebras have at most `2^20` elements.
pub const MAX_ALGEBRA_DIM: usize = 20;

/// A finite-dimensional commutative GF(2)-algebra given by structure constants.
///
/// Elements are bit vectors in a `u32`, bit `i` being the coefficient of
/// basis element `i`. `table[i][j]` is the product of basis elements
/// `i` and `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    labels: Vec<String>,
    table: Vec<Vec<u32>>,
    one: u32,
    /// `(first basis index, degree)` per field when built as a product of fields.
    fields: Option<Vec<(usize, u32)>>,
}

impl FiniteAlgebra {
    /// Validates commutativity, associativity on all basis triples and the identity.
    pub fn new(labels: Vec<String>, table: Vec<Vec<u32>>, one: u32) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::domain("algebra of dimension 0"));
        }
        if dim > MAX_ALGEBRA_DIM {
            return Err(Error::resource(format!("dimension {dim} exceeds {MAX_ALGEBRA_DIM}")));
        }
        let mask = if dim == 32 { u32::MAX } else { (1u32 << dim) - 1 };
        if table.len() != dim || table.iter().any(|row| row.len() != dim) {
            return Err(Error::domain("multiplication table must be dim x dim"));
        }
        if table.iter().flatten().any(|&v| v & !mask != 0) || one & !mask != 0 {
            return Err(Error::domain("table entry outside the span of the basis"));
        }
        let alg = Self { labels, table, one, fields: None };
        for i in 0..dim {
            for j in 0..dim {
                if alg.table[i][j] != alg.table[j][i] {
                    return Err(Error::domain(format!("not commutative at ({i}, {j})")));
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                let ij = alg.table[i][j];
                for k in 0..dim {
                    if alg.mul(ij, 1 << k) != alg.mul(1 << i, alg.table[j][k]) {
                        return Err(Error::domain(format!("not associative at ({i}, {j}, {k})")));
                    }
                }
            }
        }
        for i in 0..dim {
            if alg.mul(one, 1 << i) != 1 << i {
                return Err(Error::domain("one_vector is not an identity"));
            }
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn one(&self) -> u32 {
        self.one
    }

    /// Degrees of the field factors, if built by [`build_product_of_fields`].
    pub fn field_degrees(&self) -> Option<Vec<u32>> {
        self.fields.as_ref().map(|f| f.iter().map(|&(_, d)| d).collect())
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let mut acc = 0;
        let mut ai = a;
        while ai != 0 {
            let i = ai.trailing_zeros() as usize;
            ai &= ai - 1;
            let row = &self.table[i];
            let mut bj = b;
            while bj != 0 {
                let j = bj.trailing_zeros() as usize;
                bj &= bj - 1;
                acc ^= row[j];
            }
        }
        acc
    }

    /// Columns of the matrix of `v -> u v`.
    pub(crate) fn multiplication_columns(&self, u: u32) -> Vec<u32> {
        (0..self.dim())
            .map(|j| {
                let mut col = 0;
                let mut ui = u;
                while ui != 0 {
                    let i = ui.trailing_zeros() as usize;
                    ui &= ui - 1;
                    col ^= self.table[i][j];
                }
                col
            })
            .collect()
    }
}

/// `GF(2^d_1) x ... x GF(2^d_k)` with basis `1, x, ..., x^{d_i - 1}` per field.
pub fn build_product_of_fields(degrees: &[u32]) -> Result<FiniteAlgebra> {
    if degrees.is_empty() {
        return Err(Error::domain("empty product of fields"));
    }
    if degrees.contains(&0) {
        return Err(Error::domain("field degrees must be at least 1"));
    }
    let dim: usize = degrees.iter().map(|&d| d as usize).sum();
    if dim > MAX_ALGEBRA_DIM {
        return Err(Error::resource(format!("total dimension {dim} exceeds {MAX_ALGEBRA_DIM}")));
    }
    let mut labels = Vec::with_capacity(dim);
    let mut table = vec![vec![0u32; dim]; dim];
    let mut one = 0u32;
    let mut fields = Vec::new();
    let mut offset = 0;
    for (f, &d) in degrees.iter().enumerate() {
        let ctx = FieldCtx::new(d)?;
        for a in 0..d as usize {
            labels.push(format!("f{f}.x^{a}"));
            for b in 0..d as usize {
                let prod = ctx.elem(1 << a).mul(&ctx.elem(1 << b))?.bits() as u32;
                table[offset + a][offset + b] = prod << offset;
            }
        }
        one |= (ctx.one().bits() as u32) << offset;
        fields.push((offset, d));
        offset += d as usize;
    }
    let mut alg = FiniteAlgebra::new(labels, table, one)?;
    alg.fields = Some(fields);
    Ok(alg)
}

/// The group algebra `GF(2)[x_1..x_k]/(x_i^{q_i} - 1)` of `g`, one
/// variable per prime-power cyclic factor, with the monomial basis.
pub fn build_s_ring(g: &AbelianGroup) -> Result<FiniteAlgebra> {
    let moduli: Vec<usize> = g.primary().iter().map(|&(p, e)| (p as usize).pow(e)).collect();
    let dim = g.order()?;
    if dim > MAX_ALGEBRA_DIM as u128 {
        return Err(Error::resource(format!("S-ring dimension {dim} exceeds {MAX_ALGEBRA_DIM}")));
    }
    let dim = dim as usize;
    let exponents = |mut idx: usize| -> Vec<usize> {
        moduli
            .iter()
            .map(|&q| {
                let e = idx % q;
                idx /= q;
                e
            })
            .collect()
    };
    let index = |exps: &[usize]| -> usize {
        exps.iter().zip(&moduli).rev().fold(0, |acc, (&e, &q)| acc * q + e)
    };
    let mut labels = Vec::with_capacity(dim);
    let mut table = vec![vec![0u32; dim]; dim];
    for i in 0..dim {
        let ei = exponents(i);
        let label: Vec<String> = ei
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, e)| format!("x{}^{e}", v + 1))
            .collect();
        labels.push(if label.is_empty() { "1".to_string() } else { label.join("*") });
        for j in 0..dim {
            let ej = exponents(j);
            let sum: Vec<usize> = ei.iter().zip(&ej).zip(&moduli).map(|((a, b), q)| (a + b) % q).collect();
            table[i][j] = 1 << index(&sum);
        }
    }
    FiniteAlgebra::new(labels, table, 1)
}

/// Projection of a product of fields onto the factors listed in `keep`.
pub fn quotient_drop_factors(a: &FiniteAlgebra, keep: &[usize]) -> Result<FiniteAlgebra> {
    let fields = a
        .fields
        .as_ref()
        .ok_or_else(|| Error::domain("algebra was not built as a product of fields"))?;
    if keep.is_empty() {
        return Err(Error::domain("keeping no factors gives the zero ring"));
    }
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if let Some(&bad) = keep.iter().find(|&&k| k >= fields.len()) {
        return Err(Error::domain(format!("factor index {bad} out of range")));
    }
    // Old basis index -> new basis index for the kept coordinates.
    let mut old_to_new = vec![None; a.dim()];
    let mut new_fields = Vec::new();
    let mut next = 0;
    for &k in &keep {
        let (off, d) = fields[k];
        new_fields.push((next, d));
        for t in 0..d as usize {
            old_to_new[off + t] = Some(next);
            next += 1;
        }
    }
    let project = |v: u32| -> u32 {
        (0..a.dim())
            .filter(|&i| v >> i & 1 == 1)
            .filter_map(|i| old_to_new[i])
            .fold(0, |acc, n| acc | 1 << n)
    };
    let kept: Vec<usize> = (0..a.dim()).filter(|&i| old_to_new[i].is_some()).collect();
    let labels = kept.iter().map(|&i| a.labels[i].clone()).collect();
    let table = kept
        .iter()
        .map(|&i| kept.iter().map(|&j| project(a.table[i][j])).collect())
        .collect();
    let mut q = FiniteAlgebra::new(labels, table, project(a.one))?;
    q.fields = Some(new_fields);
    Ok(q)
}

/// JSON debug form: hex rows of the multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub mul_table: Vec<Vec<String>>,
    pub one_vector: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field_degrees: Option<Vec<u32>>,
}

impl From<&FiniteAlgebra> for AlgebraJson {
    fn from(a: &FiniteAlgebra) -> Self {
        Self {
            dim: a.dim(),
            basis_labels: a.labels.clone(),
            mul_table: a
                .table
                .iter()
                .map(|row| row.iter().map(|v| format!("{v:x}")).collect())
                .collect(),
            one_vector: format!("{:x}", a.one),
            field_degrees: a.field_degrees(),
        }
    }
}

impl TryFrom<AlgebraJson> for FiniteAlgebra {
    type Error = Error;

    fn try_from(j: AlgebraJson) -> Result<Self> {
        let hex = |s: &str| {
            u32::from_str_radix(s, 16).map_err(|_| Error::usage(format!("bad hex entry {s:?}")))
        };
        if j.dim != j.basis_labels.len() {
            return Err(Error::usage("dim does not match the number of basis labels"));
        }
        let table = j
            .mul_table
            .iter()
            .map(|row| row.iter().map(|s| hex(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut alg = FiniteAlgebra::new(j.basis_labels, table, hex(&j.one_vector)?)?;
        if let Some(degrees) = j.field_degrees {
            let rebuilt = build_product_of_fields(&degrees)?;
            if rebuilt.table != alg.table {
                return Err(Error::usage("field_degrees do not match the table"));
            }
            alg.fields = rebuilt.fields;
        }
        Ok(alg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_ring_structure() {
        let g: AbelianGroup = "C3".parse().unwrap();
        let s = build_s_ring(&g).unwrap();
        assert_eq!(s.dim(), 3);
        assert_eq!(s.mul(0b010, 0b100), 1); // x * x^2 = 1
        let s = build_s_ring(&"C3 x C3".parse().unwrap()).unwrap();
        assert_eq!(s.dim(), 9);
        let s = build_s_ring(&"C9".parse().unwrap()).unwrap();
        assert_eq!(s.labels()[8], "x1^8");
        assert!(matches!(build_s_ring(&"C21".parse().unwrap()), Err(Error::Resource(_))));
    }

    #[test]
    fn construction_checks() {
        let labels = vec!["a".to_string(), "b".to_string()];
        // Not commutative.
        assert!(FiniteAlgebra::new(labels.clone(), vec![vec![1, 2], vec![0, 2]], 1).is_err());
        // No identity.
        assert!(FiniteAlgebra::new(labels.clone(), vec![vec![0, 0], vec![0, 0]], 1).is_err());
        // GF(2) x GF(2) works.
        assert!(FiniteAlgebra::new(labels, vec![vec![1, 0], vec![0, 2]], 3).is_ok());
        assert!(matches!(build_product_of_fields(&[10, 11]), Err(Error::Resource(_))));
        assert!(build_product_of_fields(&[]).is_err());
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // Basis 1, a, b with a*a = b, a*b = 0, b*b = a: (a a) b = 0 but a (a b)... check.
        let labels = vec!["1".into(), "a".into(), "b".into()];
        let table = vec![vec![1, 2, 4], vec![2, 4, 0], vec![4, 0, 2]];
        assert!(FiniteAlgebra::new(labels, table, 1).is_err());
    }

    #[test]
    fn quotients() {
        let a = build_product_of_fields(&[1, 2, 3]).unwrap();
        let q = quotient_drop_factors(&a, &[1, 2]).unwrap();
        assert_eq!(q.field_degrees(), Some(vec![2, 3]));
        assert_eq!(q.dim(), 5);
        assert!(quotient_drop_factors(&a, &[]).is_err());
        assert!(quotient_drop_factors(&a, &[3]).is_err());
        let s = build_s_ring(&"C3".parse().unwrap()).unwrap();
        assert!(quotient_drop_factors(&s, &[0]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = build_product_of_fields(&[2, 3]).unwrap();
        let j = AlgebraJson::from(&a);
        let text = serde_json::to_string(&j).unwrap();
        let back: AlgebraJson = serde_json::from_str(&text).unwrap();
        assert_eq!(FiniteAlgebra::try_from(back).unwrap(), a);
    }
}
