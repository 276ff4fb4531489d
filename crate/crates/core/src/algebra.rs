//! Short local algebras given by structure constants.
//!
//! The basis is `1, x_1..x_e, z_1..z_a` where the `x_i` lift a basis of
//! `J/J^2` and the `z_m` are a basis of `J^2`. Products of two radical
//! generators are `x_i x_j = sum_m c[i][j][m] z_m`; every product with a
//! `z_m` on either side vanishes because `J^3 = 0`.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::exactla::{rref, Mat, PrimeField, Subspace};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct ShortLocalAlgebra {
    field: PrimeField,
    e: usize,
    a: usize,
    /// `products[i * e + j]` holds the `a` coefficients of `x_i x_j`.
    products: Vec<Vec<u32>>,
    x_names: Vec<String>,
    z_names: Vec<String>,
}

/// An element of the algebra in the basis `(1, x_1..x_e, z_1..z_a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AlgebraElement(pub Vec<u32>);

impl AlgebraElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn unit_part(&self) -> u32 {
        self.0[0]
    }

    pub fn in_radical(&self) -> bool {
        self.0[0] == 0
    }
}

impl ShortLocalAlgebra {
    /// Validates the structure tensor `c[i][j][m]` and the span condition.
    pub fn new(field: PrimeField, e: usize, a: usize, c: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        if c.len() != e || c.iter().any(|row| row.len() != e || row.iter().any(|z| z.len() != a)) {
            return Err(Error::BadShape(format!("structure tensor must be {e}x{e}x{a}")));
        }
        let products = c
            .into_iter()
            .flatten()
            .map(|z| z.into_iter().map(|v| v % field.p()).collect())
            .collect();
        let alg = ShortLocalAlgebra {
            field,
            e,
            a,
            products,
            x_names: default_names("x", e),
            z_names: default_names("z", a),
        };
        let rank = alg.product_rank();
        if rank != a {
            return Err(Error::SpanDeficient { rank, declared: a });
        }
        Ok(alg)
    }

    /// Builds an algebra from a sparse list of nonzero products
    /// `(i, j, coefficients)`, indices 0-based, coefficients signed.
    pub fn from_products(field: PrimeField, e: usize, a: usize, products: &[(usize, usize, Vec<i64>)]) -> Result<Self> {
        let mut c = vec![vec![vec![0u32; a]; e]; e];
        for (i, j, z) in products {
            if *i >= e || *j >= e || z.len() != a {
                return Err(Error::BadShape(format!("product entry ({i}, {j}) with {} coefficients", z.len())));
            }
            c[*i][*j] = z.iter().map(|&v| field.from_i64(v)).collect();
        }
        ShortLocalAlgebra::new(field, e, a, c)
    }

    pub fn with_names(mut self, x_names: Vec<String>, z_names: Vec<String>) -> Result<Self> {
        if x_names.len() != self.e || z_names.len() != self.a {
            return Err(Error::BadShape("name lists must have lengths e and a".into()));
        }
        self.x_names = x_names;
        self.z_names = z_names;
        Ok(self)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// `dim J/J^2`.
    #[inline]
    pub fn e(&self) -> usize {
        self.e
    }

    /// `dim J^2`.
    #[inline]
    pub fn a(&self) -> usize {
        self.a
    }

    /// Total dimension `1 + e + a`.
    #[inline]
    pub fn dim(&self) -> usize {
        1 + self.e + self.a
    }

    pub fn hilbert_type(&self) -> (usize, usize) {
        (self.e, self.a)
    }

    pub fn x_names(&self) -> &[String] {
        &self.x_names
    }

    pub fn z_names(&self) -> &[String] {
        &self.z_names
    }

    /// Coefficients of `x_i x_j` in the `z` basis.
    #[inline]
    pub fn product(&self, i: usize, j: usize) -> &[u32] {
        &self.products[i * self.e + j]
    }

    /// Rank of the `e^2 x a` matrix of products.
    pub fn product_rank(&self) -> usize {
        if self.a == 0 || self.e == 0 {
            return 0;
        }
        rref(&Mat::from_rows(self.field, self.a, &self.products)).rank
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis_element(0)
    }

    pub fn x(&self, i: usize) -> AlgebraElement {
        assert!(i < self.e);
        self.basis_element(1 + i)
    }

    pub fn z(&self, m: usize) -> AlgebraElement {
        assert!(m < self.a);
        self.basis_element(1 + self.e + m)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement(vec![0; self.dim()])
    }

    pub fn basis_element(&self, idx: usize) -> AlgebraElement {
        let mut v = vec![0; self.dim()];
        v[idx] = 1;
        AlgebraElement(v)
    }

    /// Element from signed coefficients in basis order.
    pub fn element(&self, coeffs: &[i64]) -> Result<AlgebraElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::BadShape(format!(
                "element needs {} coefficients, got {}",
                self.dim(),
                coeffs.len()
            )));
        }
        Ok(AlgebraElement(coeffs.iter().map(|&v| self.field.from_i64(v)).collect()))
    }

    pub fn multiply(&self, u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
        let f = self.field;
        let (e, a) = (self.e, self.a);
        let (u, v) = (u.coeffs(), v.coeffs());
        debug_assert_eq!(u.len(), self.dim());
        debug_assert_eq!(v.len(), self.dim());
        let mut out = vec![0u32; self.dim()];
        let (ua, va) = (u[0], v[0]);
        out[0] = f.mul(ua, va);
        for k in 1..=e + a {
            out[k] = f.add(f.mul(ua, v[k]), f.mul(va, u[k]));
        }
        for i in 0..e {
            if u[1 + i] == 0 {
                continue;
            }
            for j in 0..e {
                let coef = f.mul(u[1 + i], v[1 + j]);
                if coef == 0 {
                    continue;
                }
                for (m, &c) in self.product(i, j).iter().enumerate() {
                    if c != 0 {
                        out[1 + e + m] = f.mul_add(out[1 + e + m], coef, c);
                    }
                }
            }
        }
        AlgebraElement(out)
    }

    pub fn add(&self, u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
        AlgebraElement(u.0.iter().zip(&v.0).map(|(&x, &y)| self.field.add(x, y)).collect())
    }

    pub fn scale(&self, s: u32, u: &AlgebraElement) -> AlgebraElement {
        AlgebraElement(u.0.iter().map(|&x| self.field.mul(s, x)).collect())
    }

    /// Matrix of `v -> x v` acting on column vectors of coordinates.
    pub fn left_mult_matrix(&self, x: &AlgebraElement) -> Mat {
        let n = self.dim();
        let cols: Vec<Vec<u32>> = (0..n)
            .map(|k| self.multiply(x, &self.basis_element(k)).0)
            .collect();
        Mat::from_columns(self.field, n, &cols)
    }

    /// Matrix of `v -> v x`.
    pub fn right_mult_matrix(&self, x: &AlgebraElement) -> Mat {
        let n = self.dim();
        let cols: Vec<Vec<u32>> = (0..n)
            .map(|k| self.multiply(&self.basis_element(k), x).0)
            .collect();
        Mat::from_columns(self.field, n, &cols)
    }

    /// The opposite algebra: `c_op[i][j] = c[j][i]`.
    pub fn opposite(&self) -> ShortLocalAlgebra {
        let e = self.e;
        let mut products = Vec::with_capacity(e * e);
        for i in 0..e {
            for j in 0..e {
                products.push(self.product(j, i).to_vec());
            }
        }
        ShortLocalAlgebra {
            products,
            ..self.clone()
        }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.e).all(|i| (0..i).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// Radical `J`, as a subspace of the algebra.
    pub fn radical(&self) -> Subspace {
        Subspace::coordinate(self.field, self.dim(), 1..self.dim())
    }

    /// `J^2`, as a subspace of the algebra.
    pub fn radical_square(&self) -> Subspace {
        Subspace::coordinate(self.field, self.dim(), 1 + self.e..self.dim())
    }

    /// Recomputes `(dim J/J^2, dim J^2)` from multiplication matrices and
    /// checks `J^3 = 0`. Used to cross-validate the declared Hilbert type.
    pub fn recompute_hilbert_type(&self) -> Result<(usize, usize)> {
        let n = self.dim();
        let f = self.field;
        let radical: Vec<AlgebraElement> = (1..n).map(|k| self.basis_element(k)).collect();
        let mats: Vec<Mat> = radical.iter().map(|r| self.left_mult_matrix(r)).collect();
        let j = self.radical();
        let mut j2_vecs = Vec::new();
        for m in &mats {
            for v in j.basis_vectors() {
                j2_vecs.push(m.mul_vec(&v));
            }
        }
        let j2 = Subspace::span(f, n, &j2_vecs);
        for m1 in &mats {
            for m2 in &mats {
                let m12 = m1.mul(m2);
                if mats.iter().any(|m3| !m12.mul(m3).is_zero()) {
                    return Err(Error::BadShape("J^3 != 0".into()));
                }
            }
        }
        Ok((j.dim() - j2.dim(), j2.dim()))
    }

    pub fn to_file(&self) -> AlgebraFile {
        let mut products = Vec::new();
        for i in 0..self.e {
            for j in 0..self.e {
                let z = self.product(i, j);
                if z.iter().any(|&c| c != 0) {
                    products.push(ProductEntry {
                        i: i + 1,
                        j: j + 1,
                        z: z.iter().map(|&c| self.field.to_signed(c)).collect(),
                    });
                }
            }
        }
        AlgebraFile {
            p: self.field.p(),
            e: self.e,
            a: self.a,
            x_names: Some(self.x_names.clone()),
            z_names: Some(self.z_names.clone()),
            products,
        }
    }

    /// Returns a copy over another prime field. Constants are read as signed
    /// integers in `(-p/2, p/2]` and reduced into the new field.
    pub fn change_field(&self, field: PrimeField) -> Result<Self> {
        let mut file = self.to_file();
        file.p = field.p();
        file.into_algebra()
    }
}

fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

impl fmt::Debug for ShortLocalAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ShortLocalAlgebra(e={}, a={}, {})", self.e, self.a, self.field)
    }
}

impl fmt::Display for ShortLocalAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "short local algebra over {}", self.field)?;
        writeln!(f, "Hilbert type (e, a) = ({}, {})", self.e, self.a)?;
        for i in 0..self.e {
            for j in 0..self.e {
                let z = self.product(i, j);
                if z.iter().all(|&c| c == 0) {
                    continue;
                }
                let terms: Vec<String> = z
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(m, &c)| match self.field.to_signed(c) {
                        1 => self.z_names[m].clone(),
                        -1 => format!("-{}", self.z_names[m]),
                        s => format!("{s}*{}", self.z_names[m]),
                    })
                    .collect();
                writeln!(f, "  {}*{} = {}", self.x_names[i], self.x_names[j], terms.join(" + "))?;
            }
        }
        Ok(())
    }
}

/// One nonzero product in an algebra file: `x_i x_j = sum z[m] z_m`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub z: Vec<i64>,
}

/// On-disk JSON form of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub p: u32,
    pub e: usize,
    pub a: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z_names: Option<Vec<String>>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
}

impl AlgebraFile {
    pub fn into_algebra(self) -> Result<ShortLocalAlgebra> {
        let field = PrimeField::new(self.p)?;
        let mut entries = Vec::with_capacity(self.products.len());
        for pe in self.products {
            if pe.i == 0 || pe.j == 0 || pe.i > self.e || pe.j > self.e {
                return Err(Error::BadShape(format!("product index ({}, {}) outside 1..={}", pe.i, pe.j, self.e)));
            }
            entries.push((pe.i - 1, pe.j - 1, pe.z));
        }
        let mut alg = ShortLocalAlgebra::from_products(field, self.e, self.a, &entries)?;
        if let Some(x) = self.x_names {
            let z = self.z_names.unwrap_or_else(|| default_names("z", self.a));
            alg = alg.with_names(x, z)?;
        } else if let Some(z) = self.z_names {
            alg = alg.with_names(default_names("x", self.e), z)?;
        }
        Ok(alg)
    }
}

impl ShortLocalAlgebra {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str::<AlgebraFile>(s)?.into_algebra()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("algebra serializes")
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Three generators x, y, z with x*x = z1 and z*y = z2.
    fn fib_algebra() -> ShortLocalAlgebra {
        ShortLocalAlgebra::from_products(gf(32003), 3, 2, &[(0, 0, vec![1, 0]), (2, 1, vec![0, 1])]).unwrap()
    }

    #[test]
    fn radical_square_zero_algebra() {
        let alg = ShortLocalAlgebra::new(gf(7), 2, 0, vec![vec![vec![]; 2]; 2]).unwrap();
        assert_eq!(alg.hilbert_type(), (2, 0));
        assert!(alg.is_commutative());
        assert_eq!(alg.recompute_hilbert_type().unwrap(), (2, 0));
    }

    #[test]
    fn span_deficient_is_rejected() {
        let err = ShortLocalAlgebra::new(gf(7), 2, 1, vec![vec![vec![0]; 2]; 2]).unwrap_err();
        assert!(matches!(err, Error::SpanDeficient { rank: 0, declared: 1 }));
        let err = ShortLocalAlgebra::new(gf(7), 2, 1, vec![vec![vec![0]; 2]; 1]).unwrap_err();
        assert!(matches!(err, Error::BadShape(_)));
    }

    #[test]
    fn fibonacci_algebra_products() {
        let alg = fib_algebra();
        let (x, y, z) = (alg.x(0), alg.x(1), alg.x(2));
        assert_eq!(alg.multiply(&x, &x), alg.z(0));
        assert_eq!(alg.multiply(&z, &y), alg.z(1));
        assert!(alg.multiply(&x, &y).is_zero());
        assert!(alg.multiply(&y, &z).is_zero());
        assert_eq!(alg.multiply(&alg.one(), &y), y);
        assert_eq!(alg.recompute_hilbert_type().unwrap(), (3, 2));
        assert!(!alg.is_commutative());
    }

    #[test]
    fn left_multiplication_matrices() {
        let alg = fib_algebra();
        let f = alg.field();
        assert_eq!(alg.left_mult_matrix(&alg.one()), Mat::identity(f, alg.dim()));
        for m in 0..alg.a() {
            for i in 0..alg.e() {
                let prod = alg.left_mult_matrix(&alg.z(m)).mul(&alg.left_mult_matrix(&alg.x(i)));
                assert!(prod.is_zero());
            }
        }
        // images of J under the x_i span J^2
        let mut stacked = Vec::new();
        for i in 0..alg.e() {
            let lm = alg.left_mult_matrix(&alg.x(i));
            for k in 1..alg.dim() {
                stacked.push(lm.column(k));
            }
        }
        assert_eq!(Subspace::span(f, alg.dim(), &stacked).dim(), alg.a());
    }

    #[test]
    fn opposite_is_an_involution() {
        let alg = fib_algebra();
        let op = alg.opposite();
        assert_eq!(op.hilbert_type(), alg.hilbert_type());
        assert_eq!(op.multiply(&op.x(1), &op.x(2)), op.z(1));
        assert_eq!(op.opposite(), alg);
    }

    #[test]
    fn json_round_trip() {
        let alg = fib_algebra();
        let back = ShortLocalAlgebra::from_json(&alg.to_json()).unwrap();
        assert_eq!(back, alg);
        let bad = r#"{"p": 7, "e": 2, "a": 1, "products": [{"i": 3, "j": 1, "z": [1]}]}"#;
        assert!(matches!(ShortLocalAlgebra::from_json(bad), Err(Error::BadShape(_))));
        let notprime = r#"{"p": 8, "e": 1, "a": 0}"#;
        assert!(matches!(ShortLocalAlgebra::from_json(notprime), Err(Error::NotPrime(8))));
    }

    fn arb_element(p: u32, n: usize) -> impl Strategy<Value = AlgebraElement> {
        proptest::collection::vec(0..p, n).prop_map(AlgebraElement)
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(
            u in arb_element(5, 6),
            v in arb_element(5, 6),
            w in arb_element(5, 6),
            cs in proptest::collection::vec(0u32..5, 18),
        ) {
            let f = gf(5);
            let mut c = vec![vec![vec![0u32; 2]; 3]; 3];
            for (k, v) in cs.iter().enumerate() {
                c[k / 6][(k / 2) % 3][k % 2] = *v;
            }
            // force the span condition
            c[0][0] = vec![1, 0];
            c[1][1] = vec![0, 1];
            let alg = ShortLocalAlgebra::new(f, 3, 2, c).unwrap();
            let lhs = alg.multiply(&alg.multiply(&u, &v), &w);
            let rhs = alg.multiply(&u, &alg.multiply(&v, &w));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
