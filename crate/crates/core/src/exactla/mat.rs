use std::fmt;

use super::field::PrimeField;
use super::subspace::Subspace;

/// A dense matrix over GF(p), stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Output of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Mat,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl Mat {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of residues. All rows must have length `cols`.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r.iter().map(|&v| v % field.p()));
        }
        Mat {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix from signed integer rows, reducing mod p.
    pub fn from_i64_rows(field: PrimeField, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Mat::from_rows(field, cols, &rows)
    }

    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Mat::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged column");
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v % field.p());
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.mul_add(cur, a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in product");
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0u32, |acc, (&a, &b)| f.mul_add(acc, a, b))
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Mat {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: u32) -> Mat {
        let f = self.field;
        Mat {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, s)).collect(),
        }
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut out = Mat::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.row_mut(i)[..self.cols].copy_from_slice(self.row(i));
            out.row_mut(i)[self.cols..].copy_from_slice(other.row(i));
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// Column space, as a subspace of `rows`-dimensional space.
    pub fn image(&self) -> Subspace {
        Subspace::from_mat(&self.transpose())
    }

    pub fn kernel(&self) -> Subspace {
        kernel_basis(self)
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form with first-nonzero pivoting.
pub fn rref(m: &Mat) -> Rref {
    let f = m.field;
    let mut a = m.clone();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(pr) = (r..a.rows).find(|&i| a.get(i, c) != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..a.cols {
                a.data.swap(pr * a.cols + j, r * a.cols + j);
            }
        }
        let inv = f.inv(a.get(r, c));
        for v in a.row_mut(r)[c..].iter_mut() {
            *v = f.mul(*v, inv);
        }
        let pivot_row: Vec<u32> = a.row(r)[c..].to_vec();
        for i in 0..a.rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c);
            if factor == 0 {
                continue;
            }
            let neg = f.neg(factor);
            let row = a.row_mut(i);
            for (v, &pv) in row[c..].iter_mut().zip(&pivot_row) {
                if pv != 0 {
                    *v = f.mul_add(*v, neg, pv);
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    Rref {
        matrix: a,
        rank: r,
        pivot_cols,
    }
}

/// Canonical basis of the right kernel `{v : m v = 0}`.
pub fn kernel_basis(m: &Mat) -> Subspace {
    let f = m.field;
    let red = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &c in &red.pivot_cols {
        is_pivot[c] = true;
    }
    let mut vecs = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; m.cols];
        v[free] = 1;
        for (r, &pc) in red.pivot_cols.iter().enumerate() {
            v[pc] = f.neg(red.matrix.get(r, free));
        }
        vecs.push(v);
    }
    Subspace::span(f, m.cols, &vecs)
}

/// One solution of `m x = rhs` with free variables set to zero, or `None`.
pub fn solve(m: &Mat, rhs: &[u32]) -> Option<Vec<u32>> {
    assert_eq!(rhs.len(), m.rows, "rhs length mismatch");
    let f = m.field;
    let aug = m.hstack(&Mat::from_columns(f, m.rows, &[rhs.to_vec()]));
    let red = rref(&aug);
    if red.pivot_cols.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![0u32; m.cols];
    for (r, &pc) in red.pivot_cols.iter().enumerate() {
        x[pc] = red.matrix.get(r, m.cols);
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_zero_and_identity() {
        let f = gf(7);
        let z = rref(&Mat::zeros(f, 2, 2));
        assert_eq!(z.rank, 0);
        assert!(z.pivot_cols.is_empty());
        let id = Mat::identity(f, 3);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);
    }

    #[test]
    fn rref_hand_example_gf5() {
        let f = gf(5);
        let m = Mat::from_i64_rows(f, &[&[1, 2], &[2, 4]]);
        let r = rref(&m);
        assert_eq!(r.matrix, Mat::from_i64_rows(f, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(7);
        assert_eq!(kernel_basis(&Mat::identity(f, 2)).dim(), 0);
        assert_eq!(kernel_basis(&Mat::zeros(f, 2, 3)).dim(), 3);
        let m = Mat::from_i64_rows(f, &[&[1, 1, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 2);
        for v in k.basis_vectors() {
            assert_eq!(f.add(v[0], v[1]), 0);
            assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn solve_examples() {
        let f = gf(11);
        let v = vec![3, 4, 5];
        assert_eq!(solve(&Mat::identity(f, 3), &v), Some(v));
        assert_eq!(solve(&Mat::zeros(f, 2, 2), &[1, 0]), None);
        assert_eq!(solve(&Mat::zeros(f, 2, 2), &[0, 0]), Some(vec![0, 0]));
    }

    fn arb_mat(p: u32) -> impl Strategy<Value = Mat> {
        (0usize..6, 0usize..6).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(0..p, r * c).prop_map(move |d| {
                let rows: Vec<Vec<u32>> = d.chunks(c.max(1)).take(r).map(|x| x.to_vec()).collect();
                if c == 0 {
                    Mat::zeros(gf(p), r, 0)
                } else {
                    Mat::from_rows(gf(p), c, &rows)
                }
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in arb_mat(5)) {
            let once = rref(&m).matrix;
            prop_assert_eq!(rref(&once).matrix, once);
        }

        #[test]
        fn row_rank_equals_column_rank(m in arb_mat(3)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn kernel_vectors_are_killed(m in arb_mat(7)) {
            let k = kernel_basis(&m);
            prop_assert_eq!(k.dim(), m.cols() - m.rank());
            for v in k.basis_vectors() {
                prop_assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
            }
        }

        #[test]
        fn solve_recovers_consistent_rhs(m in arb_mat(13), seed in 0u32..1000) {
            let x: Vec<u32> = (0..m.cols()).map(|i| (seed.wrapping_mul(31) + i as u32 * 7) % 13).collect();
            let b = m.mul_vec(&x);
            let sol = solve(&m, &b).expect("consistent system");
            prop_assert_eq!(m.mul_vec(&sol), b);
        }
    }
}
