use super::field::PrimeField;
use super::mat::{kernel_basis, rref, Mat};
use crate::{Error, Result};

/// A subspace of GF(p)^n, stored as the canonical RREF of a basis.
///
/// Two subspaces are equal iff their basis matrices are identical, so
/// `PartialEq` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn from_mat(m: &Mat) -> Self {
        let red = rref(m);
        let rows: Vec<Vec<u32>> = (0..red.rank).map(|i| red.matrix.row(i).to_vec()).collect();
        Subspace {
            ambient: m.cols(),
            basis: Mat::from_rows(m.field(), m.cols(), &rows),
            pivots: red.pivot_cols,
        }
    }

    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        Subspace::from_mat(&Mat::from_rows(field, ambient, vectors))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(field: PrimeField, ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vecs: Vec<Vec<u32>> = indices
            .into_iter()
            .map(|i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Subspace::span(field, ambient, &vecs)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.row_vecs()
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivots
    }

    /// Indices of the standard basis vectors spanning the canonical complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Residue of `v` modulo the subspace: zero at every pivot column.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        let f = self.field();
        let mut out = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (o, &b) in out.iter_mut().zip(self.basis.row(r)) {
                if b != 0 {
                    *o = f.mul_add(*o, neg, b);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool> {
        self.check_len(v.len())?;
        Ok(self.reduce(v).iter().all(|&x| x == 0))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Subspace::from_mat(&self.basis.vstack(&other.basis)))
    }

    /// Intersection via the kernel of `[A^T | -B^T]`: each kernel vector
    /// `(l, m)` gives the common element `l A = m B`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let f = self.field();
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(f, self.ambient));
        }
        let concat = self.basis.transpose().hstack(&other.basis.transpose().scale(f.neg(1)));
        let ker = kernel_basis(&concat);
        let da = self.dim();
        let vecs: Vec<Vec<u32>> = ker
            .basis_vectors()
            .into_iter()
            .map(|k| {
                let coeffs = Mat::from_rows(f, da, &[k[..da].to_vec()]);
                coeffs.mul(&self.basis).row(0).to_vec()
            })
            .collect();
        Ok(Subspace::span(f, self.ambient, &vecs))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(self == other)
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: len,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn lattice_identities() {
        let f = gf(5);
        let v = Subspace::span(f, 3, &[vec![1, 2, 0], vec![0, 1, 4]]);
        assert_eq!(v.sum(&v).unwrap(), v);
        assert_eq!(v.intersect(&Subspace::full(f, 3)).unwrap(), v);
        assert_eq!(v.intersect(&Subspace::zero(f, 3)).unwrap().dim(), 0);
        assert!(v.contains(&[1, 3, 4]).unwrap());
        assert!(!v.contains(&[0, 0, 1]).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let f = gf(3);
        let a = Subspace::zero(f, 2);
        let b = Subspace::zero(f, 3);
        assert!(matches!(a.sum(&b), Err(Error::AmbientMismatch { .. })));
        assert!(a.intersect(&b).is_err());
        assert!(a.contains(&[0, 0, 0]).is_err());
    }

    #[test]
    fn complement_and_reduce() {
        let f = gf(7);
        let v = Subspace::span(f, 4, &[vec![0, 1, 1, 0]]);
        assert_eq!(v.complement_indices(), vec![0, 2, 3]);
        assert_eq!(v.reduce(&[0, 1, 0, 0]), vec![0, 0, 6, 0]);
    }

    fn arb_space(p: u32, n: usize) -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(proptest::collection::vec(0..p, n), 0..5)
            .prop_map(move |vs| Subspace::span(gf(p), n, &vs))
    }

    proptest! {
        #[test]
        fn modular_law(a in arb_space(3, 5), b in arb_space(3, 5)) {
            let s = a.sum(&b).unwrap();
            let i = a.intersect(&b).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
            prop_assert!(i.is_subspace_of(&a).unwrap());
            prop_assert!(i.is_subspace_of(&b).unwrap());
        }

        #[test]
        fn canonical_form(a in arb_space(5, 4)) {
            let again = Subspace::span(gf(5), 4, &a.basis_vectors().into_iter().rev().collect::<Vec<_>>());
            prop_assert!(a.equals(&again).unwrap());
        }
    }
}
