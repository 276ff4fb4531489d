//! Sparse vectors and an incremental row-echelon basis.
//!
//! The syzygy engine works in free modules of rank in the thousands, where
//! the relation spaces are very sparse. These types keep the work
//! proportional to the number of nonzeros instead of the ambient dimension
//! squared.

use super::field::PrimeField;
use super::mat::Mat;
use super::subspace::Subspace;

/// Sorted `(index, value)` pairs with nonzero values.
pub type SparseVec = Vec<(usize, u32)>;

pub fn to_dense(v: &SparseVec, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for &(i, x) in v {
        out[i] = x;
    }
    out
}

pub fn from_dense(v: &[u32]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| (i, x))
        .collect()
}

const NO_PIVOT: u32 = u32::MAX;

/// A basis in row-echelon form: every row has a distinct leading column
/// whose entry is 1. Rows are not back-reduced.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    ncols: usize,
    pivot_row: Vec<u32>,
    rows: Vec<SparseVec>,
}

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            pivot_row: vec![NO_PIVOT; ncols],
            rows: Vec::new(),
        }
    }

    /// Wraps rows that are already in echelon form: sorted, with distinct
    /// leading columns whose entries are 1.
    pub fn from_echelon_rows(field: PrimeField, ncols: usize, rows: Vec<SparseVec>) -> Self {
        let mut pivot_row = vec![NO_PIVOT; ncols];
        for (k, r) in rows.iter().enumerate() {
            let (lead, x) = r[0];
            debug_assert_eq!(x, 1);
            debug_assert_eq!(pivot_row[lead], NO_PIVOT);
            pivot_row[lead] = k as u32;
        }
        Echelon {
            field,
            ncols,
            pivot_row,
            rows,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows
    }

    pub fn has_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NO_PIVOT
    }

    /// Number of pivots in columns `lo..hi`.
    pub fn pivots_in(&self, lo: usize, hi: usize) -> usize {
        self.pivot_row[lo..hi].iter().filter(|&&r| r != NO_PIVOT).count()
    }

    /// Residue of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[(usize, u32)]) -> SparseVec {
        let mut buf = vec![0u32; self.ncols];
        self.reduce_with(v, &mut buf)
    }

    fn reduce_with(&self, v: &[(usize, u32)], buf: &mut [u32]) -> SparseVec {
        let f = self.field;
        let Some(&(lead, _)) = v.first() else {
            return Vec::new();
        };
        for &(i, x) in v {
            buf[i] = x;
        }
        let mut out = Vec::new();
        for c in lead..self.ncols {
            let x = buf[c];
            if x == 0 {
                continue;
            }
            buf[c] = 0;
            let r = self.pivot_row[c];
            if r == NO_PIVOT {
                out.push((c, x));
                continue;
            }
            let neg = f.neg(x);
            for &(cc, rv) in &self.rows[r as usize][1..] {
                buf[cc] = f.mul_add(buf[cc], neg, rv);
            }
        }
        out
    }

    pub fn contains(&self, v: &[(usize, u32)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns `true` iff the rank grew.
    pub fn insert(&mut self, v: &[(usize, u32)]) -> bool {
        let mut buf = vec![0u32; self.ncols];
        self.insert_with(v, &mut buf)
    }

    fn insert_with(&mut self, v: &[(usize, u32)], buf: &mut [u32]) -> bool {
        let mut red = self.reduce_with(v, buf);
        let Some(&(lead, x)) = red.first() else {
            return false;
        };
        if x != 1 {
            let inv = self.field.inv(x);
            for e in red.iter_mut() {
                e.1 = self.field.mul(e.1, inv);
            }
        }
        self.pivot_row[lead] = self.rows.len() as u32;
        self.rows.push(red);
        true
    }

    /// Inserts many vectors, reusing one scratch buffer. Returns how many
    /// increased the rank.
    pub fn extend<'a, I>(&mut self, vs: I) -> usize
    where
        I: IntoIterator<Item = &'a SparseVec>,
    {
        let mut buf = vec![0u32; self.ncols];
        vs.into_iter().filter(|v| self.insert_with(v, &mut buf)).count()
    }

    pub fn to_subspace(&self) -> Subspace {
        let rows: Vec<Vec<u32>> = self.rows.iter().map(|r| to_dense(r, self.ncols)).collect();
        if rows.is_empty() {
            return Subspace::zero(self.field, self.ncols);
        }
        Subspace::from_mat(&Mat::from_rows(self.field, self.ncols, &rows))
    }
}

/// Kernel of the linear map sending the `j`-th standard basis vector to
/// `images[j]` (vectors of length `codomain`).
///
/// Returns `(rank, kernel)` where the kernel basis is in echelon form: the
/// `k`-th vector has its leading entry 1 at a distinct domain index. Images
/// are eliminated from the last index down so that every combination only
/// involves indices at or after its own.
pub fn kernel_of_images(field: PrimeField, codomain: usize, images: &[SparseVec]) -> (usize, Vec<SparseVec>) {
    let domain = images.len();
    let f = field;
    let mut pivot_row = vec![NO_PIVOT; codomain];
    let mut rows: Vec<(SparseVec, SparseVec)> = Vec::new();
    let mut kernel = Vec::new();
    let mut buf = vec![0u32; codomain];
    let mut combo = vec![0u32; domain];
    for j in (0..domain).rev() {
        let img = &images[j];
        combo[j] = 1;
        let mut touched = vec![j];
        let mut reduced: SparseVec = Vec::new();
        if let Some(&(lead, _)) = img.first() {
            for &(i, x) in img {
                buf[i] = x;
            }
            for c in lead..codomain {
                let x = buf[c];
                if x == 0 {
                    continue;
                }
                buf[c] = 0;
                let r = pivot_row[c];
                if r == NO_PIVOT {
                    reduced.push((c, x));
                    continue;
                }
                let neg = f.neg(x);
                let (row, row_combo) = &rows[r as usize];
                for &(cc, rv) in &row[1..] {
                    buf[cc] = f.mul_add(buf[cc], neg, rv);
                }
                for &(d, cv) in row_combo {
                    if combo[d] == 0 {
                        touched.push(d);
                    }
                    combo[d] = f.mul_add(combo[d], neg, cv);
                }
            }
        }
        touched.sort_unstable();
        touched.dedup();
        let mut comb: SparseVec = Vec::with_capacity(touched.len());
        for &d in &touched {
            if combo[d] != 0 {
                comb.push((d, combo[d]));
            }
            combo[d] = 0;
        }
        match reduced.first() {
            None => kernel.push(comb),
            Some(&(lead, x)) => {
                let inv = f.inv(x);
                for e in reduced.iter_mut() {
                    e.1 = f.mul(e.1, inv);
                }
                for e in comb.iter_mut() {
                    e.1 = f.mul(e.1, inv);
                }
                pivot_row[lead] = rows.len() as u32;
                rows.push((reduced, comb));
            }
        }
    }
    kernel.reverse();
    (rows.len(), kernel)
}
