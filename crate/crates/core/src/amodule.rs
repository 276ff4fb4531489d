//! Finite-dimensional left modules over a short local algebra.
//!
//! Two forms are used. A [`ModulePresentation`] is `F_t / U` with the
//! relation module `U` inside `J F_t`, so that `F_t -> M` is a projective
//! cover and `U` is the syzygy `Omega M`. An [`ActionModule`] is a
//! coordinate space with one matrix per algebra generator; radicals,
//! socles and quotients are computed there.
//!
//! Coordinates of the free module `F_t = A^t` are ordered by radical layer:
//! first the `t` unit coordinates, then the `t*e` coordinates `x_i e_k`,
//! then the `t*a` coordinates `z_m e_k`. With this order an echelon basis
//! of a submodule splits into rows leading in the `x` layer (lifts of the
//! top) and rows spanning the intersection with `J^2 F_t`.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, AlgebraFile, ShortLocalAlgebra};
use crate::exactla::sparse::{from_dense, to_dense};
use crate::exactla::{kernel_basis, solve, Echelon, Mat, PrimeField, SparseVec, Subspace};
use crate::{Error, Result};

/// Coordinate layout of a free module `A^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FreeLayout {
    pub t: usize,
    pub e: usize,
    pub a: usize,
}

impl FreeLayout {
    pub fn new(alg: &ShortLocalAlgebra, t: usize) -> Self {
        FreeLayout { t, e: alg.e(), a: alg.a() }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.t * (1 + self.e + self.a)
    }

    #[inline]
    pub fn unit(&self, k: usize) -> usize {
        k
    }

    #[inline]
    pub fn x(&self, k: usize, i: usize) -> usize {
        self.t + k * self.e + i
    }

    #[inline]
    pub fn z(&self, k: usize, m: usize) -> usize {
        self.t + self.t * self.e + k * self.a + m
    }

    /// First coordinate of the `x` layer.
    #[inline]
    pub fn x_start(&self) -> usize {
        self.t
    }

    /// First coordinate of the `z` layer (`J^2 F_t`).
    #[inline]
    pub fn z_start(&self) -> usize {
        self.t * (1 + self.e)
    }

    /// Maps an algebra basis index `b` of generator `k` to a coordinate.
    pub fn coord(&self, k: usize, b: usize) -> usize {
        if b == 0 {
            self.unit(k)
        } else if b <= self.e {
            self.x(k, b - 1)
        } else {
            self.z(k, b - 1 - self.e)
        }
    }

    /// Inverse of [`FreeLayout::coord`].
    pub fn decode(&self, idx: usize) -> (usize, usize) {
        if idx < self.x_start() {
            (idx, 0)
        } else if idx < self.z_start() {
            let r = idx - self.x_start();
            (r / self.e, 1 + r % self.e)
        } else {
            let r = idx - self.z_start();
            (r / self.a, 1 + self.e + r % self.a)
        }
    }

    pub fn from_blocks(&self, blocks: &[AlgebraElement]) -> Vec<u32> {
        assert_eq!(blocks.len(), self.t);
        let mut v = vec![0; self.dim()];
        for (k, b) in blocks.iter().enumerate() {
            for (idx, &c) in b.coeffs().iter().enumerate() {
                v[self.coord(k, idx)] = c;
            }
        }
        v
    }

    pub fn to_blocks(&self, v: &[u32]) -> Vec<AlgebraElement> {
        let n = 1 + self.e + self.a;
        (0..self.t)
            .map(|k| AlgebraElement((0..n).map(|b| v[self.coord(k, b)]).collect()))
            .collect()
    }
}

fn normalize(field: PrimeField, mut terms: Vec<(usize, u32)>) -> SparseVec {
    terms.sort_unstable_by_key(|&(i, _)| i);
    let mut out: SparseVec = Vec::with_capacity(terms.len());
    for (i, v) in terms {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = field.add(last.1, v),
            _ => out.push((i, v)),
        }
    }
    out.retain(|&(_, v)| v != 0);
    out
}

/// `x_i * v` for `v` in `F_t`.
pub fn left_mult_x(alg: &ShortLocalAlgebra, lay: &FreeLayout, i: usize, v: &[(usize, u32)]) -> SparseVec {
    let f = alg.field();
    let mut terms = Vec::new();
    for &(idx, c) in v {
        if idx < lay.x_start() {
            terms.push((lay.x(idx, i), c));
        } else if idx < lay.z_start() {
            let r = idx - lay.x_start();
            let (k, l) = (r / lay.e, r % lay.e);
            for (m, &pc) in alg.product(i, l).iter().enumerate() {
                if pc != 0 {
                    terms.push((lay.z(k, m), f.mul(c, pc)));
                }
            }
        }
    }
    normalize(f, terms)
}

/// `z_m * v` for `v` in `F_t`.
pub fn left_mult_z(_alg: &ShortLocalAlgebra, lay: &FreeLayout, m: usize, v: &[(usize, u32)]) -> SparseVec {
    v.iter()
        .take_while(|&&(idx, _)| idx < lay.x_start())
        .map(|&(k, c)| (lay.z(k, m), c))
        .collect()
}

/// An element of `F_t`, in layered coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeElement {
    pub rank: usize,
    pub coords: Vec<u32>,
}

impl FreeElement {
    pub fn from_blocks(alg: &ShortLocalAlgebra, blocks: &[AlgebraElement]) -> Self {
        let lay = FreeLayout::new(alg, blocks.len());
        FreeElement {
            rank: blocks.len(),
            coords: lay.from_blocks(blocks),
        }
    }

    pub fn blocks(&self, alg: &ShortLocalAlgebra) -> Vec<AlgebraElement> {
        FreeLayout::new(alg, self.rank).to_blocks(&self.coords)
    }
}

/// A submodule of a free module, stored as a sparse echelon basis in
/// layered coordinates.
#[derive(Clone, Debug)]
pub struct SubmoduleOfFree {
    layout: FreeLayout,
    basis: Echelon,
}

impl SubmoduleOfFree {
    pub fn zero(alg: &ShortLocalAlgebra, t: usize) -> Self {
        let layout = FreeLayout::new(alg, t);
        SubmoduleOfFree {
            layout,
            basis: Echelon::new(alg.field(), layout.dim()),
        }
    }

    /// Smallest submodule containing `gens`.
    pub fn close(alg: &ShortLocalAlgebra, t: usize, gens: &[Vec<u32>]) -> Self {
        let sparse: Vec<SparseVec> = gens.iter().map(|g| from_dense(g)).collect();
        Self::close_sparse(alg, t, sparse)
    }

    pub(crate) fn close_sparse(alg: &ShortLocalAlgebra, t: usize, gens: Vec<SparseVec>) -> Self {
        let mut sub = Self::zero(alg, t);
        let lay = sub.layout;
        let mut queue = gens;
        while let Some(v) = queue.pop() {
            if !sub.basis.insert(&v) {
                continue;
            }
            for i in 0..lay.e {
                queue.push(left_mult_x(alg, &lay, i, &v));
            }
            for m in 0..lay.a {
                queue.push(left_mult_z(alg, &lay, m, &v));
            }
        }
        sub
    }

    /// Wraps an echelon basis already known to be a submodule.
    pub(crate) fn from_echelon(layout: FreeLayout, basis: Echelon) -> Self {
        debug_assert_eq!(layout.dim(), basis.ncols());
        SubmoduleOfFree { layout, basis }
    }

    /// Checks closure of an arbitrary subspace under the action.
    pub fn from_subspace(alg: &ShortLocalAlgebra, t: usize, space: &Subspace) -> Result<Self> {
        let lay = FreeLayout::new(alg, t);
        if space.ambient_dim() != lay.dim() {
            return Err(Error::AmbientMismatch {
                left: lay.dim(),
                right: space.ambient_dim(),
            });
        }
        let mut basis = Echelon::new(alg.field(), lay.dim());
        let rows: Vec<SparseVec> = space.basis_vectors().iter().map(|v| from_dense(v)).collect();
        basis.extend(rows.iter());
        let sub = SubmoduleOfFree { layout: lay, basis };
        for r in &rows {
            for i in 0..lay.e {
                if !sub.basis.contains(&left_mult_x(alg, &lay, i, r)) {
                    return Err(Error::NotSubmodule);
                }
            }
            for m in 0..lay.a {
                if !sub.basis.contains(&left_mult_z(alg, &lay, m, r)) {
                    return Err(Error::NotSubmodule);
                }
            }
        }
        Ok(sub)
    }

    #[inline]
    pub fn layout(&self) -> &FreeLayout {
        &self.layout
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.layout.t
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn rows(&self) -> &[SparseVec] {
        self.basis.rows()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.basis
    }

    pub fn contains(&self, v: &[(usize, u32)]) -> bool {
        self.basis.contains(v)
    }

    /// True iff every element has zero unit components, i.e. `U ⊆ J F_t`.
    pub fn in_radical(&self) -> bool {
        self.basis.pivots_in(0, self.layout.x_start()) == 0
    }

    /// `dim (U ∩ J^2 F_t)`.
    pub fn socle_layer_dim(&self) -> usize {
        self.basis.pivots_in(self.layout.z_start(), self.layout.dim())
    }

    pub fn to_subspace(&self) -> Subspace {
        self.basis.to_subspace()
    }
}

/// Dimension vector `(t(M), |JM|)` of a module of Loewy length at most 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimensionVector {
    pub top: u64,
    pub rad: u64,
}

impl DimensionVector {
    pub fn new(top: u64, rad: u64) -> Self {
        DimensionVector { top, rad }
    }

    pub fn total(&self) -> u64 {
        self.top + self.rad
    }
}

impl std::ops::Add for DimensionVector {
    type Output = DimensionVector;

    fn add(self, o: DimensionVector) -> DimensionVector {
        DimensionVector::new(self.top + o.top, self.rad + o.rad)
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.top, self.rad)
    }
}

/// `M = F_t / U` with `U ⊆ J F_t`.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    algebra: Arc<ShortLocalAlgebra>,
    relations: SubmoduleOfFree,
}

impl ModulePresentation {
    /// Presentation with relations generated by `gens`. Rejects relations
    /// outside `J F_t`.
    pub fn new(algebra: Arc<ShortLocalAlgebra>, rank: usize, gens: &[FreeElement]) -> Result<Self> {
        let lay = FreeLayout::new(&algebra, rank);
        let mut dense = Vec::with_capacity(gens.len());
        for g in gens {
            if g.rank != rank || g.coords.len() != lay.dim() {
                return Err(Error::BadShape(format!("relation of rank {} in a presentation of rank {rank}", g.rank)));
            }
            dense.push(g.coords.clone());
        }
        let relations = SubmoduleOfFree::close(&algebra, rank, &dense);
        Self::from_relations(algebra, relations)
    }

    pub fn from_relations(algebra: Arc<ShortLocalAlgebra>, relations: SubmoduleOfFree) -> Result<Self> {
        if relations.layout != FreeLayout::new(&algebra, relations.rank()) {
            return Err(Error::AlgebraMismatch);
        }
        if !relations.in_radical() {
            return Err(Error::NotMinimal);
        }
        Ok(ModulePresentation { algebra, relations })
    }

    /// The simple module `S = A/J`.
    pub fn simple(algebra: Arc<ShortLocalAlgebra>) -> Self {
        let gens: Vec<Vec<u32>> = (1..algebra.dim()).map(|b| algebra.basis_element(b).0).collect();
        let relations = SubmoduleOfFree::close(&algebra, 1, &gens);
        ModulePresentation { algebra, relations }
    }

    /// The free module `A^t`.
    pub fn free(algebra: Arc<ShortLocalAlgebra>, t: usize) -> Self {
        let relations = SubmoduleOfFree::zero(&algebra, t);
        ModulePresentation { algebra, relations }
    }

    pub fn algebra(&self) -> &Arc<ShortLocalAlgebra> {
        &self.algebra
    }

    pub fn relations(&self) -> &SubmoduleOfFree {
        &self.relations
    }

    pub fn layout(&self) -> &FreeLayout {
        &self.relations.layout
    }

    /// `t(M)`, the number of generators.
    pub fn rank(&self) -> usize {
        self.relations.rank()
    }

    /// `|M| = t (1+e+a) - dim U`.
    pub fn dim(&self) -> usize {
        self.layout().dim() - self.relations.dim()
    }

    /// `|JM| = |J F_t| - dim U`.
    pub fn radical_dim(&self) -> usize {
        self.dim() - self.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    /// Loewy length at most 2 iff `J^2 F_t ⊆ U`.
    pub fn is_loewy_le2(&self) -> bool {
        self.relations.socle_layer_dim() == self.rank() * self.algebra.a()
    }

    pub fn dimension_vector(&self) -> Result<DimensionVector> {
        if !self.is_loewy_le2() {
            return Err(Error::NotLoewy2);
        }
        Ok(DimensionVector::new(self.rank() as u64, self.radical_dim() as u64))
    }

    /// Direct sum, generators of `self` first.
    pub fn direct_sum(&self, other: &ModulePresentation) -> Result<ModulePresentation> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let (l1, l2) = (*self.layout(), *other.layout());
        let lay = FreeLayout::new(&self.algebra, l1.t + l2.t);
        let shift = |src: &FreeLayout, offset: usize, v: &SparseVec| -> SparseVec {
            let mut out: SparseVec = v
                .iter()
                .map(|&(idx, c)| {
                    let (k, b) = src.decode(idx);
                    (lay.coord(k + offset, b), c)
                })
                .collect();
            out.sort_unstable_by_key(|&(i, _)| i);
            out
        };
        let mut basis = Echelon::new(self.algebra.field(), lay.dim());
        let rows: Vec<SparseVec> = self
            .relations
            .rows()
            .iter()
            .map(|r| shift(&l1, 0, r))
            .chain(other.relations.rows().iter().map(|r| shift(&l2, l1.t, r)))
            .collect();
        basis.extend(rows.iter());
        Ok(ModulePresentation {
            algebra: self.algebra.clone(),
            relations: SubmoduleOfFree::from_echelon(lay, basis),
        })
    }

    /// Same module over another field (constants reread as signed integers).
    pub fn change_field(&self, algebra: Arc<ShortLocalAlgebra>) -> Result<ModulePresentation> {
        let old = self.algebra.field();
        let lay = *self.layout();
        let gens: Vec<FreeElement> = self
            .relations
            .rows()
            .iter()
            .map(|r| FreeElement {
                rank: lay.t,
                coords: to_dense(r, lay.dim())
                    .into_iter()
                    .map(|c| algebra.field().from_i64(old.to_signed(c)))
                    .collect(),
            })
            .collect();
        ModulePresentation::new(algebra, lay.t, &gens)
    }

    /// Dense action-matrix realization on the canonical complement of `U`.
    pub fn to_action(&self) -> ActionModule {
        let alg = &self.algebra;
        let f = alg.field();
        let lay = *self.layout();
        let u = self.relations.to_subspace();
        let basis_idx = u.complement_indices();
        let m = basis_idx.len();
        let mut pos = vec![usize::MAX; lay.dim()];
        for (j, &c) in basis_idx.iter().enumerate() {
            pos[c] = j;
        }
        let act = |mult: &dyn Fn(&SparseVec) -> SparseVec| -> Mat {
            let mut mat = Mat::zeros(f, m, m);
            for (j, &c) in basis_idx.iter().enumerate() {
                let img = to_dense(&mult(&vec![(c, 1)]), lay.dim());
                let red = u.reduce(&img);
                for (idx, &val) in red.iter().enumerate() {
                    if val != 0 {
                        mat.set(pos[idx], j, val);
                    }
                }
            }
            mat
        };
        let x = (0..lay.e).map(|i| act(&|v| left_mult_x(alg, &lay, i, v))).collect();
        let z = (0..lay.a).map(|mm| act(&|v| left_mult_z(alg, &lay, mm, v))).collect();
        ActionModule {
            algebra: alg.clone(),
            dim: m,
            x,
            z,
        }
    }

    pub fn to_file(&self) -> ModuleFile {
        let lay = *self.layout();
        let f = self.algebra.field();
        let relations = self
            .relations
            .rows()
            .iter()
            .map(|r| {
                lay.to_blocks(&to_dense(r, lay.dim()))
                    .into_iter()
                    .map(|b| b.0.iter().map(|&c| f.to_signed(c)).collect())
                    .collect()
            })
            .collect();
        ModuleFile {
            algebra: None,
            rank: lay.t,
            relations,
        }
    }

    pub fn from_file(algebra: Arc<ShortLocalAlgebra>, file: &ModuleFile) -> Result<Self> {
        let n = algebra.dim();
        let mut gens = Vec::with_capacity(file.relations.len());
        for rel in &file.relations {
            if rel.len() != file.rank || rel.iter().any(|b| b.len() != n) {
                return Err(Error::BadShape(format!(
                    "each relation must be a {}x{} coefficient array",
                    file.rank, n
                )));
            }
            let blocks: Vec<AlgebraElement> = rel
                .iter()
                .map(|b| algebra.element(b))
                .collect::<Result<_>>()?;
            gens.push(FreeElement::from_blocks(&algebra, &blocks));
        }
        ModulePresentation::new(algebra, file.rank, &gens)
    }
}

/// Algebra reference inside a module file: a path or an inline object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Path(String),
    Inline(AlgebraFile),
}

/// On-disk JSON form of a module presentation. Each relation is a
/// `rank x (1+e+a)` array of coefficients in the basis order
/// `(1, x_1..x_e, z_1..z_a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraRef>,
    pub rank: usize,
    #[serde(default)]
    pub relations: Vec<Vec<Vec<i64>>>,
}

impl ModuleFile {
    pub fn load(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }

    /// Resolves the embedded algebra reference relative to `base`.
    pub fn algebra(&self, base: Option<&Path>) -> Result<Option<ShortLocalAlgebra>> {
        match &self.algebra {
            None => Ok(None),
            Some(AlgebraRef::Inline(file)) => Ok(Some(file.clone().into_algebra()?)),
            Some(AlgebraRef::Path(p)) => {
                let path = match base {
                    Some(b) => b.join(p),
                    None => p.into(),
                };
                Ok(Some(ShortLocalAlgebra::load(&path)?))
            }
        }
    }
}

/// `A/V` for the left ideal `V` generated by `gens ⊆ J`; its syzygy is `V`.
pub fn quotient_by_left_ideal(algebra: Arc<ShortLocalAlgebra>, gens: &[AlgebraElement]) -> Result<ModulePresentation> {
    if gens.iter().any(|g| !g.in_radical()) {
        return Err(Error::GeneratorNotInRadical);
    }
    let free: Vec<FreeElement> = gens
        .iter()
        .map(|g| FreeElement::from_blocks(&algebra, std::slice::from_ref(g)))
        .collect();
    ModulePresentation::new(algebra, 1, &free)
}

/// A module as a coordinate space with generator-action matrices acting on
/// column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionModule {
    algebra: Arc<ShortLocalAlgebra>,
    dim: usize,
    x: Vec<Mat>,
    z: Vec<Mat>,
}

impl ActionModule {
    /// Validates the structure-constant relations `X_i X_j = sum c Z_m` and
    /// the vanishing of `Z X`, `X Z`, `Z Z`.
    pub fn new(algebra: Arc<ShortLocalAlgebra>, x: Vec<Mat>, z: Vec<Mat>) -> Result<Self> {
        let f = algebra.field();
        if x.len() != algebra.e() || z.len() != algebra.a() {
            return Err(Error::BadShape("need e x-matrices and a z-matrices".into()));
        }
        let dim = x.first().or(z.first()).map_or(0, |m| m.rows());
        if x.iter().chain(&z).any(|m| m.rows() != dim || m.cols() != dim || m.field() != f) {
            return Err(Error::BadShape("action matrices must be square of equal size".into()));
        }
        for i in 0..algebra.e() {
            for j in 0..algebra.e() {
                let mut expected = Mat::zeros(f, dim, dim);
                for (m, &c) in algebra.product(i, j).iter().enumerate() {
                    if c != 0 {
                        expected = expected.add(&z[m].scale(c));
                    }
                }
                if x[i].mul(&x[j]) != expected {
                    return Err(Error::InvalidAction(format!("X{} X{} != sum c Z", i + 1, j + 1)));
                }
            }
        }
        for zm in &z {
            for other in x.iter().chain(&z) {
                if !zm.mul(other).is_zero() || !other.mul(zm).is_zero() {
                    return Err(Error::InvalidAction("J^2 does not act by zero on J M".into()));
                }
            }
        }
        Ok(ActionModule { algebra, dim, x, z })
    }

    /// `A^t` with the left regular action.
    pub fn free(algebra: Arc<ShortLocalAlgebra>, t: usize) -> Self {
        let lay = FreeLayout::new(&algebra, t);
        let f = algebra.field();
        let n = lay.dim();
        let mat = |mult: &dyn Fn(&SparseVec) -> SparseVec| -> Mat {
            let cols: Vec<Vec<u32>> = (0..n).map(|c| to_dense(&mult(&vec![(c, 1)]), n)).collect();
            Mat::from_columns(f, n, &cols)
        };
        let alg = &algebra;
        let x = (0..lay.e).map(|i| mat(&|v| left_mult_x(alg, &lay, i, v))).collect();
        let z = (0..lay.a).map(|m| mat(&|v| left_mult_z(alg, &lay, m, v))).collect();
        ActionModule {
            algebra: algebra.clone(),
            dim: n,
            x,
            z,
        }
    }

    pub fn algebra(&self) -> &Arc<ShortLocalAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn x_mats(&self) -> &[Mat] {
        &self.x
    }

    pub fn z_mats(&self) -> &[Mat] {
        &self.z
    }

    fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    fn all_mats(&self) -> impl Iterator<Item = &Mat> {
        self.x.iter().chain(&self.z)
    }

    /// `JM = sum of images of all X_i and Z_m`.
    pub fn radical(&self) -> Subspace {
        let cols: Vec<Vec<u32>> = self
            .all_mats()
            .flat_map(|m| (0..self.dim).map(move |j| m.column(j)))
            .collect();
        Subspace::span(self.field(), self.dim, &cols)
    }

    /// `soc M = intersection of kernels of all X_i and Z_m`.
    pub fn socle(&self) -> Subspace {
        let f = self.field();
        let stacked = self
            .all_mats()
            .fold(Mat::zeros(f, 0, self.dim), |acc, m| acc.vstack(m));
        kernel_basis(&stacked)
    }

    pub fn top_dim(&self) -> usize {
        self.dim - self.radical().dim()
    }

    /// Annihilated by `J^2`: all `Z_m` vanish and all `X_i X_j` vanish.
    pub fn loewy_length_le2(&self) -> bool {
        self.z.iter().all(|m| m.is_zero())
            && self.x.iter().all(|a| self.x.iter().all(|b| a.mul(b).is_zero()))
    }

    pub fn dimension_vector(&self) -> Result<DimensionVector> {
        if !self.loewy_length_le2() {
            return Err(Error::NotLoewy2);
        }
        let rad = self.radical().dim();
        Ok(DimensionVector::new((self.dim - rad) as u64, rad as u64))
    }

    /// `soc M = JM` (requires Loewy length at most 2).
    pub fn is_bipartite(&self) -> Result<bool> {
        if !self.loewy_length_le2() {
            return Err(Error::NotLoewy2);
        }
        Ok(self.socle() == self.radical())
    }

    pub fn is_semisimple(&self) -> Result<bool> {
        if !self.loewy_length_le2() {
            return Err(Error::NotLoewy2);
        }
        Ok(self.radical().dim() == 0)
    }

    /// `|soc M| - |JM|`, the multiplicity `s` in `M = B ⊕ S^s` with `B`
    /// bipartite.
    pub fn simple_summand_count(&self) -> Result<usize> {
        if !self.loewy_length_le2() {
            return Err(Error::NotLoewy2);
        }
        Ok(self.socle().dim() - self.radical().dim())
    }

    pub fn is_submodule(&self, w: &Subspace) -> Result<bool> {
        if w.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch {
                left: self.dim,
                right: w.ambient_dim(),
            });
        }
        for v in w.basis_vectors() {
            for m in self.all_mats() {
                if !w.contains(&m.mul_vec(&v))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Smallest submodule containing `gens`.
    pub fn generated_submodule(&self, gens: &[Vec<u32>]) -> Subspace {
        let mut space = Subspace::span(self.field(), self.dim, gens);
        loop {
            let mut vecs = space.basis_vectors();
            for v in space.basis_vectors() {
                for m in self.all_mats() {
                    vecs.push(m.mul_vec(&v));
                }
            }
            let next = Subspace::span(self.field(), self.dim, &vecs);
            if next.dim() == space.dim() {
                return space;
            }
            space = next;
        }
    }

    /// Restriction of the action to a submodule, in the RREF basis of `w`.
    pub fn submodule(&self, w: &Subspace) -> Result<ActionModule> {
        if !self.is_submodule(w)? {
            return Err(Error::NotSubmodule);
        }
        let f = self.field();
        let basis_t = w.basis().transpose();
        let restrict = |m: &Mat| -> Mat {
            let cols: Vec<Vec<u32>> = w
                .basis_vectors()
                .iter()
                .map(|v| solve(&basis_t, &m.mul_vec(v)).expect("image lies in submodule"))
                .collect();
            Mat::from_columns(f, w.dim(), &cols)
        };
        Ok(ActionModule {
            algebra: self.algebra.clone(),
            dim: w.dim(),
            x: self.x.iter().map(restrict).collect(),
            z: self.z.iter().map(restrict).collect(),
        })
    }

    /// `M / W` on the canonical complement of `W`.
    pub fn quotient(&self, w: &Subspace) -> Result<ActionModule> {
        if !self.is_submodule(w)? {
            return Err(Error::NotSubmodule);
        }
        let f = self.field();
        let idx = w.complement_indices();
        let mut pos = vec![usize::MAX; self.dim];
        for (j, &c) in idx.iter().enumerate() {
            pos[c] = j;
        }
        let induce = |m: &Mat| -> Mat {
            let mut out = Mat::zeros(f, idx.len(), idx.len());
            for (j, &c) in idx.iter().enumerate() {
                let red = w.reduce(&m.column(c));
                for (r, &val) in red.iter().enumerate() {
                    if val != 0 {
                        out.set(pos[r], j, val);
                    }
                }
            }
            out
        };
        Ok(ActionModule {
            algebra: self.algebra.clone(),
            dim: idx.len(),
            x: self.x.iter().map(induce).collect(),
            z: self.z.iter().map(induce).collect(),
        })
    }

    pub fn direct_sum(&self, other: &ActionModule) -> Result<ActionModule> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let f = self.field();
        let block = |a: &Mat, b: &Mat| -> Mat {
            let top = a.hstack(&Mat::zeros(f, a.rows(), b.cols()));
            let bottom = Mat::zeros(f, b.rows(), a.cols()).hstack(b);
            top.vstack(&bottom)
        };
        Ok(ActionModule {
            algebra: self.algebra.clone(),
            dim: self.dim + other.dim,
            x: self.x.iter().zip(&other.x).map(|(a, b)| block(a, b)).collect(),
            z: self.z.iter().zip(&other.z).map(|(a, b)| block(a, b)).collect(),
        })
    }

    /// `t(M) = t(W) + t(M/W)`.
    pub fn t_submodule_check(&self, w: &Subspace) -> Result<bool> {
        let sub = self.submodule(w)?;
        let quo = self.quotient(w)?;
        Ok(self.top_dim() == sub.top_dim() + quo.top_dim())
    }

    /// Projective cover on a lifted basis of `top M`; the kernel of the
    /// cover map is the relation module, contained in `J F_t` by
    /// minimality.
    pub fn to_presentation(&self) -> ModulePresentation {
        let alg = &self.algebra;
        let f = alg.field();
        let rad = self.radical();
        let tops = rad.complement_indices();
        let lay = FreeLayout::new(alg, tops.len());
        let mut cols = vec![vec![0u32; self.dim]; lay.dim()];
        for (k, &g) in tops.iter().enumerate() {
            let mut gen = vec![0u32; self.dim];
            gen[g] = 1;
            for (i, xm) in self.x.iter().enumerate() {
                cols[lay.x(k, i)] = xm.mul_vec(&gen);
            }
            for (m, zm) in self.z.iter().enumerate() {
                cols[lay.z(k, m)] = zm.mul_vec(&gen);
            }
            cols[lay.unit(k)] = gen;
        }
        let cover = Mat::from_columns(f, self.dim, &cols);
        let kernel = kernel_basis(&cover);
        let mut basis = Echelon::new(f, lay.dim());
        let rows: Vec<SparseVec> = kernel.basis_vectors().iter().map(|v| from_dense(v)).collect();
        basis.extend(rows.iter());
        let relations = SubmoduleOfFree::from_echelon(lay, basis);
        debug_assert!(relations.in_radical());
        ModulePresentation {
            algebra: alg.clone(),
            relations,
        }
    }
}
