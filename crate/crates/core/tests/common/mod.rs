//! Dense reference implementation of the syzygy step, used as an oracle
//! for the layered engine. Everything here is plain matrix algebra on
//! explicit action matrices.

#![allow(dead_code)]

use shortloc::exactla::{solve, Mat, PrimeField, Subspace};
use shortloc::{ActionModule, ShortLocalAlgebra};

/// A module given by the matrices of `x_1..x_e, z_1..z_a` acting on
/// column vectors.
#[derive(Clone, Debug)]
pub struct DenseModule {
    pub field: PrimeField,
    pub dim: usize,
    pub x: Vec<Mat>,
    pub z: Vec<Mat>,
}

impl DenseModule {
    pub fn from_action(m: &ActionModule) -> Self {
        DenseModule {
            field: m.algebra().field(),
            dim: m.dim(),
            x: m.x_mats().to_vec(),
            z: m.z_mats().to_vec(),
        }
    }

    fn ops(&self) -> impl Iterator<Item = &Mat> {
        self.x.iter().chain(&self.z)
    }

    pub fn radical(&self) -> Subspace {
        let cols: Vec<Vec<u32>> = self.ops().flat_map(|m| (0..self.dim).map(move |j| m.column(j))).collect();
        Subspace::span(self.field, self.dim, &cols)
    }

    pub fn top(&self) -> usize {
        self.dim - self.radical().dim()
    }

    /// `(t, |JM|)`, the dimension vector when `J^2 M = 0`.
    pub fn dimvec(&self) -> (u64, u64) {
        let r = self.radical().dim();
        ((self.dim - r) as u64, r as u64)
    }

    pub fn loewy_le2(&self) -> bool {
        self.z.iter().all(|m| m.is_zero()) && self.x.iter().all(|a| self.x.iter().all(|b| a.mul(b).is_zero()))
    }

    /// Kernel of the projective cover `A^t -> M`, with `t` generators lifted
    /// from a complement of `JM`.
    pub fn syzygy(&self, alg: &ShortLocalAlgebra) -> DenseModule {
        let f = self.field;
        let (e, a) = (alg.e(), alg.a());
        let d = 1 + e + a;
        let gens = self.radical().complement_indices();
        let t = gens.len();
        let n = t * d;

        // Basis of A^t ordered generator-major: (k, 1), (k, x_i), (k, z_m).
        let mut cover_cols = Vec::with_capacity(n);
        for &g in &gens {
            let mut v = vec![0u32; self.dim];
            v[g] = 1;
            cover_cols.push(v.clone());
            for m in self.ops() {
                cover_cols.push(m.mul_vec(&v));
            }
        }
        let cover = Mat::from_columns(f, self.dim, &cover_cols);
        let kernel = cover.kernel();

        // Left multiplication on A^t.
        let free_x: Vec<Mat> = (0..e)
            .map(|i| {
                let mut m = Mat::zeros(f, n, n);
                for k in 0..t {
                    m.set(k * d + 1 + i, k * d, 1);
                    for j in 0..e {
                        for (mm, &c) in alg.product(i, j).iter().enumerate() {
                            if c != 0 {
                                m.set(k * d + 1 + e + mm, k * d + 1 + j, c);
                            }
                        }
                    }
                }
                m
            })
            .collect();
        let free_z: Vec<Mat> = (0..a)
            .map(|mm| {
                let mut m = Mat::zeros(f, n, n);
                for k in 0..t {
                    m.set(k * d + 1 + e + mm, k * d, 1);
                }
                m
            })
            .collect();

        let basis = kernel.basis_vectors();
        let bt = kernel.basis().transpose();
        let restrict = |op: &Mat| -> Mat {
            let cols: Vec<Vec<u32>> = basis
                .iter()
                .map(|v| solve(&bt, &op.mul_vec(v)).expect("kernel is a submodule"))
                .collect();
            Mat::from_columns(f, basis.len(), &cols)
        };
        DenseModule {
            field: f,
            dim: basis.len(),
            x: free_x.iter().map(restrict).collect(),
            z: free_z.iter().map(restrict).collect(),
        }
    }
}

/// Oracle sequences `t(Omega^n M)` and `dim Omega^n M` for `n <= bound`,
/// stopping early once a module exceeds `max_dim`.
pub fn dense_betti(alg: &ShortLocalAlgebra, m: &ActionModule, bound: usize, max_dim: usize) -> Vec<(u64, Option<(u64, u64)>)> {
    let mut cur = DenseModule::from_action(m);
    let mut out = Vec::new();
    for n in 0..=bound {
        let dv = cur.loewy_le2().then(|| cur.dimvec());
        out.push((cur.top() as u64, dv));
        if n == bound || cur.top() * alg.dim() > max_dim {
            break;
        }
        let next = cur.syzygy(alg);
        assert_eq!(
            cur.top() * alg.dim(),
            cur.dim + next.dim,
            "0 -> Omega M -> A^t -> M -> 0 is exact"
        );
        cur = next;
    }
    out
}
