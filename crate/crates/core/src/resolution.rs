//! Minimal projective resolutions.
//!
//! For a presentation `M = F_t / U` the relation module `U` is `Omega M`.
//! One step of the resolution picks minimal generators of `U` (a basis of
//! `U / JU`), maps `F_s` onto `U`, and takes the kernel, which is
//! `Omega^2 M` and automatically lies in `J F_s`.
//!
//! Because `J^3 = 0` the kernel splits by layer. Minimal generators are of
//! two kinds: lifts `g_k` of a basis of the `x`-layer projection of `U`,
//! and a complement of `JU` inside `U ∩ J^2 F_t`. The cover map kills all
//! of `J^2 F_s` and, on the `x` layer of `F_s`, sends `x_i e_k` to
//! `x_i g_k`, which only depends on the `x`-part of `g_k` (and is zero for
//! the second kind). So the new relation module is `J^2 F_s` plus the
//! kernel of an `(s e) -> (t a)` map, computed sparsely.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::amodule::{left_mult_x, left_mult_z, DimensionVector, FreeLayout, ModulePresentation, SubmoduleOfFree};
use crate::exactla::{kernel_of_images, Echelon, SparseVec};
use crate::spectral::{koszul_prediction, spectral_data, OmegaMatrix};
use crate::{Error, Result};

pub const DEFAULT_BOUND: usize = 8;
pub const DEFAULT_DIM_CAP: usize = 200_000;

/// Minimal generators of the relation module of a presentation.
struct TopOfRelations {
    /// Relation rows leading in the `x` layer.
    lifts: Vec<SparseVec>,
    /// `x_i * lifts[k]` at index `k * e + i`.
    images: Vec<SparseVec>,
    /// Rows of `U ∩ J^2 F_t` completing a basis of `U / JU`.
    socle_gens: usize,
    /// `dim JU`.
    ju_dim: usize,
}

impl TopOfRelations {
    fn analyze(m: &ModulePresentation) -> Self {
        let alg = m.algebra();
        let lay = *m.layout();
        let rel = m.relations();
        let field = alg.field();
        let z0 = lay.z_start();
        let (lifts, socle): (Vec<&SparseVec>, Vec<&SparseVec>) = rel.rows().iter().partition(|r| r[0].0 < z0);
        let mut images = Vec::with_capacity(lifts.len() * lay.e);
        for g in &lifts {
            for i in 0..lay.e {
                images.push(left_mult_x(alg, &lay, i, g));
            }
        }
        let mut ju = Echelon::new(field, lay.dim());
        ju.extend(images.iter());
        let ju_dim = ju.rank();
        let socle_gens = ju.extend(socle);
        TopOfRelations {
            lifts: lifts.into_iter().cloned().collect(),
            images,
            socle_gens,
            ju_dim,
        }
    }

    /// `t(Omega M)`.
    fn top(&self) -> usize {
        self.lifts.len() + self.socle_gens
    }

    fn omega_dimvec(&self) -> DimensionVector {
        DimensionVector::new(self.top() as u64, self.ju_dim as u64)
    }

    fn syzygy(&self, m: &ModulePresentation) -> ModulePresentation {
        let alg = m.algebra();
        let field = alg.field();
        let e = alg.e();
        let s = self.top();
        let new = FreeLayout::new(alg, s);
        let (_, kernel) = kernel_of_images(field, m.layout().dim(), &self.images);
        let mut rows: Vec<SparseVec> = Vec::with_capacity(kernel.len() + self.socle_gens * e + s * alg.a());
        // domain index k*e + i is the coordinate x_i e_k of F_s
        rows.extend(
            kernel
                .into_iter()
                .map(|v| v.into_iter().map(|(j, c)| (new.x_start() + j, c)).collect()),
        );
        for k in self.lifts.len()..s {
            for i in 0..e {
                rows.push(vec![(new.x(k, i), 1)]);
            }
        }
        for idx in new.z_start()..new.dim() {
            rows.push(vec![(idx, 1)]);
        }
        let basis = Echelon::from_echelon_rows(field, new.dim(), rows);
        let relations = SubmoduleOfFree::from_echelon(new, basis);
        ModulePresentation::from_relations(alg.clone(), relations).expect("kernel of a minimal cover lies in J F")
    }
}

/// A presentation of `Omega M`.
pub fn syzygy(m: &ModulePresentation) -> ModulePresentation {
    TopOfRelations::analyze(m).syzygy(m)
}

/// `dim Omega M`, computed without forming the next kernel.
pub fn omega_dimension_vector(m: &ModulePresentation) -> DimensionVector {
    TopOfRelations::analyze(m).omega_dimvec()
}

/// `Omega^n M`.
pub fn syzygy_power(m: &ModulePresentation, n: usize) -> ModulePresentation {
    (0..n).fold(m.clone(), |cur, _| syzygy(&cur))
}

fn omega_defect(e: usize, a: usize, dim_m: DimensionVector, dim_omega: DimensionVector) -> (i64, i64) {
    let (t, j) = (dim_m.top as i64, dim_m.rad as i64);
    let pred = (e as i64 * t - j, a as i64 * t);
    (dim_omega.top as i64 - pred.0, dim_omega.rad as i64 - pred.1)
}

fn defect_to_w(d: (i64, i64)) -> Result<u64> {
    if d.0 + d.1 != 0 || d.0 < 0 {
        return Err(Error::ShapeViolation(d.0, d.1));
    }
    Ok(d.0 as u64)
}

/// Betti numbers `t_n = t(Omega^n M)` with dimension vectors and defects.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub module: String,
    pub bound: usize,
    pub t_seq: Vec<u64>,
    /// `dim Omega^n M`, present when `Omega^n M` has Loewy length <= 2
    /// (always for `n >= 1`).
    pub dimvec_seq: Vec<Option<DimensionVector>>,
    /// `w_n` for `n = 1..`, the defect `dim Omega^n M - omega dim Omega^(n-1) M = (w, -w)`.
    pub w_seq: Vec<Option<u64>>,
    pub truncated: bool,
}

impl BettiReport {
    /// Rows `n, t_n, top, rad, w`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,t_n,top,rad,w\n");
        for (n, t) in self.t_seq.iter().enumerate() {
            let dv = self.dimvec_seq.get(n).copied().flatten();
            let w = if n == 0 { None } else { self.w_seq.get(n - 1).copied().flatten() };
            let _ = writeln!(
                out,
                "{n},{t},{},{},{}",
                dv.map_or(String::new(), |d| d.top.to_string()),
                dv.map_or(String::new(), |d| d.rad.to_string()),
                w.map_or(String::new(), |w| w.to_string()),
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "module {}  (bound N = {})", self.module, self.bound);
        let _ = writeln!(out, "{:>4} {:>10} {:>10} {:>10} {:>6}", "n", "t_n", "top", "rad", "w");
        for (n, t) in self.t_seq.iter().enumerate() {
            let dv = self.dimvec_seq.get(n).copied().flatten();
            let w = if n == 0 { None } else { self.w_seq.get(n - 1).copied().flatten() };
            let show = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
            let _ = writeln!(
                out,
                "{:>4} {:>10} {:>10} {:>10} {:>6}",
                n,
                t,
                show(dv.map(|d| d.top)),
                show(dv.map(|d| d.rad)),
                show(w)
            );
        }
        let row: Vec<String> = self.t_seq.iter().map(|t| t.to_string()).collect();
        let _ = writeln!(out, "t: {}", row.join(" "));
        if self.truncated {
            let _ = writeln!(out, "truncated: dimension cap reached after n = {}", self.t_seq.len() - 1);
        }
        out
    }
}

/// Iterates syzygies up to `Omega^n M`, stopping early (with `truncated`)
/// when the next presentation would have more than `dim_cap` coordinates.
pub fn betti_sequence(m: &ModulePresentation, n: usize, dim_cap: usize) -> Result<BettiReport> {
    betti_sequence_named(m, n, dim_cap, "M")
}

pub fn betti_sequence_named(m: &ModulePresentation, n: usize, dim_cap: usize, name: &str) -> Result<BettiReport> {
    let alg = m.algebra();
    let (e, a) = (alg.e(), alg.a());
    let width = alg.dim();
    let mut report = BettiReport {
        module: name.to_string(),
        bound: n,
        t_seq: vec![m.rank() as u64],
        dimvec_seq: vec![m.dimension_vector().ok()],
        w_seq: Vec::new(),
        truncated: false,
    };
    let mut cur = m.clone();
    for step in 1..=n {
        let top = TopOfRelations::analyze(&cur);
        let dv = top.omega_dimvec();
        report.t_seq.push(dv.top);
        let w = match report.dimvec_seq[step - 1] {
            Some(prev) => Some(defect_to_w(omega_defect(e, a, prev, dv))?),
            None => None,
        };
        report.dimvec_seq.push(Some(dv));
        report.w_seq.push(w);
        if step == n {
            break;
        }
        if top.top() * width > dim_cap {
            report.truncated = true;
            break;
        }
        cur = top.syzygy(&cur);
    }
    Ok(report)
}

/// The defect `w` with `dim Omega M = omega dim M + (w, -w)`, checked
/// against the number of simple summands of `Omega M`.
pub fn main_lemma_w(m: &ModulePresentation) -> Result<u64> {
    let dim_m = m.dimension_vector()?;
    let top = TopOfRelations::analyze(m);
    let alg = m.algebra();
    let w = defect_to_w(omega_defect(alg.e(), alg.a(), dim_m, top.omega_dimvec()))?;
    let simple = top.syzygy(m).to_action().simple_summand_count()? as u64;
    if w > simple {
        return Err(Error::SummandViolation { w, simple });
    }
    Ok(w)
}

/// Per-condition alignedness verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlignmentReport {
    pub dim_m: DimensionVector,
    pub dim_omega: DimensionVector,
    pub predicted: (i64, i64),
    /// `t(Omega M) = e t(M) - |JM|`.
    pub top_count: bool,
    /// `|J Omega M| = a t(M)`.
    pub radical_count: bool,
    /// `J Omega M = J^2 F_t` as subspaces.
    pub radical_equality: bool,
    /// `top Omega M -> top J F_t` is injective.
    pub top_injective: bool,
    pub aligned: bool,
}

pub fn is_aligned(m: &ModulePresentation) -> Result<AlignmentReport> {
    let dim_m = m.dimension_vector()?;
    let alg = m.algebra();
    let (e, a) = (alg.e(), alg.a());
    let lay = *m.layout();
    let t = m.rank();
    let top = TopOfRelations::analyze(m);
    let dim_omega = top.omega_dimvec();

    let top_count = top.top() as i64 == e as i64 * t as i64 - m.radical_dim() as i64;
    let radical_count = top.ju_dim == a * t;

    // J U spanned by every generator acting on every relation row, built
    // from scratch here rather than reusing the engine's JU
    let u = m.relations();
    let mut ju = Echelon::new(alg.field(), lay.dim());
    for r in u.rows() {
        for i in 0..e {
            ju.insert(&left_mult_x(alg, &lay, i, r));
        }
        for mm in 0..a {
            ju.insert(&left_mult_z(alg, &lay, mm, r));
        }
    }
    let j2_unit = |idx: usize| -> SparseVec { vec![(idx, 1)] };
    let j2_in_ju = (lay.z_start()..lay.dim()).all(|idx| ju.contains(&j2_unit(idx)));
    let ju_in_j2 = ju.rows().iter().all(|r| r[0].0 >= lay.z_start());
    let radical_equality = j2_in_ju && ju_in_j2;

    // dim U - dim JU == dim (U + J^2 F) - dim J^2 F
    let mut u_plus = u.echelon().clone();
    let extra: Vec<SparseVec> = (lay.z_start()..lay.dim()).map(j2_unit).collect();
    u_plus.extend(extra.iter());
    let top_injective = u.dim() - ju.rank() == u_plus.rank() - t * a;

    let verdicts = [top_count, radical_count, radical_equality, top_injective];
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        return Err(Error::ConditionDisagreement(format!(
            "top_count={top_count} radical_count={radical_count} radical_equality={radical_equality} top_injective={top_injective}"
        )));
    }
    let (te, ja) = (dim_m.top as i64, dim_m.rad as i64);
    Ok(AlignmentReport {
        dim_m,
        dim_omega,
        predicted: (e as i64 * te - ja, a as i64 * te),
        top_count,
        radical_count,
        radical_equality,
        top_injective,
        aligned: verdicts[0],
    })
}

/// Bounded Koszul certificate: compares `dim Omega^n M` with
/// `omega^n dim M` for `n <= bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulReport {
    pub bound: usize,
    pub koszul_up_to_bound: bool,
    pub first_failure: Option<usize>,
    /// Largest `n` for which the comparison was carried out.
    pub checked_through: usize,
    pub actual: Vec<DimensionVector>,
    pub predicted: Vec<(String, String)>,
    pub truncated: bool,
    pub note: String,
}

const KOSZUL_NOTE: &str = "finite-range evidence only: agreement up to the bound does not prove the module is Koszul";

pub fn is_koszul_up_to(m: &ModulePresentation, n: usize) -> Result<KoszulReport> {
    is_koszul_up_to_capped(m, n, DEFAULT_DIM_CAP)
}

pub fn is_koszul_up_to_capped(m: &ModulePresentation, n: usize, dim_cap: usize) -> Result<KoszulReport> {
    let dim_m = m.dimension_vector()?;
    let alg = m.algebra();
    let betti = betti_sequence(m, n, dim_cap)?;
    let predicted = koszul_prediction(alg.e() as u64, alg.a() as u64, (dim_m.top as i64, dim_m.rad as i64), n);
    let actual: Vec<DimensionVector> = betti.dimvec_seq.iter().map(|d| d.expect("Loewy <= 2")).collect();
    let first_failure = actual.iter().zip(&predicted).position(|(d, (pt, pr))| {
        pt.to_u64() != Some(d.top) || pr.to_u64() != Some(d.rad)
    });
    Ok(KoszulReport {
        bound: n,
        koszul_up_to_bound: first_failure.is_none() && !betti.truncated,
        first_failure,
        checked_through: actual.len() - 1,
        actual,
        predicted: predicted
            .iter()
            .take(betti.t_seq.len())
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect(),
        truncated: betti.truncated,
        note: KOSZUL_NOTE.to_string(),
    })
}

/// Least `n < bound` with `Omega^n M` not aligned.
pub fn first_unaligned_syzygy(m: &ModulePresentation, bound: usize) -> Result<Option<usize>> {
    let mut cur = m.clone();
    for n in 0..bound {
        if !is_aligned(&cur)?.aligned {
            return Ok(Some(n));
        }
        cur = syzygy(&cur);
    }
    Ok(None)
}

/// Finite-range evidence for the growth rate of the Betti numbers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthEstimate {
    pub t_seq: Vec<u64>,
    /// `t_n^(1/n)` for `n >= 1`.
    pub root_seq: Vec<f64>,
    /// `t_(n+1) / t_n` where `t_n > 0`.
    pub ratio_seq: Vec<f64>,
    pub gamma_low: f64,
    pub gamma_high: f64,
    pub predicted: Prediction,
    pub truncated: bool,
    pub note: String,
}

/// What the spectral data of `omega(e, a)` predicts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Prediction {
    pub rho: f64,
    /// `(e - sqrt(e^2 - 4a)) / 2` when real.
    pub small_root: Option<f64>,
    /// Eigenvalue for which the dimension vector of the module (or of its
    /// first syzygy) is an eigenvector.
    pub eigenvector_eigenvalue: Option<f64>,
}

const GROWTH_TAIL: usize = 3;

pub fn gamma_estimate(m: &ModulePresentation, n: usize, dim_cap: usize) -> Result<GrowthEstimate> {
    let alg = m.algebra();
    let betti = betti_sequence(m, n, dim_cap)?;
    let t = &betti.t_seq;
    let root_seq: Vec<f64> = t
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &v)| (v as f64).powf(1.0 / k as f64))
        .collect();
    let ratio_seq: Vec<f64> = t
        .windows(2)
        .filter(|w| w[0] > 0)
        .map(|w| w[1] as f64 / w[0] as f64)
        .collect();
    let tail = &ratio_seq[ratio_seq.len().saturating_sub(GROWTH_TAIL)..];
    let (gamma_low, gamma_high) = if tail.is_empty() {
        (0.0, 0.0)
    } else {
        (
            tail.iter().cloned().fold(f64::INFINITY, f64::min),
            tail.iter().cloned().fold(0.0, f64::max),
        )
    };
    let spec = spectral_data(alg.e() as u64, alg.a() as u64);
    let dv = betti.dimvec_seq.iter().flatten().next();
    let eigenvector_eigenvalue = dv.and_then(|d| spec.eigenvalue_of((d.top as i64, d.rad as i64)));
    Ok(GrowthEstimate {
        t_seq: betti.t_seq.clone(),
        root_seq,
        ratio_seq,
        gamma_low,
        gamma_high,
        predicted: Prediction {
            rho: spec.rho,
            small_root: spec.small_root(),
            eigenvector_eigenvalue,
        },
        truncated: betti.truncated,
        note: "values are finite-range evidence for the growth rate, not a computed limit".to_string(),
    })
}

/// Finite-range consequences of the general growth bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthBoundsReport {
    /// `t_(n+1)(M) = t_n(Omega M)`.
    pub shift_identity: bool,
    /// `t_n(M ⊕ M') = t_n(M) + t_n(M')`.
    pub additivity: bool,
    /// `c t_n <= |Omega^(n+1) M| <= d t_n` for `n >= 1`, `d = |J|`, `c = |J^2|`
    /// (or `|J|` when `J^2 = 0`).
    pub radical_bounds: bool,
    /// `t_n(M) <= t_n(W) + t_n(M/W)` for the supplied submodule.
    pub subadditivity: Option<bool>,
}

impl GrowthBoundsReport {
    pub fn all_hold(&self) -> bool {
        self.shift_identity && self.additivity && self.radical_bounds && self.subadditivity.unwrap_or(true)
    }
}

/// Checks the growth identities on `t_0..t_n`. `other` is the second summand
/// for the additivity check (defaults to `M` itself) and `sub` an optional
/// submodule of `M`'s action realization for subadditivity.
pub fn theorem1_checks(
    m: &ModulePresentation,
    n: usize,
    other: Option<&ModulePresentation>,
    sub: Option<&crate::exactla::Subspace>,
) -> Result<GrowthBoundsReport> {
    let alg = m.algebra();
    let cap = usize::MAX;
    let tm = betti_sequence(m, n + 1, cap)?;
    let omega = betti_sequence(&syzygy(m), n, cap)?;
    let shift_identity = (0..=n).all(|k| tm.t_seq[k + 1] == omega.t_seq[k]);

    let other = other.unwrap_or(m);
    let to = betti_sequence(other, n, cap)?;
    let ts = betti_sequence(&m.direct_sum(other)?, n, cap)?;
    let additivity = (0..=n).all(|k| ts.t_seq[k] == tm.t_seq[k] + to.t_seq[k]);

    let d = (alg.e() + alg.a()) as u64;
    let c = if alg.a() > 0 { alg.a() as u64 } else { alg.e() as u64 };
    let radical_bounds = (1..=n).all(|k| {
        let size = tm.dimvec_seq[k + 1].expect("Loewy <= 2").total();
        c * tm.t_seq[k] <= size && size <= d * tm.t_seq[k]
    });

    let subadditivity = match sub {
        None => None,
        Some(w) => {
            let act = m.to_action();
            let w_mod = act.submodule(w)?.to_presentation();
            let q_mod = act.quotient(w)?.to_presentation();
            let tw = betti_sequence(&w_mod, n, cap)?;
            let tq = betti_sequence(&q_mod, n, cap)?;
            Some((0..=n).all(|k| tm.t_seq[k] <= tw.t_seq[k] + tq.t_seq[k]))
        }
    };
    Ok(GrowthBoundsReport {
        shift_identity,
        additivity,
        radical_bounds,
        subadditivity,
    })
}

/// `omega(e, a)` of the module's algebra.
pub fn omega_of(m: &ModulePresentation) -> OmegaMatrix {
    OmegaMatrix::new(m.algebra().e() as u64, m.algebra().a() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ShortLocalAlgebra;
    use crate::amodule::quotient_by_left_ideal;
    use crate::exactla::PrimeField;
    use std::sync::Arc;

    fn gf() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    /// generators x, y; only nonzero product y*x = z
    fn xy_squared_zero() -> Arc<ShortLocalAlgebra> {
        Arc::new(ShortLocalAlgebra::from_products(gf(), 2, 1, &[(1, 0, vec![1])]).unwrap())
    }

    #[test]
    fn syzygy_of_simple_is_radical() {
        let alg = xy_squared_zero();
        let s = ModulePresentation::simple(alg.clone());
        let om = syzygy(&s);
        assert_eq!(om.dimension_vector().unwrap(), DimensionVector::new(2, 1));
        assert_eq!(omega_dimension_vector(&s), DimensionVector::new(2, 1));
    }

    #[test]
    fn projective_has_zero_syzygy() {
        let alg = xy_squared_zero();
        let free = ModulePresentation::free(alg.clone(), 2);
        let om = syzygy(&free);
        assert!(om.is_zero());
        let r = betti_sequence(&free, 3, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(r.t_seq, vec![2, 0, 0, 0]);
    }

    #[test]
    fn non_koszul_length_two_module() {
        let alg = xy_squared_zero();
        // A / span{y, z}
        let n = quotient_by_left_ideal(alg.clone(), &[alg.x(1), alg.z(0)]).unwrap();
        assert_eq!(n.dimension_vector().unwrap(), DimensionVector::new(1, 1));
        assert_eq!(omega_dimension_vector(&n), DimensionVector::new(2, 0));
        assert_eq!(main_lemma_w(&n).unwrap(), 1);
        let rep = is_aligned(&n).unwrap();
        assert!(!rep.aligned);
        let k = is_koszul_up_to(&n, 4).unwrap();
        assert_eq!(k.first_failure, Some(1));
        assert!(!k.koszul_up_to_bound);
    }

    #[test]
    fn periodic_module() {
        let alg = xy_squared_zero();
        // I = A x = A / A x
        let i = quotient_by_left_ideal(alg.clone(), &[alg.x(0)]).unwrap();
        let r = betti_sequence(&i, 6, DEFAULT_DIM_CAP).unwrap();
        assert!(r.dimvec_seq.iter().all(|d| *d == Some(DimensionVector::new(1, 1))));
        assert!(is_koszul_up_to(&i, 6).unwrap().koszul_up_to_bound);
        assert_eq!(main_lemma_w(&i).unwrap(), 0);
    }

    #[test]
    fn simple_is_aligned() {
        let alg = xy_squared_zero();
        let s = ModulePresentation::simple(alg);
        let rep = is_aligned(&s).unwrap();
        assert!(rep.aligned && rep.top_count && rep.radical_equality);
        assert_eq!(main_lemma_w(&s).unwrap(), 0);
    }

    #[test]
    fn truncation_flag() {
        let alg = xy_squared_zero();
        let s = ModulePresentation::simple(alg);
        let r = betti_sequence(&s, 10, 10).unwrap();
        assert!(r.truncated);
        assert!(r.t_seq.len() < 11);
        let csv = r.to_csv();
        assert!(csv.starts_with("n,t_n,top,rad,w\n0,1,1,0,\n"));
    }
}
