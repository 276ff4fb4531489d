//! The 2x2 integer matrix `omega(e, a) = [[e, -1], [a, 0]]` that predicts
//! how dimension vectors change under syzygies, with exact powers, the
//! Betti recursion `b_{n+1} = e b_n - a b_{n-1}`, eigenvalues and spectral
//! radius.

use num_bigint::BigInt;
use num_integer::{binomial, Roots};
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// `omega(e, a)`, entries `[[e, -1], [a, 0]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OmegaMatrix {
    pub e: u64,
    pub a: u64,
}

pub type IntMat2 = [[BigInt; 2]; 2];

impl OmegaMatrix {
    pub fn new(e: u64, a: u64) -> Self {
        OmegaMatrix { e, a }
    }

    pub fn entries(&self) -> IntMat2 {
        [
            [BigInt::from(self.e), BigInt::from(-1)],
            [BigInt::from(self.a), BigInt::zero()],
        ]
    }

    /// `omega (u, v) = (e u - v, a u)`.
    pub fn apply(&self, v: &(BigInt, BigInt)) -> (BigInt, BigInt) {
        (BigInt::from(self.e) * &v.0 - &v.1, BigInt::from(self.a) * &v.0)
    }

    /// `omega^n` by repeated squaring.
    pub fn power(&self, mut n: u64) -> IntMat2 {
        let mut acc = identity();
        let mut base = self.entries();
        while n > 0 {
            if n & 1 == 1 {
                acc = mat_mul(&acc, &base);
            }
            base = mat_mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    pub fn discriminant(&self) -> i128 {
        (self.e as i128).pow(2) - 4 * self.a as i128
    }
}

fn identity() -> IntMat2 {
    [[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]]
}

fn mat_mul(x: &IntMat2, y: &IntMat2) -> IntMat2 {
    let cell = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
    [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]]
}

pub fn omega_apply(e: u64, a: u64, v: (i64, i64)) -> (i64, i64) {
    let (x, y) = OmegaMatrix::new(e, a).apply(&(v.0.into(), v.1.into()));
    (
        x.to_i64().expect("omega_apply overflow"),
        y.to_i64().expect("omega_apply overflow"),
    )
}

pub fn omega_power(e: u64, a: u64, n: u64) -> IntMat2 {
    OmegaMatrix::new(e, a).power(n)
}

/// Eigenvalues of `omega(e, a)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Eigenvalues {
    /// Perfect-square discriminant: both roots are integers, larger first.
    Integer { large: i64, small: i64 },
    /// Positive non-square discriminant.
    Real { large: f64, small: f64 },
    /// Negative discriminant: `re ± i im`.
    Complex { re: f64, im: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralData {
    pub e: u64,
    pub a: u64,
    pub discriminant: i128,
    pub eigenvalues: Eigenvalues,
    pub rho: f64,
    /// `rho` itself is an eigenvalue (always the case when `4a <= e^2`).
    pub rho_is_eigenvalue: bool,
}

pub fn spectral_data(e: u64, a: u64) -> SpectralData {
    let om = OmegaMatrix::new(e, a);
    let disc = om.discriminant();
    let ef = e as f64;
    let (eigenvalues, rho) = if disc >= 0 {
        let s = (disc as u128).sqrt();
        if s * s == disc as u128 {
            // (e ± s) is even because s ≡ e (mod 2)
            let large = ((e as i128 + s as i128) / 2) as i64;
            let small = ((e as i128 - s as i128) / 2) as i64;
            (Eigenvalues::Integer { large, small }, large as f64)
        } else {
            let r = (disc as f64).sqrt();
            let large = (ef + r) / 2.0;
            (
                Eigenvalues::Real {
                    large,
                    small: (ef - r) / 2.0,
                },
                large,
            )
        }
    } else {
        let im = ((-disc) as f64).sqrt() / 2.0;
        (Eigenvalues::Complex { re: ef / 2.0, im }, (a as f64).sqrt())
    };
    SpectralData {
        e,
        a,
        discriminant: disc,
        eigenvalues,
        rho,
        rho_is_eigenvalue: disc >= 0,
    }
}

impl SpectralData {
    /// The smaller root `(e - sqrt(e^2 - 4a)) / 2`, when real.
    pub fn small_root(&self) -> Option<f64> {
        match self.eigenvalues {
            Eigenvalues::Integer { small, .. } => Some(small as f64),
            Eigenvalues::Real { small, .. } => Some(small),
            Eigenvalues::Complex { .. } => None,
        }
    }

    /// Whether `v` is an eigenvector, and for which eigenvalue. Exact for
    /// integer eigenvalues; otherwise checked through the characteristic
    /// relation `v = (lambda, a) * s` with `lambda^2 - e lambda + a = 0`.
    pub fn eigenvalue_of(&self, v: (i64, i64)) -> Option<f64> {
        if v == (0, 0) {
            return None;
        }
        let (x, y) = omega_apply(self.e, self.a, v);
        // omega v = lambda v  <=>  x * v.1 == y * v.0 (parallel) and same direction
        if (x as i128) * (v.1 as i128) != (y as i128) * (v.0 as i128) {
            return None;
        }
        if v.0 != 0 {
            Some(x as f64 / v.0 as f64)
        } else {
            Some(y as f64 / v.1 as f64)
        }
    }
}

/// `b_0..b_n` of `b_{-1} = 0, b_0 = 1, b_{k+1} = e b_k - a b_{k-1}`.
pub fn b_sequence(e: u64, a: u64, n: usize) -> Vec<BigInt> {
    let (e, a) = (BigInt::from(e), BigInt::from(a));
    let mut out = Vec::with_capacity(n + 1);
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    out.push(cur.clone());
    for _ in 0..n {
        let next = &e * &cur - &a * &prev;
        prev = std::mem::replace(&mut cur, next);
        out.push(cur.clone());
    }
    out
}

/// `b_n = 2^-n sum_j C(n+1, 2j+1) (e^2 - 4a)^j e^(n-2j)`, valid for `4a < e^2`.
pub fn b_closed_form(e: u64, a: u64, n: u64) -> Result<BigInt> {
    let disc = OmegaMatrix::new(e, a).discriminant();
    if disc <= 0 {
        return Err(Error::HypothesisViolated(format!("closed form needs 4a < e^2, got e={e}, a={a}")));
    }
    let disc = BigInt::from(disc);
    let eb = BigInt::from(e);
    let mut sum = BigInt::zero();
    let mut j = 0u64;
    while 2 * j <= n {
        let c = binomial(BigInt::from(n + 1), BigInt::from(2 * j + 1));
        sum += c * Pow::pow(&disc, j) * Pow::pow(&eb, n - 2 * j);
        j += 1;
    }
    let denom = BigInt::one() << n;
    debug_assert!((&sum % &denom).is_zero());
    Ok(sum / denom)
}

/// `omega^k dimvec` for `k = 0..=n`.
pub fn koszul_prediction(e: u64, a: u64, dimvec: (i64, i64), n: usize) -> Vec<(BigInt, BigInt)> {
    let om = OmegaMatrix::new(e, a);
    let mut cur: (BigInt, BigInt) = (dimvec.0.into(), dimvec.1.into());
    let mut out = Vec::with_capacity(n + 1);
    out.push(cur.clone());
    for _ in 0..n {
        cur = om.apply(&cur);
        out.push(cur.clone());
    }
    out
}

/// Integer solution `c <= d` of `c + d = e`, `c d = a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaPair {
    pub small: u64,
    pub large: u64,
    /// `0 < c < e/2 < d < e` (only meaningful when `c < d`).
    pub chain_holds: bool,
}

pub fn theorem3_solve(e: u64, a: u64) -> Option<GammaPair> {
    let disc = OmegaMatrix::new(e, a).discriminant();
    if disc < 0 {
        return None;
    }
    let s = (disc as u128).sqrt();
    if s * s != disc as u128 {
        return None;
    }
    let s = s as u64;
    let (small, large) = ((e - s) / 2, (e + s) / 2);
    debug_assert_eq!(small + large, e);
    debug_assert_eq!(small as u128 * large as u128, a as u128);
    let chain_holds = small > 0 && 2 * small < e && e < 2 * large && large < e;
    Some(GammaPair {
        small,
        large,
        chain_holds,
    })
}

/// CSV rows `a,rho` for `a = 0..=a_max` at fixed `e`.
pub fn rho_sweep_csv(e: u64, a_max: u64) -> String {
    let mut out = String::from("a,rho\n");
    for a in 0..=a_max {
        out.push_str(&format!("{a},{:.12}\n", spectral_data(e, a).rho));
    }
    out
}

/// CSV rows `a,gamma_module,gamma_algebra` for every `a` admitting an
/// integer pair at fixed `e`.
pub fn gamma_pairs_csv(e: u64) -> String {
    let mut out = String::from("a,gamma_module,gamma_algebra\n");
    for a in 0..=(e * e / 4) {
        if let Some(p) = theorem3_solve(e, a) {
            out.push_str(&format!("{a},{},{}\n", p.small, p.large));
        }
    }
    out
}

/// Floating ratio `b_{n+1} / b_n` for diagnostics.
pub fn b_ratio(e: u64, a: u64, n: usize) -> Option<f64> {
    let b = b_sequence(e, a, n + 1);
    let (num, den) = (&b[n + 1], &b[n]);
    if den.is_zero() || den.is_negative() {
        return None;
    }
    Some(ratio_f64(num, den))
}

fn ratio_f64(num: &BigInt, den: &BigInt) -> f64 {
    // scale down both to keep f64 conversion finite
    let shift = den.bits().saturating_sub(60);
    let (n, d) = (num >> shift, den >> shift);
    n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_apply(5, 3, (1, 0)), (5, 3));
        assert_eq!(omega_apply(3, 2, (1, 1)), (2, 2));
        assert_eq!(omega_apply(3, 1, (1, 1)), (2, 1));
        assert_eq!(omega_power(4, 7, 0), identity());
    }

    #[test]
    fn spectral_examples() {
        let d = spectral_data(3, 2);
        assert_eq!(d.eigenvalues, Eigenvalues::Integer { large: 2, small: 1 });
        assert_eq!(d.rho, 2.0);
        assert_eq!(spectral_data(7, 6).rho, 6.0);
        assert_eq!(spectral_data(7, 10).rho, 5.0);
        assert_eq!(spectral_data(7, 12).rho, 4.0);
        let d = spectral_data(2, 4);
        assert!(d.discriminant < 0);
        assert_eq!(d.rho, 2.0);
        assert!(!d.rho_is_eigenvalue);
    }

    #[test]
    fn eigenvector_fact() {
        // (lambda, a) is an eigenvector for each nonzero eigenvalue
        let d = spectral_data(5, 6);
        assert_eq!(d.eigenvalue_of((3, 6)), Some(3.0));
        assert_eq!(d.eigenvalue_of((2, 6)), Some(2.0));
        assert_eq!(d.eigenvalue_of((1, 0)), None);
        // (1, c) is an eigenvector of omega(c+d, cd) with eigenvalue d
        assert_eq!(spectral_data(5, 6).eigenvalue_of((1, 3)), Some(2.0));
    }

    #[test]
    fn b_sequence_examples() {
        assert_eq!(b_sequence(3, 1, 5), big(&[1, 3, 8, 21, 55, 144]));
        assert_eq!(b_sequence(4, 0, 4), big(&[1, 4, 16, 64, 256]));
        assert_eq!(b_sequence(3, 2, 4), big(&[1, 3, 7, 15, 31]));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(b_closed_form(3, 2, 3).unwrap(), BigInt::from(15));
        assert_eq!(b_closed_form(6, 0, 2).unwrap(), BigInt::from(36));
        assert_eq!(b_closed_form(5, 4, 4).unwrap(), b_sequence(5, 4, 4)[4]);
        assert!(matches!(b_closed_form(2, 1, 3), Err(Error::HypothesisViolated(_))));
        assert!(b_closed_form(2, 2, 3).is_err());
    }

    #[test]
    fn prediction_examples() {
        let p = koszul_prediction(3, 2, (1, 0), 3);
        let expected: Vec<(BigInt, BigInt)> = [(1, 0), (3, 2), (7, 6), (15, 14)]
            .iter()
            .map(|&(x, y)| (BigInt::from(x), BigInt::from(y)))
            .collect();
        assert_eq!(p, expected);
        assert!(koszul_prediction(4, 3, (0, 0), 5)
            .iter()
            .all(|(x, y)| x.is_zero() && y.is_zero()));
        // (c+d, cd) acting on (1, c) scales by d
        let (c, d) = (3i64, 2i64);
        for (n, v) in koszul_prediction((c + d) as u64, (c * d) as u64, (1, c), 6).iter().enumerate() {
            let s = BigInt::from(d).pow(n as u32);
            assert_eq!(v, &(s.clone(), s * c));
        }
    }

    #[test]
    fn integer_pair_examples() {
        let pair = |e, a| theorem3_solve(e, a).map(|p| (p.small, p.large));
        assert_eq!(pair(7, 6), Some((1, 6)));
        assert_eq!(pair(7, 10), Some((2, 5)));
        assert_eq!(pair(7, 12), Some((3, 4)));
        assert_eq!(pair(7, 11), None);
        assert_eq!(pair(2, 1), Some((1, 1)));
        assert!(theorem3_solve(7, 10).unwrap().chain_holds);
        assert!(!theorem3_solve(7, 0).unwrap().chain_holds);
    }

    #[test]
    fn b_matches_matrix_powers() {
        for e in 0..7u64 {
            for a in 0..=e * e {
                let b = b_sequence(e, a, 20);
                for n in 1..=20usize {
                    let p = omega_power(e, a, n as u64);
                    // omega^n (1, 0) is the first column
                    assert_eq!(p[0][0], b[n]);
                    assert_eq!(p[1][0], BigInt::from(a) * &b[n - 1]);
                }
            }
        }
    }

    #[test]
    fn rho_is_continuous_at_the_parabola() {
        for e in [2u64, 4, 6, 8] {
            let a = e * e / 4;
            let at = spectral_data(e, a).rho;
            assert_eq!(at, e as f64 / 2.0);
            assert!((spectral_data(e, a + 1).rho - (a as f64 + 1.0).sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn real_eigenvalues_are_bounded() {
        for e in 0..10u64 {
            for a in 0..=e * e / 4 {
                let d = spectral_data(e, a);
                let small = d.small_root().unwrap();
                assert!(small >= -1e-12 && d.rho <= e as f64 + 1e-12, "e={e} a={a}");
            }
        }
    }

    #[test]
    fn ratios_approach_rho() {
        for e in 2..8u64 {
            for a in 1..(e * e).div_ceil(4) {
                if 4 * a >= e * e {
                    continue;
                }
                let r = b_ratio(e, a, 40).unwrap();
                assert!((r - spectral_data(e, a).rho).abs() < 1e-3, "e={e} a={a} r={r}");
            }
        }
    }

    #[test]
    fn csv_shapes() {
        let sweep = rho_sweep_csv(7, 49);
        assert_eq!(sweep.lines().count(), 51);
        let pairs = gamma_pairs_csv(7);
        assert!(pairs.contains("6,1,6\n"));
        assert!(pairs.contains("10,2,5\n"));
        assert!(pairs.contains("12,3,4\n"));
    }
}
