//! Two-sided ideals and left Conca ideals: `U^2 = 0` and `J^2 ⊆ JU`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, ShortLocalAlgebra};
use crate::exactla::{Mat, Subspace};
use crate::{Error, Result};

/// A two-sided ideal given by generators and its closure.
#[derive(Clone, Debug)]
pub struct IdealSpec {
    pub algebra: Arc<ShortLocalAlgebra>,
    pub generators: Vec<AlgebraElement>,
    pub closure: Subspace,
}

fn span_of(alg: &ShortLocalAlgebra, vs: &[Vec<u32>]) -> Subspace {
    if vs.is_empty() {
        Subspace::zero(alg.field(), alg.dim())
    } else {
        Subspace::span(alg.field(), alg.dim(), vs)
    }
}

/// Smallest subspace containing `gens` and closed under left and right
/// multiplication by every generator of `J`.
pub fn ideal_closure(alg: Arc<ShortLocalAlgebra>, gens: &[AlgebraElement]) -> Result<IdealSpec> {
    if gens.iter().any(|g| !g.in_radical()) {
        return Err(Error::GeneratorNotInRadical);
    }
    let mults: Vec<Mat> = (0..alg.e())
        .flat_map(|i| {
            let x = alg.x(i);
            [alg.left_mult_matrix(&x), alg.right_mult_matrix(&x)]
        })
        .collect();
    let mut space = span_of(&alg, &gens.iter().map(|g| g.0.clone()).collect::<Vec<_>>());
    loop {
        let mut vs = space.basis_vectors();
        for b in space.basis_vectors() {
            for m in &mults {
                vs.push(m.mul_vec(&b));
            }
        }
        let next = span_of(&alg, &vs);
        if next.dim() == space.dim() {
            break;
        }
        space = next;
    }
    Ok(IdealSpec {
        algebra: alg,
        generators: gens.to_vec(),
        closure: space,
    })
}

/// Verdict of the left Conca test with its two components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConcaVerdict {
    pub conca: bool,
    pub u2_zero: bool,
    pub j2_in_ju: bool,
}

fn products(alg: &ShortLocalAlgebra, left: &[Vec<u32>], right: &[Vec<u32>]) -> Subspace {
    let mut vs = Vec::new();
    for u in left {
        for v in right {
            let p = alg.multiply(&AlgebraElement(u.clone()), &AlgebraElement(v.clone()));
            if !p.is_zero() {
                vs.push(p.0);
            }
        }
    }
    span_of(alg, &vs)
}

fn radical_basis(alg: &ShortLocalAlgebra) -> Vec<Vec<u32>> {
    (1..alg.dim()).map(|k| alg.basis_element(k).0).collect()
}

pub fn is_left_conca_ideal(alg: &ShortLocalAlgebra, u: &IdealSpec) -> ConcaVerdict {
    let ub = u.closure.basis_vectors();
    let u2_zero = products(alg, &ub, &ub).dim() == 0;
    let ju = products(alg, &radical_basis(alg), &ub);
    let j2_in_ju = alg.radical_square().is_subspace_of(&ju).expect("same ambient");
    ConcaVerdict {
        conca: u2_zero && j2_in_ju,
        u2_zero,
        j2_in_ju,
    }
}

/// `x != 0`, `x^2 = 0` and `Jx = J^2`.
pub fn is_left_conca_generator(alg: &ShortLocalAlgebra, x: &AlgebraElement) -> bool {
    if x.is_zero() || !alg.multiply(x, x).is_zero() {
        return false;
    }
    let jx = products(alg, &radical_basis(alg), std::slice::from_ref(&x.0));
    jx == alg.radical_square()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Random,
}

impl std::str::FromStr for SearchMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(SearchMode::Exhaustive),
            "random" => Ok(SearchMode::Random),
            _ => Err(Error::Input(format!("unknown search mode `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub mode: SearchMode,
    pub p: u32,
    pub max_generators: usize,
    pub candidates_checked: u128,
    /// Generators (signed coefficient lists) of a left Conca ideal.
    pub witness: Option<Vec<Vec<i64>>>,
    pub witness_dim: Option<usize>,
    /// The whole candidate space was enumerated.
    pub exhaustive_complete: bool,
    pub note: String,
}

/// Looks for a left Conca ideal generated by at most `max_generators`
/// elements of `J`. Exhaustive mode enumerates every tuple of coordinate
/// vectors and needs `p^(k (e+a)) <= budget`; random mode draws `budget`
/// tuples from a seeded generator.
pub fn search_conca(
    alg: Arc<ShortLocalAlgebra>,
    mode: SearchMode,
    budget: u128,
    max_generators: usize,
    seed: u64,
) -> Result<SearchOutcome> {
    if !(1..=2).contains(&max_generators) {
        return Err(Error::OutOfRange(format!("max generators must be 1 or 2, got {max_generators}")));
    }
    let p = alg.field().p();
    let n = alg.e() + alg.a();
    let single = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    let needed = (1..=max_generators as u32)
        .map(|k| single.checked_pow(k).unwrap_or(u128::MAX))
        .fold(0u128, |s, v| s.saturating_add(v));

    let to_element = |coords: &[u32]| {
        let mut v = vec![0u32; alg.dim()];
        v[1..].copy_from_slice(coords);
        AlgebraElement(v)
    };
    let field = alg.field();
    let test = |gens: Vec<AlgebraElement>| -> Result<Option<(Vec<Vec<i64>>, usize)>> {
        if gens.iter().all(|g| g.is_zero()) {
            return Ok(None);
        }
        let ideal = ideal_closure(alg.clone(), &gens)?;
        if is_left_conca_ideal(&alg, &ideal).conca {
            let signed = gens
                .iter()
                .map(|g| g.0.iter().map(|&c| field.to_signed(c)).collect())
                .collect();
            return Ok(Some((signed, ideal.closure.dim())));
        }
        Ok(None)
    };

    let mut checked: u128 = 0;
    let mut found = None;
    let mut complete = false;
    match mode {
        SearchMode::Exhaustive => {
            if needed > budget {
                return Err(Error::BudgetExceeded { needed, budget });
            }
            let decode = |mut idx: u128| -> Vec<u32> {
                (0..n)
                    .map(|_| {
                        let c = (idx % p as u128) as u32;
                        idx /= p as u128;
                        c
                    })
                    .collect()
            };
            'outer: for i in 1..single {
                checked += 1;
                if let Some(w) = test(vec![to_element(&decode(i))])? {
                    found = Some(w);
                    break;
                }
                if max_generators == 2 {
                    for j in (i + 1)..single {
                        checked += 1;
                        if let Some(w) = test(vec![to_element(&decode(i)), to_element(&decode(j))])? {
                            found = Some(w);
                            break 'outer;
                        }
                    }
                }
            }
            complete = found.is_none();
        }
        SearchMode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            while checked < budget {
                checked += 1;
                let k = rng.gen_range(1..=max_generators);
                let gens = (0..k)
                    .map(|_| to_element(&(0..n).map(|_| rng.gen_range(0..p)).collect::<Vec<_>>()))
                    .collect();
                if let Some(w) = test(gens)? {
                    found = Some(w);
                    break;
                }
            }
        }
    }
    let note = match (&found, complete) {
        (Some(_), _) => "witness found".to_string(),
        (None, true) => format!(
            "no left Conca ideal generated by at most {max_generators} element(s) over GF({p}); this says nothing about other fields or more generators"
        ),
        (None, false) => "no witness within budget; this is not a proof of nonexistence".to_string(),
    };
    Ok(SearchOutcome {
        mode,
        p,
        max_generators,
        candidates_checked: checked,
        witness_dim: found.as_ref().map(|w| w.1),
        witness: found.map(|w| w.0),
        exhaustive_complete: complete,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::PrimeField;
    use crate::presets::{ex_6_3, lambda_cd, lambda_conca};

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn closures() {
        let alg = ex_6_3(gf(32003)).unwrap().algebra;
        let empty = ideal_closure(alg.clone(), &[]).unwrap();
        assert_eq!(empty.closure.dim(), 0);
        // x A = span{x, xy, xz}; nothing multiplies x from the left
        let xi = ideal_closure(alg.clone(), &[alg.x(0)]).unwrap();
        let want = Subspace::coordinate(alg.field(), alg.dim(), [1, 4, 5]);
        assert_eq!(xi.closure, want);
        let zi = ideal_closure(alg.clone(), &[alg.z(1)]).unwrap();
        assert_eq!(zi.closure.dim(), 1);
        assert!(matches!(ideal_closure(alg.clone(), &[alg.one()]), Err(Error::GeneratorNotInRadical)));
    }

    #[test]
    fn conca_verdicts() {
        let f = gf(32003);
        let (alg, _) = lambda_cd(f, 2, 2).unwrap();
        let u = ideal_closure(alg.clone(), &[alg.x(2), alg.x(3)]).unwrap();
        assert!(is_left_conca_ideal(&alg, &u).conca);
        let j = ideal_closure(alg.clone(), &(0..alg.e()).map(|i| alg.x(i)).collect::<Vec<_>>()).unwrap();
        let v = is_left_conca_ideal(&alg, &j);
        assert!(!v.conca && !v.u2_zero);

        let a = ex_6_3(f).unwrap().algebra;
        let op = Arc::new(a.opposite());
        let xi = ideal_closure(op.clone(), &[op.x(0)]).unwrap();
        assert!(is_left_conca_ideal(&op, &xi).conca);
        let xa = ideal_closure(a.clone(), &[a.x(0)]).unwrap();
        assert!(!is_left_conca_ideal(&a, &xa).conca);
    }

    #[test]
    fn conca_generators() {
        let f = gf(32003);
        let (alg, _) = lambda_cd(f, 3, 1).unwrap();
        assert!(is_left_conca_generator(&alg, &alg.x(3)));
        assert!(!is_left_conca_generator(&alg, &alg.zero()));
        let fib = crate::presets::alg_8_2_a(f).unwrap().algebra;
        assert!(!is_left_conca_generator(&fib, &fib.x(0)));
    }

    #[test]
    fn searches() {
        let f2 = gf(2);
        let (alg, _) = lambda_cd(f2, 2, 1).unwrap();
        let out = search_conca(alg, SearchMode::Exhaustive, 1 << 10, 1, 0).unwrap();
        assert!(out.witness.is_some());

        let a = ex_6_3(f2).unwrap().algebra;
        let out = search_conca(a.clone(), SearchMode::Exhaustive, 1 << 10, 1, 0).unwrap();
        assert!(out.witness.is_none() && out.exhaustive_complete);
        assert_eq!(out.candidates_checked, 31);

        let zero_sq = Arc::new(lambda_conca(f2, 1, &[0]).unwrap());
        assert!(search_conca(zero_sq, SearchMode::Exhaustive, 100, 1, 0).unwrap().witness.is_some());

        let big = ex_6_3(gf(32003)).unwrap().algebra;
        assert!(matches!(
            search_conca(big.clone(), SearchMode::Exhaustive, 1000, 1, 0),
            Err(Error::BudgetExceeded { .. })
        ));
        let r = search_conca(big, SearchMode::Random, 50, 2, 7).unwrap();
        assert!(!r.exhaustive_complete);
    }
}
