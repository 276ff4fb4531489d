//! Named algebras and modules.
//!
//! Every preset is a hand translation of a presentation by generators and
//! relations into structure constants. Generators are listed first, then
//! the basis of `J^2` and the nonzero products (all other products of
//! generators vanish).
//!
//! | name             | generators | `J^2` basis   | nonzero products                         |
//! |------------------|------------|---------------|------------------------------------------|
//! | `ex_3_6_2`       | x, y, z    | xy            | xy = yx = z1                             |
//! | `ex_3_6_3`       | x, y, z    | x², xy        | xx = z1, xy = yx = z2, zy = z1           |
//! | `ex_6_3`         | x, y, z    | xy, xz        | xy = z1, xz = z2, yy = z2                |
//! | `alg_8_2_A`      | x, y, z    | x², zy        | xx = z1, zy = z2                         |
//! | `alg_8_2_Aprime` | x, y, z    | x², y²        | xx = z1, yy = z2                         |
//! | `rem_4_2`        | x, y       | yx            | yx = z1                                  |
//! | `lambda_C_D`     | x1..xC, y1..yD | xi yj     | xi yj = yj xi = z(i,j)                   |
//! | `lambda_prime_C_D` | as above |               | xi yj = z(i,j) only                      |
//! | `conca_C_A1_..._AD` | x1..xC, y1..yD | xi yj, i <= A(j) | xi yj = yj xi = z(i,j)            |

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{AlgebraElement, ShortLocalAlgebra};
use crate::amodule::{quotient_by_left_ideal, ActionModule, FreeElement, ModulePresentation};
use crate::exactla::{PrimeField, Subspace};
use crate::{Error, Result};

/// An algebra with its distinguished modules.
#[derive(Clone, Debug)]
pub struct Preset {
    pub name: String,
    pub description: String,
    pub algebra: Arc<ShortLocalAlgebra>,
    pub modules: Vec<(String, ModulePresentation)>,
}

impl Preset {
    /// Looks up a distinguished module. `S` is always the simple module.
    pub fn module(&self, name: &str) -> Result<ModulePresentation> {
        if name == "S" {
            return Ok(ModulePresentation::simple(self.algebra.clone()));
        }
        self.modules
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m.clone())
            .ok_or_else(|| Error::UnknownModule {
                preset: self.name.clone(),
                module: name.to_string(),
            })
    }

    pub fn module_names(&self) -> Vec<String> {
        let mut out = vec!["S".to_string()];
        out.extend(self.modules.iter().map(|(n, _)| n.clone()).filter(|n| n != "S"));
        out
    }

    pub fn summary(&self) -> PresetSummary {
        PresetSummary {
            name: self.name.clone(),
            hilbert_type: self.algebra.hilbert_type(),
            commutative: self.algebra.is_commutative(),
            modules: self.module_names(),
            description: self.description.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PresetSummary {
    pub name: String,
    pub hilbert_type: (usize, usize),
    pub commutative: bool,
    pub modules: Vec<String>,
    pub description: String,
}

/// Names of the fixed presets; the parametric families `lambda_C_D`,
/// `lambda_prime_C_D` and `conca_C_A1_..._AD` are also accepted by [`preset`].
pub const FIXED_PRESETS: &[&str] = &["ex_3_6_2", "ex_3_6_3", "ex_6_3", "alg_8_2_A", "alg_8_2_Aprime", "rem_4_2"];

/// Presets shown by `preset list`: the fixed ones and a few family members.
pub const LISTED_PRESETS: &[&str] = &[
    "ex_3_6_2",
    "ex_3_6_3",
    "ex_6_3",
    "alg_8_2_A",
    "alg_8_2_Aprime",
    "rem_4_2",
    "lambda_2_1",
    "lambda_3_2",
    "lambda_prime_2_1",
    "conca_2_1_1",
];

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn build(field: PrimeField, e: usize, a: usize, products: &[(usize, usize, Vec<i64>)], x: &[&str], z: &[&str]) -> Result<Arc<ShortLocalAlgebra>> {
    Ok(Arc::new(
        ShortLocalAlgebra::from_products(field, e, a, products)?.with_names(names(x), names(z))?,
    ))
}

fn quotient(alg: &Arc<ShortLocalAlgebra>, gens: &[AlgebraElement]) -> Result<ModulePresentation> {
    quotient_by_left_ideal(alg.clone(), gens)
}

pub fn ex_3_6_2(field: PrimeField) -> Result<Preset> {
    let alg = build(field, 3, 1, &[(0, 1, vec![1]), (1, 0, vec![1])], &["x", "y", "z"], &["xy"])?;
    let m = quotient(&alg, &[alg.x(1), alg.x(2)])?;
    Ok(Preset {
        name: "ex_3_6_2".into(),
        description: "Hilbert type (3,1); M = A/(Ay+Az) is aligned with non-bipartite syzygy".into(),
        algebra: alg,
        modules: vec![("M".into(), m)],
    })
}

pub fn ex_3_6_3(field: PrimeField) -> Result<Preset> {
    let alg = build(
        field,
        3,
        2,
        &[(0, 0, vec![1, 0]), (0, 1, vec![0, 1]), (1, 0, vec![0, 1]), (2, 1, vec![1, 0])],
        &["x", "y", "z"],
        &["x2", "xy"],
    )?;
    let (x, y, z, o) = (alg.x(0), alg.x(1), alg.x(2), alg.zero());
    let gens = [
        FreeElement::from_blocks(&alg, &[x.clone(), y.clone(), o.clone()]),
        FreeElement::from_blocks(&alg, &[o.clone(), x, y]),
        FreeElement::from_blocks(&alg, &[o.clone(), z, o]),
    ];
    let m = ModulePresentation::new(alg.clone(), 3, &gens)?;
    Ok(Preset {
        name: "ex_3_6_3".into(),
        description: "Hilbert type (3,2); M = A^3/U with dim M = dim Omega M = (3,6)".into(),
        algebra: alg,
        modules: vec![("M".into(), m)],
    })
}

pub fn ex_6_3(field: PrimeField) -> Result<Preset> {
    let alg = build(
        field,
        3,
        2,
        &[(0, 1, vec![1, 0]), (0, 2, vec![0, 1]), (1, 1, vec![0, 1])],
        &["x", "y", "z"],
        &["xy", "xz"],
    )?;
    // W = Ay + Az inside the regular module
    let regular = ActionModule::free(alg.clone(), 1);
    let w = regular.generated_submodule(&[alg.x(1).0, alg.x(2).0]);
    let w_mod = regular.submodule(&w)?.to_presentation();
    Ok(Preset {
        name: "ex_6_3".into(),
        description: "Hilbert type (3,2); no left Conca ideal, W = Ay + Az with Omega W = W^2".into(),
        algebra: alg,
        modules: vec![("W".into(), w_mod)],
    })
}

pub fn alg_8_2_a(field: PrimeField) -> Result<Preset> {
    let alg = build(
        field,
        3,
        2,
        &[(0, 0, vec![1, 0]), (2, 1, vec![0, 1])],
        &["x", "y", "z"],
        &["x2", "zy"],
    )?;
    let (x, y, z) = (alg.x(0), alg.x(1), alg.x(2));
    // X = Ax = A/(Ax^2 + Ay + Az), Z = Ay = A/(Ax + Ay)
    let xm = quotient(&alg, &[alg.z(0), y.clone(), z])?;
    let zm = quotient(&alg, &[x, y])?;
    Ok(Preset {
        name: "alg_8_2_A".into(),
        description: "Hilbert type (3,2); Betti numbers of S are the even-index Fibonacci numbers".into(),
        algebra: alg,
        modules: vec![("X".into(), xm), ("Z".into(), zm)],
    })
}

pub fn alg_8_2_aprime(field: PrimeField) -> Result<Preset> {
    let alg = build(
        field,
        3,
        2,
        &[(0, 0, vec![1, 0]), (1, 1, vec![0, 1])],
        &["x", "y", "z"],
        &["x2", "y2"],
    )?;
    let (x, y, z) = (alg.x(0), alg.x(1), alg.x(2));
    let xm = quotient(&alg, &[alg.z(0), y, z.clone()])?;
    let ym = quotient(&alg, &[x, alg.z(1), z])?;
    Ok(Preset {
        name: "alg_8_2_Aprime".into(),
        description: "Hilbert type (3,2); Betti numbers of S are powers of 3".into(),
        algebra: alg,
        modules: vec![("X".into(), xm), ("Y".into(), ym)],
    })
}

pub fn rem_4_2(field: PrimeField) -> Result<Preset> {
    let alg = build(field, 2, 1, &[(1, 0, vec![1])], &["x", "y"], &["yx"])?;
    let i = quotient(&alg, &[alg.x(0)])?;
    let n = quotient(&alg, &[alg.x(1), alg.z(0)])?;
    Ok(Preset {
        name: "rem_4_2".into(),
        description: "Hilbert type (2,1), relations x^2, xy, y^2; I = A/Ax is periodic, A/span{y,yx} is not Koszul".into(),
        algebra: alg,
        modules: vec![("I".into(), i), ("nonkoszul".into(), n)],
    })
}

/// Commutative algebra on `x_1..x_c, y_1..y_d` with `x_i y_j = y_j x_i`
/// nonzero exactly when `i <= a(j)`, all other products zero.
pub fn lambda_conca(field: PrimeField, c: usize, a_list: &[usize]) -> Result<ShortLocalAlgebra> {
    lambda_family(field, c, a_list, true)
}

fn lambda_family(field: PrimeField, c: usize, a_list: &[usize], symmetric: bool) -> Result<ShortLocalAlgebra> {
    if let Some(&bad) = a_list.iter().find(|&&aj| aj > c) {
        return Err(Error::OutOfRange(format!("a(j) = {bad} exceeds c = {c}")));
    }
    let d = a_list.len();
    let e = c + d;
    let a: usize = a_list.iter().sum();
    let mut products = Vec::new();
    let mut z_names = Vec::new();
    let mut m = 0;
    for (j, &aj) in a_list.iter().enumerate() {
        for i in 0..aj {
            let mut v = vec![0i64; a];
            v[m] = 1;
            products.push((i, c + j, v.clone()));
            if symmetric {
                products.push((c + j, i, v));
            }
            z_names.push(format!("x{}y{}", i + 1, j + 1));
            m += 1;
        }
    }
    let x_names = (1..=c).map(|i| format!("x{i}")).chain((1..=d).map(|j| format!("y{j}"))).collect();
    ShortLocalAlgebra::from_products(field, e, a, &products)?.with_names(x_names, z_names)
}

/// `Ay_1 = A/(sum_j A y_j)`, dimension vector `(1, c)`.
fn ay1(alg: &Arc<ShortLocalAlgebra>, c: usize) -> Result<ModulePresentation> {
    let gens: Vec<AlgebraElement> = (c..alg.e()).map(|k| alg.x(k)).collect();
    quotient(alg, &gens)
}

fn check_cd(c: usize, d: usize) -> Result<()> {
    if c == 0 || d == 0 {
        return Err(Error::OutOfRange(format!("need c, d >= 1, got ({c}, {d})")));
    }
    Ok(())
}

/// The commutative algebra with Hilbert type `(c+d, cd)` and the module `Ay_1`.
pub fn lambda_cd(field: PrimeField, c: usize, d: usize) -> Result<(Arc<ShortLocalAlgebra>, ModulePresentation)> {
    check_cd(c, d)?;
    let alg = Arc::new(lambda_family(field, c, &vec![c; d], true)?);
    let m = ay1(&alg, c)?;
    Ok((alg, m))
}

/// Same as [`lambda_cd`] but only the products `x_i y_j` are nonzero.
pub fn lambda_prime_cd(field: PrimeField, c: usize, d: usize) -> Result<(Arc<ShortLocalAlgebra>, ModulePresentation)> {
    check_cd(c, d)?;
    let alg = Arc::new(lambda_family(field, c, &vec![c; d], false)?);
    let m = ay1(&alg, c)?;
    Ok((alg, m))
}

fn parse_params(rest: &str, name: &str) -> Result<Vec<usize>> {
    rest.split('_')
        .map(|s| s.parse::<usize>().map_err(|_| Error::UnknownPreset(name.to_string())))
        .collect()
}

/// Resolves a preset by name over the given field.
pub fn preset(name: &str, field: PrimeField) -> Result<Preset> {
    match name {
        "ex_3_6_2" => ex_3_6_2(field),
        "ex_3_6_3" => ex_3_6_3(field),
        "ex_6_3" => ex_6_3(field),
        "alg_8_2_A" | "alg_8_2_a" => alg_8_2_a(field),
        "alg_8_2_Aprime" | "alg_8_2_aprime" => alg_8_2_aprime(field),
        "rem_4_2" => rem_4_2(field),
        _ => {
            if let Some(rest) = name.strip_prefix("lambda_prime_") {
                let p = parse_params(rest, name)?;
                let [c, d] = p[..] else {
                    return Err(Error::UnknownPreset(name.to_string()));
                };
                let (alg, m) = lambda_prime_cd(field, c, d)?;
                Ok(Preset {
                    name: name.to_string(),
                    description: format!("non-commutative, Hilbert type ({}, {}); M = Ay1 with Omega M = M^{d}", c + d, c * d),
                    algebra: alg,
                    modules: vec![("M".into(), m)],
                })
            } else if let Some(rest) = name.strip_prefix("lambda_") {
                let p = parse_params(rest, name)?;
                let [c, d] = p[..] else {
                    return Err(Error::UnknownPreset(name.to_string()));
                };
                let (alg, m) = lambda_cd(field, c, d)?;
                Ok(Preset {
                    name: name.to_string(),
                    description: format!("commutative, Hilbert type ({}, {}); M = Ay1 with Omega M = M^{d}", c + d, c * d),
                    algebra: alg,
                    modules: vec![("M".into(), m)],
                })
            } else if let Some(rest) = name.strip_prefix("conca_") {
                let p = parse_params(rest, name)?;
                if p.len() < 2 {
                    return Err(Error::UnknownPreset(name.to_string()));
                }
                let alg = Arc::new(lambda_conca(field, p[0], &p[1..])?);
                let (e, a) = alg.hilbert_type();
                Ok(Preset {
                    name: name.to_string(),
                    description: format!("commutative, Hilbert type ({e}, {a}); sum of the A y_j is a left Conca ideal"),
                    algebra: alg,
                    modules: Vec::new(),
                })
            } else {
                Err(Error::UnknownPreset(name.to_string()))
            }
        }
    }
}

/// The left ideal `sum_j A y_j` of a `lambda`/`conca` preset, as generators.
pub fn conca_ideal_generators(alg: &ShortLocalAlgebra, c: usize) -> Vec<AlgebraElement> {
    (c..alg.e()).map(|k| alg.x(k)).collect()
}

/// The submodule `J` of the regular module, as a coordinate subspace.
pub fn radical_of_regular(alg: &ShortLocalAlgebra) -> Subspace {
    Subspace::coordinate(alg.field(), alg.dim(), 1..alg.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amodule::DimensionVector;

    fn gf() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn fixed_presets_have_claimed_types() {
        let want = [(3, 1), (3, 2), (3, 2), (3, 2), (3, 2), (2, 1)];
        for (name, ht) in FIXED_PRESETS.iter().zip(want) {
            let p = preset(name, gf()).unwrap();
            assert_eq!(p.algebra.hilbert_type(), ht, "{name}");
            assert_eq!(p.algebra.recompute_hilbert_type().unwrap(), ht, "{name}");
        }
    }

    #[test]
    fn distinguished_module_dimensions() {
        let dv = |name: &str, m: &str| preset(name, gf()).unwrap().module(m).unwrap().dimension_vector().unwrap();
        assert_eq!(dv("ex_3_6_2", "M"), DimensionVector::new(1, 1));
        assert_eq!(dv("ex_3_6_3", "M"), DimensionVector::new(3, 6));
        assert_eq!(dv("ex_6_3", "W"), DimensionVector::new(2, 2));
        assert_eq!(dv("alg_8_2_A", "X"), DimensionVector::new(1, 1));
        assert_eq!(dv("alg_8_2_A", "Z"), DimensionVector::new(1, 1));
        assert_eq!(dv("rem_4_2", "I"), DimensionVector::new(1, 1));
        assert_eq!(dv("rem_4_2", "nonkoszul"), DimensionVector::new(1, 1));
        assert_eq!(dv("lambda_3_2", "M"), DimensionVector::new(1, 3));
    }

    #[test]
    fn lambda_families() {
        let f = gf();
        assert_eq!(lambda_conca(f, 2, &[1, 1]).unwrap().hilbert_type(), (4, 2));
        assert_eq!(lambda_conca(f, 1, &[0]).unwrap().hilbert_type(), (2, 0));
        assert_eq!(lambda_conca(f, 2, &[2, 1]).unwrap().hilbert_type(), (4, 3));
        assert!(matches!(lambda_conca(f, 1, &[2]), Err(Error::OutOfRange(_))));
        assert!(lambda_cd(f, 2, 1).unwrap().0.is_commutative());
        let (alg, _) = lambda_prime_cd(f, 2, 1).unwrap();
        assert!(!alg.is_commutative());
        assert_eq!(lambda_prime_cd(f, 1, 1).unwrap().0.hilbert_type(), (2, 1));
    }

    #[test]
    fn name_resolution() {
        assert!(matches!(preset("nope", gf()), Err(Error::UnknownPreset(_))));
        assert!(matches!(preset("lambda_2", gf()), Err(Error::UnknownPreset(_))));
        assert_eq!(preset("conca_2_2_1", gf()).unwrap().algebra.hilbert_type(), (4, 3));
        assert_eq!(preset("lambda_prime_3_1", gf()).unwrap().algebra.hilbert_type(), (4, 3));
        let p = preset("rem_4_2", gf()).unwrap();
        assert!(matches!(p.module("Q"), Err(Error::UnknownModule { .. })));
        assert_eq!(p.module("S").unwrap().rank(), 1);
        for name in LISTED_PRESETS {
            preset(name, gf()).unwrap();
        }
    }
}
