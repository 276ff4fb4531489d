//! Seeded random algebras and modules for property checks.

use std::sync::Arc;

use rand::Rng;

use crate::algebra::ShortLocalAlgebra;
use crate::amodule::{FreeElement, FreeLayout, ModulePresentation};
use crate::exactla::PrimeField;
use crate::Result;

fn random_scalar<R: Rng>(rng: &mut R, field: PrimeField) -> u32 {
    match rng.gen_range(0..4) {
        0 => 1,
        1 => field.neg(1),
        _ => rng.gen_range(1..field.p()),
    }
}

/// A random short local algebra with Hilbert type `(e, a)`, `1 <= e <=
/// max_e`, `0 <= a <= min(max_a, e^2)`. Products are sparse with small
/// coefficients so that the algebras are far from generic.
pub fn random_algebra<R: Rng>(rng: &mut R, field: PrimeField, max_e: usize, max_a: usize) -> ShortLocalAlgebra {
    let e = rng.gen_range(1..=max_e);
    let a = rng.gen_range(0..=max_a.min(e * e));
    random_algebra_of_type(rng, field, e, a)
}

pub fn random_algebra_of_type<R: Rng>(rng: &mut R, field: PrimeField, e: usize, a: usize) -> ShortLocalAlgebra {
    loop {
        let density = rng.gen_range(0.2..0.8);
        let c: Vec<Vec<Vec<u32>>> = (0..e)
            .map(|_| {
                (0..e)
                    .map(|_| {
                        (0..a)
                            .map(|_| if rng.gen_bool(density / a.max(1) as f64 + 0.05) { random_scalar(rng, field) } else { 0 })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        if let Ok(alg) = ShortLocalAlgebra::new(field, e, a, c) {
            return alg;
        }
    }
}

/// A random module of Loewy length at most 2: `F_t / U` with `U` generated
/// by `J^2 F_t` and a few sparse elements of the `x` layer, `1 <= t <= max_t`.
pub fn random_loewy2_module<R: Rng>(rng: &mut R, alg: &Arc<ShortLocalAlgebra>, max_t: usize) -> Result<ModulePresentation> {
    let t = rng.gen_range(1..=max_t);
    let lay = FreeLayout::new(alg, t);
    let field = alg.field();
    let mut gens = Vec::new();
    for idx in lay.z_start()..lay.dim() {
        let mut coords = vec![0; lay.dim()];
        coords[idx] = 1;
        gens.push(FreeElement { rank: t, coords });
    }
    let k = rng.gen_range(0..=t * alg.e());
    for _ in 0..k {
        let mut coords = vec![0; lay.dim()];
        let terms = rng.gen_range(1..=3);
        for _ in 0..terms {
            let idx = rng.gen_range(lay.x_start()..lay.z_start());
            coords[idx] = random_scalar(rng, field);
        }
        gens.push(FreeElement { rank: t, coords });
    }
    ModulePresentation::new(alg.clone(), t, &gens)
}

/// A random module without the Loewy length restriction: relations are
/// sparse elements of `J F_t`.
pub fn random_module<R: Rng>(rng: &mut R, alg: &Arc<ShortLocalAlgebra>, max_t: usize) -> Result<ModulePresentation> {
    let t = rng.gen_range(1..=max_t);
    let lay = FreeLayout::new(alg, t);
    let field = alg.field();
    let k = rng.gen_range(0..=t * (alg.e() + alg.a()));
    let mut gens = Vec::new();
    for _ in 0..k {
        let mut coords = vec![0; lay.dim()];
        for _ in 0..rng.gen_range(1..=3) {
            let idx = rng.gen_range(lay.x_start()..lay.dim());
            coords[idx] = random_scalar(rng, field);
        }
        gens.push(FreeElement { rank: t, coords });
    }
    ModulePresentation::new(alg.clone(), t, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_structures_are_valid() {
        let f = PrimeField::new(32003).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let alg = Arc::new(random_algebra(&mut rng, f, 4, 4));
            assert!(alg.a() <= alg.e() * alg.e());
            assert_eq!(alg.recompute_hilbert_type().unwrap(), alg.hilbert_type());
            let m = random_loewy2_module(&mut rng, &alg, 3).unwrap();
            assert!(m.is_loewy_le2());
            let n = random_module(&mut rng, &alg, 3).unwrap();
            assert!(n.rank() >= 1);
        }
    }
}
