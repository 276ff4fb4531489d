//! The acceptance checks, shared by `shortloc verify-paper` and the
//! `acceptance` test target.
//!
//! Criteria 1 to 6 also return a fingerprint (every integer they looked at)
//! so that criterion 10 can compare runs over different primes.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::amodule::{DimensionVector, ModulePresentation};
use crate::conca::{ideal_closure, is_left_conca_ideal, search_conca, SearchMode};
use crate::exactla::PrimeField;
use crate::presets::{self, lambda_cd, lambda_conca, lambda_prime_cd};
use crate::random::{random_algebra, random_loewy2_module};
use crate::resolution::{betti_sequence, is_aligned, is_koszul_up_to, main_lemma_w, syzygy, DEFAULT_DIM_CAP};
use crate::spectral::{b_closed_form, b_sequence, spectral_data, theorem3_solve};
use crate::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;
pub const PROPERTY_CASES: usize = 120;
pub const PRIMES: [u32; 3] = [2, 3, 32003];

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    /// Labels of the checks that failed.
    pub failed_checks: Vec<String>,
    #[serde(skip)]
    pub fingerprint: Vec<i64>,
}

/// Checks whose expected values are known to be wrong as stated: the value
/// is impossible for the given Hilbert type. They still run and still
/// report FAIL; the suite only tolerates them by name.
pub const KNOWN_DISCREPANCIES: &[(u8, &str, &str)] = &[(
    6,
    EX_6_3_LITERAL,
    "Omega S = S + W and Omega W = W^2 give Omega^n S = S + W^(2^n - 1), i.e. (2^(n+1)-1, 2^(n+1)-2) = omega^n (1,0); \
     (2n+1, 2n) disagrees from n = 2 on and would break |Omega^2 S| = |omega(3,2)| = 13",
)];

const EX_6_3_LITERAL: &str = "dim Omega^n S = (2n+1, 2n)";

impl CriterionReport {
    /// Failed checks not covered by [`KNOWN_DISCREPANCIES`].
    pub fn unexplained_failures(&self) -> Vec<&str> {
        self.failed_checks
            .iter()
            .map(|s| s.as_str())
            .filter(|l| !KNOWN_DISCREPANCIES.iter().any(|(id, k, _)| *id == self.id && k == l))
            .collect()
    }

    /// Known discrepancies of this criterion that did not show up.
    pub fn vanished_discrepancies(&self) -> Vec<&'static str> {
        KNOWN_DISCREPANCIES
            .iter()
            .filter(|(id, k, _)| *id == self.id && !self.failed_checks.iter().any(|l| l == k))
            .map(|(_, k, _)| *k)
            .collect()
    }
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} [{}] {}: {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail
        )
    }
}

/// Collects named comparisons; the criterion passes iff all hold.
struct Checks {
    failures: Vec<String>,
    labels: Vec<String>,
    fingerprint: Vec<i64>,
    count: usize,
}

impl Checks {
    fn new() -> Self {
        Checks {
            failures: Vec::new(),
            labels: Vec::new(),
            fingerprint: Vec::new(),
            count: 0,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        self.fingerprint.push(ok as i64);
        if !ok {
            let msg = what();
            self.labels.push(msg.clone());
            self.failures.push(msg);
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        let ok = got == want;
        self.count += 1;
        self.fingerprint.push(ok as i64);
        if !ok {
            self.labels.push(what.to_string());
            self.failures.push(format!("{what}: got {got:?}, expected {want:?}"));
        }
    }

    fn record(&mut self, vals: impl IntoIterator<Item = i64>) {
        self.fingerprint.extend(vals);
    }

    fn record_dims(&mut self, dims: &[DimensionVector]) {
        self.record(dims.iter().flat_map(|d| [d.top as i64, d.rad as i64]));
    }

    fn finish(self, id: u8, title: &str) -> CriterionReport {
        let passed = self.failures.is_empty();
        let detail = if passed {
            format!("{} checks", self.count)
        } else {
            format!("{} of {} checks failed: {}", self.failures.len(), self.count, self.failures.join("; "))
        };
        CriterionReport {
            id,
            title: title.to_string(),
            passed,
            detail,
            failed_checks: self.labels,
            fingerprint: self.fingerprint,
        }
    }
}

fn errored(id: u8, title: &str, e: Error) -> CriterionReport {
    CriterionReport {
        id,
        title: title.to_string(),
        passed: false,
        detail: format!("error: {e}"),
        failed_checks: vec!["error".to_string()],
        fingerprint: vec![-1],
    }
}

fn wrap(id: u8, title: &str, f: impl FnOnce(&mut Checks) -> Result<()>) -> CriterionReport {
    let mut c = Checks::new();
    match f(&mut c) {
        Ok(()) => c.finish(id, title),
        Err(e) => errored(id, title, e),
    }
}

fn dims(m: &ModulePresentation, n: usize) -> Result<Vec<DimensionVector>> {
    let r = betti_sequence(m, n, DEFAULT_DIM_CAP)?;
    if r.truncated {
        return Err(Error::DimensionCap { cap: DEFAULT_DIM_CAP });
    }
    Ok(r.dimvec_seq.into_iter().map(|d| d.expect("Loewy <= 2")).collect())
}

fn betti(m: &ModulePresentation, n: usize) -> Result<Vec<u64>> {
    let r = betti_sequence(m, n, DEFAULT_DIM_CAP)?;
    if r.truncated {
        return Err(Error::DimensionCap { cap: DEFAULT_DIM_CAP });
    }
    Ok(r.t_seq)
}

pub fn criterion_1(field: PrimeField) -> CriterionReport {
    wrap(1, "Fibonacci Betti numbers over alg_8_2_A", |c| {
        let p = presets::alg_8_2_a(field)?;
        let t = betti(&p.module("S")?, 8)?;
        c.record(t.iter().map(|&v| v as i64));
        c.eq("t_0..t_5", t[..6].to_vec(), vec![1, 3, 8, 21, 55, 144]);
        let mut rec = vec![1u64, 3];
        while rec.len() < 8 {
            let n = rec.len();
            rec.push(3 * rec[n - 1] - rec[n - 2]);
        }
        c.eq("t_6, t_7", t[6..8].to_vec(), rec[6..8].to_vec());
        let psi = (3.0 + 5f64.sqrt()) / 2.0;
        let ratio = t[8] as f64 / t[7] as f64;
        c.check((ratio - psi).abs() < 0.01, || format!("t_8/t_7 = {ratio} not within 0.01 of {psi}"));
        Ok(())
    })
}

pub fn criterion_2(field: PrimeField) -> CriterionReport {
    wrap(2, "powers of three over alg_8_2_Aprime", |c| {
        let p = presets::alg_8_2_aprime(field)?;
        let t = betti(&p.module("S")?, 6)?;
        c.record(t.iter().map(|&v| v as i64));
        c.eq("t_0..t_6", t, (0..=6).map(|n| 3u64.pow(n)).collect());
        Ok(())
    })
}

pub fn criterion_3(field: PrimeField) -> CriterionReport {
    wrap(3, "Omega M = M^d over lambda(c,d) and lambda'(c,d)", |c| {
        for (cc, d) in [(2usize, 1usize), (3, 1), (3, 2), (2, 2)] {
            for prime in [false, true] {
                let (_, m) = if prime { lambda_prime_cd(field, cc, d)? } else { lambda_cd(field, cc, d)? };
                let name = format!("{}({cc},{d})", if prime { "lambda'" } else { "lambda" });
                let got = dims(&m, 5)?;
                c.record_dims(&got);
                let want: Vec<DimensionVector> = (0..=5u32)
                    .map(|n| {
                        let k = (d as u64).pow(n);
                        DimensionVector::new(k, k * cc as u64)
                    })
                    .collect();
                c.eq(&format!("{name} dim Omega^n M"), got, want);
                let k = is_koszul_up_to(&m, 5)?;
                c.eq(&format!("{name} Koszul up to 5"), k.koszul_up_to_bound, true);
            }
        }
        Ok(())
    })
}

/// Parameters `(c, a_list)` of the Conca presets used by criterion 4; the
/// last one is `lambda(2,2)`.
pub const CONCA_CHOICES: &[(usize, &[usize])] =
    &[(1, &[1]), (1, &[1, 1]), (2, &[1, 1]), (2, &[2, 1]), (3, &[1, 2]), (2, &[2, 2])];

pub fn criterion_4(field: PrimeField) -> CriterionReport {
    wrap(4, "Koszul simple module over algebras with a Conca ideal", |c| {
        for &(cc, a_list) in CONCA_CHOICES {
            let alg = Arc::new(lambda_conca(field, cc, a_list)?);
            let name = format!("conca({cc};{a_list:?})");
            let u = ideal_closure(alg.clone(), &presets::conca_ideal_generators(&alg, cc))?;
            c.eq(&format!("{name} U is left Conca"), is_left_conca_ideal(&alg, &u).conca, true);
            let (e, a) = alg.hilbert_type();
            let b = b_sequence(e as u64, a as u64, 6);
            let want: Vec<DimensionVector> = (0..=6)
                .map(|n| {
                    let prev = if n == 0 { 0 } else { u64::try_from(&b[n - 1]).expect("small") };
                    DimensionVector::new(u64::try_from(&b[n]).expect("small"), prev * a as u64)
                })
                .collect();
            let got = dims(&ModulePresentation::simple(alg.clone()), 6)?;
            c.record_dims(&got);
            c.eq(&format!("{name} dim Omega^n S"), got, want);
        }
        let (alg22, _) = lambda_cd(field, 2, 2)?;
        let same = lambda_conca(field, 2, &[2, 2])?;
        c.eq("lambda(2,2) = conca(2;[2,2])", alg22.to_file().products, same.to_file().products);
        Ok(())
    })
}

pub fn criterion_5(field: PrimeField) -> CriterionReport {
    wrap(5, "aligned examples ex_3_6_2 and ex_3_6_3", |c| {
        let p = presets::ex_3_6_2(field)?;
        let m = p.module("M")?;
        let rep = is_aligned(&m)?;
        let om = syzygy(&m).to_action();
        c.record_dims(&[rep.dim_m, rep.dim_omega]);
        c.eq("ex_3_6_2 dim M", rep.dim_m, DimensionVector::new(1, 1));
        c.eq("ex_3_6_2 dim Omega M", rep.dim_omega, DimensionVector::new(2, 1));
        c.eq("ex_3_6_2 aligned", rep.aligned, true);
        c.eq("ex_3_6_2 Omega M bipartite", om.is_bipartite()?, false);

        let p = presets::ex_3_6_3(field)?;
        let m = p.module("M")?;
        let rep = is_aligned(&m)?;
        let om = syzygy(&m).to_action();
        let simple = om.simple_summand_count()?;
        c.record_dims(&[rep.dim_m, rep.dim_omega]);
        c.record([simple as i64]);
        c.eq("ex_3_6_3 dim M", rep.dim_m, DimensionVector::new(3, 6));
        c.eq("ex_3_6_3 dim Omega M", rep.dim_omega, DimensionVector::new(3, 6));
        c.eq("ex_3_6_3 aligned", rep.aligned, true);
        c.eq("ex_3_6_3 simple summands of Omega M", simple, 1);
        c.eq("ex_3_6_3 J Omega M = J^2 P", rep.radical_equality, true);
        Ok(())
    })
}

pub fn criterion_6(field: PrimeField) -> CriterionReport {
    wrap(6, "ex_6_3: Betti growth and absence of Conca ideals", |c| {
        let p = presets::ex_6_3(field)?;
        let got = dims(&p.module("S")?, 5)?;
        c.record_dims(&got);
        let literal: Vec<DimensionVector> = (0..=5u64).map(|n| DimensionVector::new(2 * n + 1, 2 * n)).collect();
        c.eq(EX_6_3_LITERAL, got.clone(), literal);
        let koszul: Vec<DimensionVector> = (0..=5u32)
            .map(|n| DimensionVector::new(2u64.pow(n + 1) - 1, 2u64.pow(n + 1) - 2))
            .collect();
        c.eq("dim Omega^n S = omega^n (1,0)", got, koszul);
        let w = p.module("W")?;
        let dw = dims(&w, 1)?;
        c.record_dims(&dw);
        c.eq("dim Omega W = dim W^2", dw[1], dw[0] + dw[0]);

        let op = Arc::new(p.algebra.opposite());
        let xi = ideal_closure(op.clone(), &[op.x(0)])?;
        c.record([xi.closure.dim() as i64]);
        c.eq("x generates a left Conca ideal of the opposite algebra", is_left_conca_ideal(&op, &xi).conca, true);

        let a2 = presets::ex_6_3(PrimeField::new(2)?)?.algebra;
        let out = search_conca(a2, SearchMode::Exhaustive, 1 << 12, 1, 0)?;
        c.record([out.candidates_checked as i64]);
        c.eq("single-generator witness over GF(2)", out.witness, None);
        c.eq("search completed", out.exhaustive_complete, true);
        Ok(())
    })
}

pub fn criterion_7() -> CriterionReport {
    wrap(7, "spectral pins", |c| {
        let s = spectral_data(3, 2);
        c.eq("rho(3,2)", s.rho, 2.0);
        for (a, rho, pair) in [(6u64, 6.0, (1u64, 6u64)), (10, 5.0, (2, 5)), (12, 4.0, (3, 4))] {
            c.eq(&format!("rho(7,{a})"), spectral_data(7, a).rho, rho);
            c.eq(
                &format!("theorem3_solve(7,{a})"),
                theorem3_solve(7, a).map(|g| (g.small, g.large)),
                Some(pair),
            );
        }
        for e in 0..=8u64 {
            for a in 0..=e * e {
                if 4 * a >= e * e {
                    continue;
                }
                let seq = b_sequence(e, a, 12);
                for (n, b) in seq.iter().enumerate() {
                    let cf = b_closed_form(e, a, n as u64)?;
                    c.check(&cf == b, || format!("closed form differs at (e,a,n) = ({e},{a},{n})"));
                }
            }
        }
        Ok(())
    })
}

/// Tallies from the randomized property run.
#[derive(Clone, Debug, Default, Serialize)]
pub struct PropertyTally {
    pub pairs: usize,
    pub aligned: usize,
    pub bipartite_syzygy: usize,
    pub bounded_a_algebras: usize,
}

pub fn criterion_8(seed: u64, cases: usize) -> CriterionReport {
    let mut tally = PropertyTally::default();
    let mut report = wrap(8, "randomized properties", |c| {
        let field = PrimeField::new(crate::exactla::DEFAULT_PRIME)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for case in 0..cases {
            let alg = Arc::new(random_algebra(&mut rng, field, 4, 4));
            let (e, a) = alg.hilbert_type();
            let m = random_loewy2_module(&mut rng, &alg, 3)?;
            let tag = || format!("case {case} (e,a)=({e},{a}) t={}", m.rank());

            // (a) and (b); both report inconsistencies as errors
            let rep = match is_aligned(&m) {
                Ok(r) => r,
                Err(err) => {
                    c.check(false, || format!("{}: {err}", tag()));
                    continue;
                }
            };
            c.check(true, String::new);
            match main_lemma_w(&m) {
                Ok(_) => c.check(true, String::new),
                Err(err) => c.check(false, || format!("{}: {err}", tag())),
            }

            // (c) shift identity, n <= 3
            let tm = betti(&m, 4)?;
            let om = syzygy(&m);
            let to = betti(&om, 3)?;
            c.check(tm[1..] == to[..], || format!("{}: shift identity {tm:?} vs {to:?}", tag()));

            // (d) additivity against a second random module
            let m2 = random_loewy2_module(&mut rng, &alg, 2)?;
            let t2 = betti(&m2, 3)?;
            let ts = betti(&m.direct_sum(&m2)?, 3)?;
            let sum: Vec<u64> = (0..=3).map(|k| tm[k] + t2[k]).collect();
            c.check(ts == sum, || format!("{}: additivity {ts:?} vs {sum:?}", tag()));

            // (e) bipartite syzygy forces alignedness
            let bip = om.to_action().is_bipartite()?;
            if bip {
                tally.bipartite_syzygy += 1;
            }
            c.check(!bip || rep.aligned, || format!("{}: Omega M bipartite but M not aligned", tag()));
            if rep.aligned {
                tally.aligned += 1;
            }

            // (f) lower bound for the simple module
            if 4 * a <= e * e {
                tally.bounded_a_algebras += 1;
                let ds = dims(&ModulePresentation::simple(alg.clone()), 5)?;
                let b = b_sequence(e as u64, a as u64, 5);
                for n in 0..=5 {
                    let prev = if n == 0 { 0 } else { u64::try_from(&b[n - 1]).unwrap() };
                    let bound = u64::try_from(&b[n]).unwrap() + a as u64 * prev;
                    let size = ds[n].total();
                    c.check(size >= bound, || format!("{}: |Omega^{n} S| = {size} < {bound}", tag()));
                }
            }
            tally.pairs += 1;
        }
        Ok(())
    });
    if report.passed {
        report.detail = format!(
            "{}; {} pairs (seed {seed:#x}), {} aligned, {} with bipartite syzygy, {} algebras with 4a <= e^2",
            report.detail, tally.pairs, tally.aligned, tally.bipartite_syzygy, tally.bounded_a_algebras
        );
    }
    report
}

pub fn criterion_9(field: PrimeField) -> CriterionReport {
    wrap(9, "non-Koszul and periodic modules over rem_4_2", |c| {
        let p = presets::rem_4_2(field)?;
        let n = p.module("nonkoszul")?;
        let k = is_koszul_up_to(&n, 4)?;
        c.eq("first failure", k.first_failure, Some(1));
        c.eq("dim Omega N", k.actual[1], DimensionVector::new(2, 0));
        c.eq(
            "predicted dim Omega N",
            k.predicted[1].clone(),
            ("1".to_string(), "1".to_string()),
        );
        c.eq("main lemma w", main_lemma_w(&n)?, 1);

        let i = p.module("I")?;
        let d = dims(&i, 6)?;
        c.eq("dim Omega^n I", d, vec![DimensionVector::new(1, 1); 7]);
        c.eq("I Koszul up to 6", is_koszul_up_to(&i, 6)?.koszul_up_to_bound, true);
        Ok(())
    })
}

/// Criteria 1 to 6 over one field.
pub fn field_dependent(field: PrimeField) -> Vec<CriterionReport> {
    vec![
        criterion_1(field),
        criterion_2(field),
        criterion_3(field),
        criterion_4(field),
        criterion_5(field),
        criterion_6(field),
    ]
}

/// Compares runs of criteria 1 to 6 over several primes. `runs[k]` holds the
/// reports for `PRIMES[k]`.
pub fn criterion_10(runs: &[(u32, Vec<CriterionReport>)]) -> CriterionReport {
    wrap(10, "characteristic independence of criteria 1-6", |c| {
        let (p0, base) = &runs[0];
        for (p, reps) in runs {
            for (r, b) in reps.iter().zip(base) {
                c.check(r.failed_checks == b.failed_checks, || {
                    format!("criterion {} verdicts differ between GF({p0}) and GF({p})", r.id)
                });
                c.check(r.fingerprint == b.fingerprint, || {
                    format!("criterion {} outputs differ between GF({p0}) and GF({p})", r.id)
                });
            }
        }
        Ok(())
    })
}

/// Runs every criterion; criteria 1-6 over the default prime come from the
/// same runs used for criterion 10.
pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    let (runs, rest) = std::thread::scope(|s| {
        let handles: Vec<_> = PRIMES
            .iter()
            .map(|&p| s.spawn(move || (p, field_dependent(PrimeField::new(p).expect("prime")))))
            .collect();
        let h7 = s.spawn(criterion_7);
        let h8 = s.spawn(move || criterion_8(seed, PROPERTY_CASES));
        let h9 = s.spawn(|| criterion_9(PrimeField::new(crate::exactla::DEFAULT_PRIME).expect("prime")));
        let runs: Vec<(u32, Vec<CriterionReport>)> = handles.into_iter().map(|h| h.join().expect("worker")).collect();
        (runs, vec![h7.join().expect("worker"), h8.join().expect("worker"), h9.join().expect("worker")])
    });
    let c10 = criterion_10(&runs);
    let mut out = runs
        .iter()
        .find(|(p, _)| *p == crate::exactla::DEFAULT_PRIME)
        .map(|(_, r)| r.clone())
        .expect("default prime in PRIMES");
    out.extend(rest);
    out.push(c10);
    out
}
