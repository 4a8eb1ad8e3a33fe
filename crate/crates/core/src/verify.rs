//! Seeded verification campaigns, one per theorem id.
//!
//! Each trial draws from its own ChaCha stream (`seed`, trial index), trials
//! run on the rayon pool, and results are merged in trial order, so a report
//! body depends only on the theorem id and the [`RunConfig`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::complex_rep::{chi1, chi1_inverse, chi1_props_check};
use crate::error::{Error, Result};
use crate::hamilton::Hamilton;
use crate::io::{hamilton_toeplitz_to_json, matrix_to_json, quat_to_json, segre_toeplitz_to_json, RingTag};
use crate::matrix::{shift, Mat};
use crate::normality::{
    classify_normal, general_normal_equations, normal_census, Strategy, FROZEN_CONJ,
};
use crate::oracle::{
    diagonal_scan, displacement_by_matmul, hamilton_by_table, kappa_commutator_naive, naive_product,
    segre_by_table,
};
use crate::product::{
    displacement_multiply, product_displacement, product_generators_unchecked, tu_equals_vw,
    tu_minus_vw_is_toeplitz, zero_product_classify, QuadInstance, ZeroCase,
};
use crate::sample::{self, trial_rng};
use crate::scalar::{Int, Kappa, Quaternion};
use crate::segre::Segre;
use crate::toeplitz::{displacement, is_toeplitz, is_toeplitz_wrt, reconstruct, ToeplitzGen};
use crate::Rational;

/// Stored failure payloads per report; the count is always exact.
pub const MAX_STORED_FAILURES: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    Reconstruction,
    Characterization,
    Chi1Hom,
    Chi1Toeplitz,
    ProductLemma,
    TuvwToeplitz,
    TuvwZero,
    ZeroProduct,
    NormalClassification,
    ScalarProps,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Theorem::Reconstruction,
        Theorem::Characterization,
        Theorem::Chi1Hom,
        Theorem::Chi1Toeplitz,
        Theorem::ProductLemma,
        Theorem::TuvwToeplitz,
        Theorem::TuvwZero,
        Theorem::ZeroProduct,
        Theorem::NormalClassification,
        Theorem::ScalarProps,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Reconstruction => "reconstruction",
            Theorem::Characterization => "characterization",
            Theorem::Chi1Hom => "chi1-hom",
            Theorem::Chi1Toeplitz => "chi1-toeplitz",
            Theorem::ProductLemma => "product-lemma",
            Theorem::TuvwToeplitz => "tuvw-toeplitz",
            Theorem::TuvwZero => "tuvw-zero",
            Theorem::ZeroProduct => "zero-product",
            Theorem::NormalClassification => "normal-classification",
            Theorem::ScalarProps => "scalar-props",
        }
    }

    /// Smallest order the campaign can use.
    fn min_order(self) -> usize {
        match self {
            Theorem::ZeroProduct | Theorem::NormalClassification => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: u64,
    pub n_min: usize,
    pub n_max: usize,
    /// Random components are integers in `[−bound, bound]`.
    pub bound: i64,
    pub kappas: Vec<Kappa>,
    pub exhaustive: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            trials: 100,
            n_min: 1,
            n_max: 8,
            bound: 5,
            kappas: Kappa::ALL.to_vec(),
            exhaustive: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_min < 1 || self.n_min > self.n_max {
            return Err(Error::Config(format!(
                "need 1 <= n_min <= n_max, got {}..{}",
                self.n_min, self.n_max
            )));
        }
        if self.bound < 0 {
            return Err(Error::Config("component bound must be non-negative".into()));
        }
        if self.kappas.is_empty() {
            return Err(Error::Config("empty kappa set".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub trial: u64,
    pub n: usize,
    pub detail: Value,
}

/// The reproducible part of a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportBody {
    pub theorem: Theorem,
    pub seed: u64,
    pub trials: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub bound: i64,
    pub exhaustive: bool,
    pub attempted: u64,
    pub passed: u64,
    pub failures: Vec<Failure>,
    pub failures_truncated: bool,
    /// Counters and findings recorded alongside pass/fail.
    pub observations: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub body: ReportBody,
    pub wall_time_ms: u64,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.body.attempted == self.body.passed
    }
}

/// Result of one trial.
struct Outcome {
    n: usize,
    ok: bool,
    detail: Option<Value>,
    tags: Vec<String>,
}

impl Outcome {
    fn new(n: usize, ok: bool) -> Self {
        Outcome {
            n,
            ok,
            detail: None,
            tags: Vec::new(),
        }
    }

    fn detail(mut self, f: impl FnOnce() -> Value) -> Self {
        if !self.ok {
            self.detail = Some(f());
        }
        self
    }

    fn tag(mut self, t: impl Into<String>) -> Self {
        self.tags.push(t.into());
        self
    }
}

struct Tally {
    attempted: u64,
    passed: u64,
    failures: Vec<Failure>,
    truncated: bool,
    observations: BTreeMap<String, Value>,
}

fn run_trials<F>(cfg: &RunConfig, min_n: usize, f: F) -> Tally
where
    F: Fn(u64, usize, &mut ChaCha8Rng) -> Outcome + Sync,
{
    let lo = cfg.n_min.max(min_n);
    let hi = cfg.n_max.max(lo);
    let outcomes: Vec<Outcome> = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(cfg.seed, trial);
            let n = sample::order(&mut rng, lo, hi);
            f(trial, n, &mut rng)
        })
        .collect();
    let mut tally = Tally {
        attempted: 0,
        passed: 0,
        failures: Vec::new(),
        truncated: false,
        observations: BTreeMap::new(),
    };
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for (trial, o) in outcomes.into_iter().enumerate() {
        tally.attempted += 1;
        for t in o.tags {
            *counts.entry(t).or_default() += 1;
        }
        if o.ok {
            tally.passed += 1;
        } else if tally.failures.len() < MAX_STORED_FAILURES {
            tally.failures.push(Failure {
                trial: trial as u64,
                n: o.n,
                detail: o.detail.unwrap_or(Value::Null),
            });
        } else {
            tally.truncated = true;
        }
    }
    for (k, v) in counts {
        tally.observations.insert(k, json!(v));
    }
    tally
}

/// Runs `theorem` under `cfg`.
pub fn run(theorem: Theorem, cfg: &RunConfig) -> Result<VerifyReport> {
    cfg.validate()?;
    if cfg.n_max < theorem.min_order() {
        return Err(Error::Config(format!(
            "{theorem} needs n_max >= {}",
            theorem.min_order()
        )));
    }
    if cfg.exhaustive && theorem != Theorem::NormalClassification {
        return Err(Error::Config(format!(
            "--exhaustive is only defined for normal-classification, not {theorem}"
        )));
    }
    let start = Instant::now();
    let tally = match theorem {
        Theorem::Reconstruction => reconstruction(cfg),
        Theorem::Characterization => characterization(cfg),
        Theorem::Chi1Hom => chi1_hom(cfg),
        Theorem::Chi1Toeplitz => chi1_toeplitz(cfg),
        Theorem::ProductLemma => product_lemma(cfg),
        Theorem::TuvwToeplitz => tuvw(cfg, false),
        Theorem::TuvwZero => tuvw(cfg, true),
        Theorem::ZeroProduct => zero_product(cfg),
        Theorem::NormalClassification if cfg.exhaustive => normal_exhaustive(cfg),
        Theorem::NormalClassification => normal_sampled(cfg),
        Theorem::ScalarProps => scalar_props(cfg),
    };
    Ok(VerifyReport {
        body: ReportBody {
            theorem,
            seed: cfg.seed,
            trials: cfg.trials,
            n_min: cfg.n_min,
            n_max: cfg.n_max,
            bound: cfg.bound,
            exhaustive: cfg.exhaustive,
            attempted: tally.attempted,
            passed: tally.passed,
            failures: tally.failures,
            failures_truncated: tally.truncated,
            observations: tally.observations,
        },
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

type HI = Hamilton<Int>;
type HR = Hamilton<Rational>;
type SI = Segre<Int>;

fn hjson<R: crate::Real>(m: &Mat<Hamilton<R>>) -> Value {
    json!(matrix_to_json(m, RingTag::H))
}

fn reconstruction(cfg: &RunConfig) -> Tally {
    run_trials(cfg, 1, |_, n, rng| {
        let m: Mat<HI> = sample::matrix(rng, n, n, cfg.bound);
        let d = displacement(&m).expect("square");
        let back = reconstruct(&d).expect("square");
        let ok = back == m && d == displacement_by_matmul(&m, ());
        Outcome::new(n, ok).detail(|| json!({ "M": hjson(&m), "reconstructed": hjson(&back) }))
    })
}

fn characterization(cfg: &RunConfig) -> Tally {
    run_trials(cfg, 1, |trial, n, rng| {
        let g: ToeplitzGen<HI> = sample::toeplitz(rng, n, cfg.bound, (), false);
        if trial % 2 == 0 || n < 2 {
            let m = g.dense();
            let found = is_toeplitz(&m, ());
            let ok = found.as_ref() == Some(&g) && diagonal_scan(&m);
            Outcome::new(n, ok)
                .tag("positive")
                .detail(|| json!({ "generators": hamilton_toeplitz_to_json(&g) }))
        } else {
            let (m, at) = sample::perturb_interior(&g.dense(), rng, cfg.bound);
            let ok = is_toeplitz(&m, ()).is_none() && !diagonal_scan(&m);
            Outcome::new(n, ok)
                .tag("negative")
                .detail(|| json!({ "M": hjson(&m), "perturbed": at }))
        }
    })
}

fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let num = sample::component(rng, bound.max(1));
    let den = rng.gen_range(1..=4i64);
    Rational::new(num.into(), den.into())
}

fn lift(m: &Mat<HI>) -> Mat<HR> {
    m.map(|q| Hamilton::from_components(q.components().map(|c| Rational::from_integer(c.0.into()))))
}

fn chi1_hom(cfg: &RunConfig) -> Tally {
    run_trials(cfg, 1, |_, n, rng| {
        let m = lift(&sample::matrix::<HI>(rng, n, n, cfg.bound));
        let k = lift(&sample::matrix::<HI>(rng, n, n, cfg.bound));
        let c = random_rational(rng, cfg.bound);
        let props = chi1_props_check(&m, &k, &c).expect("same shape");
        let injective = (m == k) == (chi1(&m) == chi1(&k));
        let inverse = chi1_inverse(&chi1(&m)).as_ref() == Some(&m);
        let ok = props.all() && injective && inverse;
        Outcome::new(n, ok).detail(|| {
            json!({ "M": hjson(&m), "N": hjson(&k), "c": c.to_string(),
                    "props": format!("{props:?}"), "injective": injective, "inverse": inverse })
        })
    })
}

fn chi1_toeplitz(cfg: &RunConfig) -> Tally {
    run_trials(cfg, 1, |trial, n, rng| {
        let g: ToeplitzGen<HI> = sample::toeplitz(rng, n, cfg.bound, (), false);
        let gamma = chi1(&shift::<HI>(n));
        let positive = trial % 2 == 0 || n < 2;
        let m = if positive {
            g.dense()
        } else {
            sample::perturb_interior(&g.dense(), rng, cfg.bound).0
        };
        let image = chi1(&m);
        let verdict = is_toeplitz_wrt(&image, &gamma, ()).expect("shapes agree");
        let truth = is_toeplitz(&m, ()).is_some();
        let ok = verdict == truth && truth == positive;
        let mut out = Outcome::new(n, ok)
            .tag(if positive { "positive" } else { "negative" })
            .detail(|| json!({ "M": hjson(&m), "structure_verdict": verdict }));
        if positive {
            let plain = is_toeplitz(&image, ()).is_some();
            out = out.tag(if plain {
                "plain_2n_toeplitz_holds"
            } else {
                "plain_2n_toeplitz_fails"
            });
        }
        out
    })
}

fn product_lemma(cfg: &RunConfig) -> Tally {
    run_trials(cfg, 1, |_, n, rng| {
        let t: ToeplitzGen<HI> = sample::toeplitz(rng, n, cfg.bound, (), true);
        let u: ToeplitzGen<HI> = sample::toeplitz(rng, n, cfg.bound, (), true);
        let dense = naive_product(&t.dense(), &u.dense());
        let lhs = product_displacement(&t, &u).expect("real diagonals");
        let rhs = displacement(&dense).expect("square");
        let mult = displacement_multiply(&t, &u).expect("real diagonals");
        let ok = lhs == rhs && mult == dense;

        // Outside the hypothesis: same generators, non-real diagonals.
        let tn = t.with_p0(sample::quat(rng, cfg.bound.max(1)));
        let un = u.with_p0(sample::quat(rng, cfg.bound.max(1)));
        let mut ops = 0;
        let formula = product_generators_unchecked(&tn, &un, &mut ops).expect("same order").assemble();
        let actual = displacement(&naive_product(&tn.dense(), &un.dense())).expect("square");
        let tag = match (tn.p0().is_real() && un.p0().is_real(), formula == actual) {
            (true, _) => "non_real_sample_was_real",
            (false, true) => "non_real_diagonal_formula_agrees",
            (false, false) => "non_real_diagonal_formula_differs",
        };
        Outcome::new(n, ok).tag(tag).detail(|| {
            json!({ "T": hamilton_toeplitz_to_json(&t), "U": hamilton_toeplitz_to_json(&u),
                    "formula": hjson(&lhs), "dense": hjson(&rhs), "multiply_ok": mult == dense })
        })
    })
}

fn negate(g: &ToeplitzGen<HI>) -> ToeplitzGen<HI> {
    let neg = |v: &[HI]| v.iter().map(|x| -x.clone()).collect::<Vec<_>>();
    ToeplitzGen::new(-g.p0().clone(), neg(g.col()), neg(g.psi()), ()).expect("same order")
}

/// Quad family used by both TU−VW campaigns. Even trials are constructed
/// so that `TU − VW` is Toeplitz (equal pairs, negated pairs, shifted real
/// diagonals in turn); odd trials draw `V`, `W` independently.
fn quad(trial: u64, n: usize, bound: i64, rng: &mut ChaCha8Rng) -> (QuadInstance<Int>, &'static str) {
    let t: ToeplitzGen<HI> = sample::toeplitz(rng, n, bound, (), true);
    let u: ToeplitzGen<HI> = sample::toeplitz(rng, n, bound, (), true);
    let (v, w, kind) = if trial % 2 == 1 {
        // Narrow components make accidental Toeplitz differences likely.
        let b = if trial % 4 == 1 { 1 } else { bound };
        (
            sample::toeplitz(rng, n, b, (), true),
            sample::toeplitz(rng, n, b, (), true),
            "random",
        )
    } else {
        match (trial / 2) % 3 {
            0 => (t.clone(), u.clone(), "equal"),
            1 => (negate(&t), negate(&u), "negated"),
            _ => (
                t.with_p0(sample::real_quat(rng, bound)),
                u.with_p0(sample::real_quat(rng, bound)),
                "shifted_diagonals",
            ),
        }
    };
    (QuadInstance::new(t, u, v, w).expect("valid quad"), kind)
}

fn quad_json(q: &QuadInstance<Int>) -> Value {
    json!({
        "T": hamilton_toeplitz_to_json(&q.t), "U": hamilton_toeplitz_to_json(&q.u),
        "V": hamilton_toeplitz_to_json(&q.v), "W": hamilton_toeplitz_to_json(&q.w),
    })
}

fn tuvw(cfg: &RunConfig, zero: bool) -> Tally {
    run_trials(cfg, 1, |trial, n, rng| {
        let (q, kind) = quad(trial, n, cfg.bound, rng);
        let diff = q.dense_difference();
        let dense_toeplitz = diagonal_scan(&diff);
        let verdict = tu_minus_vw_is_toeplitz(&q);
        let mut ok = verdict == dense_toeplitz;
        let mut out_tags = vec![format!(
            "{kind}_{}",
            if dense_toeplitz { "toeplitz" } else { "not_toeplitz" }
        )];
        if zero {
            match tu_equals_vw(&q) {
                Ok(eq) => {
                    ok &= dense_toeplitz && eq == diff.is_zero();
                    out_tags.push(format!("hypothesis_met_{}", if eq { "equal" } else { "unequal" }));
                }
                Err(Error::HypothesisViolated(_)) => {
                    ok &= !dense_toeplitz;
                    out_tags.push("hypothesis_violated".into());
                }
                Err(_) => ok = false,
            }
        }
        let mut out = Outcome::new(n, ok).detail(|| {
            json!({ "quad": quad_json(&q), "generator_verdict": verdict, "dense_verdict": dense_toeplitz })
        });
        for t in out_tags {
            out = out.tag(t);
        }
        out
    })
}

fn hr_gen(p0: HR, col: Vec<HR>, psi: Vec<HR>) -> ToeplitzGen<HR> {
    ToeplitzGen::new(p0, col, psi, ()).expect("equal lengths")
}

fn rvec(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<HR> {
    let mut v: Vec<HR> = sample::vector::<HI>(rng, n, bound)
        .iter()
        .map(|q| Hamilton::from_components(q.components().map(|c| Rational::from_integer(c.0.into()))))
        .collect();
    v[0] = HR::zero();
    v
}

/// Vector with zeros below index `from` and random nonzero entries at and
/// after it (index 0 always zero).
fn valued(rng: &mut ChaCha8Rng, n: usize, from: usize, bound: i64) -> Vec<HR> {
    (0..n)
        .map(|k| {
            if k == 0 || k < from {
                HR::zero()
            } else {
                let q: HI = sample::nonzero_quat(rng, bound);
                Hamilton::from_components(q.components().map(|c| Rational::from_integer(c.0.into())))
            }
        })
        .collect()
}

fn zero_product(cfg: &RunConfig) -> Tally {
    run_trials(cfg, 2, |trial, n, rng| {
        let z = || vec![HR::zero(); n];
        let b = cfg.bound.max(1);
        // At n = 2 both p and ψ̃ live in one slot, so they are never independent.
        let family = match trial % 5 {
            2 if n < 3 => 3,
            f => f,
        };
        let (t, u, kind) = match family {
            0 => {
                let (p, q) = if rng.gen_bool(0.5) {
                    (valued(rng, n, 1, b), valued(rng, n, n - 1, b))
                } else {
                    (valued(rng, n, n - 1, b), valued(rng, n, 1, b))
                };
                (hr_gen(HR::zero(), p, z()), hr_gen(HR::zero(), q, z()), "psi_zero_pattern")
            }
            1 => {
                let (s, f) = if rng.gen_bool(0.5) {
                    (valued(rng, n, 1, b), valued(rng, n, n - 1, b))
                } else {
                    (valued(rng, n, n - 1, b), valued(rng, n, 1, b))
                };
                (hr_gen(HR::zero(), z(), s), hr_gen(HR::zero(), z(), f), "p_zero_pattern")
            }
            2 => loop {
                let t = hr_gen(real_r(rng, b), rvec(rng, n, b), rvec(rng, n, b));
                let (pt, _) = t.tilde_vectors();
                let dependent = crate::product::right_multiple(t.col(), &pt).is_some();
                let trivial = t.col().iter().all(Zero::is_zero) || t.psi().iter().all(Zero::is_zero);
                if dependent || trivial {
                    continue;
                }
                let u = hr_gen(real_r(rng, b), rvec(rng, n, b), rvec(rng, n, b));
                if u.dense().is_zero() {
                    continue;
                }
                break (t, u, "independent");
            },
            3 => loop {
                // A third of the draws are real-valued with |c| ≤ 2 and a
                // matched second factor; there `Tq + q₀p + p₀q₀e₀ = 0` is common.
                let real = rng.gen_bool(1.0 / 3.0);
                let (bb, draw): (i64, fn(&mut ChaCha8Rng, usize, i64) -> Vec<HR>) =
                    if real { (2, real_vec) } else { (b, rvec) };
                let psi = draw(rng, n, bb);
                if psi.iter().all(Zero::is_zero) {
                    continue;
                }
                let lambda: HR = if real {
                    lift_q(&HI::from_real(Int(*[-2, -1, 1, 2].get(rng.gen_range(0..4)).unwrap())))
                } else {
                    lift_q(&sample::nonzero_quat::<HI>(rng, b))
                };
                let t0 = hr_gen(real_r(rng, bb), z(), psi);
                let (pt, _) = t0.tilde_vectors();
                let p: Vec<HR> = pt.iter().map(|x| x.clone() * lambda.clone()).collect();
                let t = hr_gen(t0.p0().clone(), p, t0.psi().to_vec());
                let phi = draw(rng, n, bb);
                let u0 = hr_gen(real_r(rng, bb), z(), phi);
                let q = if real || rng.gen_bool(0.5) {
                    // Second factor matched to the same λ: q = λ·φ̃.
                    let (ft, _) = u0.tilde_vectors();
                    ft.iter().map(|x| lambda.clone() * x.clone()).collect()
                } else {
                    rvec(rng, n, b)
                };
                let u = hr_gen(u0.p0().clone(), q, u0.psi().to_vec());
                break (t, u, "dependent");
            },
            _ => {
                let (vp, vq) = (rng.gen_range(1..n), rng.gen_range(1..n));
                (
                    hr_gen(HR::zero(), valued(rng, n, vp, b), z()),
                    hr_gen(HR::zero(), valued(rng, n, vq, b), z()),
                    "nilpotent_lower",
                )
            }
        };
        let rep = zero_product_classify(&t, &u).expect("real diagonals");
        let mut tags = vec![kind.to_string()];
        let ok = match kind {
            "psi_zero_pattern" => rep.case == ZeroCase::PsiZero && rep.dense_zero && rep.conclusion_holds(),
            "p_zero_pattern" => rep.case == ZeroCase::PZero && rep.dense_zero && rep.conclusion_holds(),
            "independent" => rep.case == ZeroCase::Independent && !rep.dense_zero && rep.conclusion_holds(),
            "dependent" => {
                let label = matches!(rep.case, ZeroCase::Dependent { .. });
                tags.push(format!(
                    "dependent_stated_{}_tu_zero_{}",
                    rep.stated_condition == Some(true),
                    rep.dense_zero
                ));
                label && rep.conclusion_holds()
            }
            _ => {
                // Lower nilpotent pairs: the exact rule is the arbiter; the
                // last-entry pattern equivalence is recorded separately.
                if rep.equivalence_holds == Some(false) {
                    tags.push(format!("pattern_equivalence_fails_n{n}"));
                }
                rep.case == ZeroCase::PsiZero && rep.valuation_rule == Some(rep.dense_zero)
            }
        };
        let mut out = Outcome::new(n, ok).detail(|| {
            json!({ "T": hamilton_toeplitz_to_json(&t), "U": hamilton_toeplitz_to_json(&u), "report": rep })
        });
        for t in tags {
            out = out.tag(t);
        }
        out
    })
}

fn real_vec(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<HR> {
    (0..n)
        .map(|k| if k == 0 { HR::zero() } else { real_r(rng, bound) })
        .collect()
}

fn lift_q(q: &HI) -> HR {
    Hamilton::from_components(q.components().map(|c| Rational::from_integer(c.0.into())))
}

fn real_r(rng: &mut ChaCha8Rng, bound: i64) -> HR {
    lift_q(&sample::real_quat::<HI>(rng, bound))
}

fn normal_exhaustive(cfg: &RunConfig) -> Tally {
    let mut tally = Tally {
        attempted: 0,
        passed: 0,
        failures: Vec::new(),
        truncated: false,
        observations: BTreeMap::new(),
    };
    for &kappa in &cfg.kappas {
        let census = normal_census::<Int>(kappa, FROZEN_CONJ.resolve(kappa));
        tally.attempted += census.total;
        tally.passed += census.total - census.mismatches;
        if census.mismatches > 0 {
            tally.failures.push(Failure {
                trial: 0,
                n: 2,
                detail: json!({ "kappa": kappa, "first_mismatch": census.first_mismatch }),
            });
        }
        tally
            .observations
            .insert(format!("census_kappa{kappa}"), json!(census));
    }
    tally
}

fn normal_sampled(cfg: &RunConfig) -> Tally {
    run_trials(cfg, 2, |trial, n, rng| {
        let kappa = cfg.kappas[(trial as usize) % cfg.kappas.len()];
        let conj = FROZEN_CONJ.resolve(kappa);
        let (g, kind): (ToeplitzGen<SI>, &str) = match trial % 3 {
            0 => {
                let seed = rng.gen();
                let g = crate::normality::generate_normal::<Int>(n, kappa, Strategy::KappaCirculant, seed)
                    .expect("circulant generation is direct");
                (g, "kappa_circulant")
            }
            1 => (sample::toeplitz(rng, n, 1, conj, false), "random_unit"),
            _ => (sample::toeplitz(rng, n, cfg.bound, conj, false), "random_bound"),
        };
        let v = classify_normal(&g, kappa);
        let dense = g.dense();
        let general = general_normal_equations(&dense, kappa).expect("square");
        let naive_zero = kappa_commutator_naive(&dense, kappa).is_zero();
        let shifted = classify_normal(&g.with_p0(sample::quat(rng, cfg.bound.max(1))), kappa);
        let p0_free = shifted.condition_holds == v.condition_holds && shifted.commutator_zero == v.commutator_zero;
        let mut ok = !v.mismatch && general == v.commutator_zero && naive_zero == v.commutator_zero && p0_free;
        if kind == "kappa_circulant" {
            ok &= v.condition_holds && v.commutator_zero;
        }
        Outcome::new(n, ok)
            .tag(format!("{kind}_{}", if v.commutator_zero { "normal" } else { "not_normal" }))
            .tag(format!("n{}", if n % 2 == 0 { "_even" } else { "_odd" }))
            .detail(|| {
                json!({ "generators": segre_toeplitz_to_json(&g), "verdict": v,
                        "general_equations": general, "p0_independent": p0_free })
            })
    })
}

fn scalar_props(cfg: &RunConfig) -> Tally {
    run_trials(cfg, 1, |_, _, rng| {
        let b = cfg.bound;
        let p = lift_q(&sample::quat::<HI>(rng, b));
        let q = lift_q(&sample::quat::<HI>(rng, b));
        let mut failed: Vec<&str> = Vec::new();
        let mut check = |name: &'static str, cond: bool| {
            if !cond {
                failed.push(name);
            }
        };

        let pq = &p * &q;
        check("h_table_product", pq == hamilton_by_table(&p, &q));
        check("h_norm_multiplicative", pq.norm_sq() == p.norm_sq() * q.norm_sq());
        check("h_conj_anti_automorphism", pq.conj() == q.conj() * p.conj());
        if !p.is_zero() {
            let inv = p.inv().expect("nonzero");
            check("h_inverse", &p * &inv == HR::one() && &inv * &p == HR::one());
        }
        let two_re = HR::from_real(p.re() + p.re());
        check(
            "h_quadratic",
            (&p * &p - two_re * p.clone() + HR::from_real(p.norm_sq())).is_zero(),
        );
        let bound_sq = p.norm_sq() * q.norm_sq();
        check(
            "h_cauchy_schwarz",
            pq.re() * pq.re() <= bound_sq && pq.im().norm_sq() <= bound_sq,
        );
        let alpha = HR::new(p.w.clone(), p.x.clone(), Rational::zero(), Rational::zero());
        check("h_j_conjugation", HR::j() * alpha.clone() * HR::j().conj() == alpha.conj());
        let mat2 = |m: [[num_complex::Complex<Rational>; 2]; 2]| {
            Mat::from_rows(m.into_iter().map(|r| r.to_vec()).collect()).expect("2x2")
        };
        check(
            "h_chi2_multiplicative",
            mat2(pq.chi2()) == mat2(p.chi2()).mul(&mat2(q.chi2())).expect("2x2"),
        );
        check(
            "h_chi2_additive",
            mat2((p.clone() + q.clone()).chi2()) == mat2(p.chi2()).add(&mat2(q.chi2())).expect("2x2"),
        );

        let sp = Segre::from_components(p.components().map(Clone::clone));
        let sq = Segre::from_components(q.components().map(Clone::clone));
        let spq = &sp * &sq;
        check("s_table_product", spq == segre_by_table(&sp, &sq));
        check("s_commutative", spq == &sq * &sp);
        check("s_norm_multiplicative", spq.norm4() == sp.norm4() * sq.norm4());
        let form = &sp * &sp.conj_product();
        check(
            "s_norm_form_real_nonnegative",
            form.is_real() && form.w == sp.norm4() && form.w >= Rational::zero(),
        );
        for k in Kappa::ALL {
            check("s_conj_homomorphism", spq.conj(k) == sp.conj(k) * sq.conj(k));
            check("s_conj_involution", sp.conj(k).conj(k) == sp);
            for r in Kappa::ALL {
                if let Some(third) = k.complement(r) {
                    check("s_conj_composition", sp.conj(k).conj(r) == sp.conj(third));
                }
            }
        }
        let rep = |s: &Segre<Rational>| {
            Mat::from_rows(s.real_rep().into_iter().map(|r| r.to_vec()).collect::<Vec<_>>())
                .expect("4x4")
        };
        check(
            "s_real_rep_multiplicative",
            rep(&spq) == rep(&sp).mul(&rep(&sq)).expect("4x4"),
        );
        let col: Vec<Rational> = sq.components().map(Clone::clone).to_vec();
        let image = rep(&sp).mul_vec(&col).expect("4");
        check(
            "s_real_rep_action",
            image == spq.components().map(Clone::clone).to_vec(),
        );
        check("s_real_rep_injective", (sp == sq) == (rep(&sp) == rep(&sq)));
        if sp.norm4() != Rational::zero() {
            let inv = sp.inv().expect("invertible");
            check("s_inverse", &sp * &inv == Segre::one());
        } else {
            check("s_zero_divisor_flag", sp.is_zero() != sp.is_zero_divisor());
        }

        let ok = failed.is_empty();
        Outcome::new(1, ok).detail(|| {
            json!({ "p": quat_to_json(&p), "q": quat_to_json(&q), "failed": failed })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(trials: u64) -> RunConfig {
        RunConfig {
            seed: 42,
            trials,
            n_min: 1,
            n_max: 5,
            ..RunConfig::default()
        }
    }

    #[test]
    fn ids_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.id().parse::<Theorem>().unwrap(), t);
        }
        assert!(matches!("nope".parse::<Theorem>(), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn vacuous_run() {
        let r = run(Theorem::ProductLemma, &cfg(0)).unwrap();
        assert_eq!((r.body.attempted, r.body.passed), (0, 0));
        assert!(r.body.failures.is_empty());
    }

    #[test]
    fn every_campaign_passes_small() {
        for t in Theorem::ALL {
            let r = run(t, &cfg(40)).unwrap();
            assert!(r.all_passed(), "{t}: {:#?}", r.body.failures);
        }
    }

    #[test]
    fn bodies_are_deterministic() {
        let a = run(Theorem::Characterization, &cfg(30)).unwrap();
        let b = run(Theorem::Characterization, &cfg(30)).unwrap();
        assert_eq!(serde_json::to_string(&a.body).unwrap(), serde_json::to_string(&b.body).unwrap());
    }

    #[test]
    fn config_errors() {
        let mut c = cfg(1);
        c.n_min = 0;
        assert!(run(Theorem::Reconstruction, &c).is_err());
        let mut c = cfg(1);
        c.exhaustive = true;
        assert!(run(Theorem::Reconstruction, &c).is_err());
        let mut c = cfg(1);
        c.n_max = 1;
        assert!(run(Theorem::ZeroProduct, &c).is_err());
    }
}
