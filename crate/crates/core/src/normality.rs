//! κ-normality of Toeplitz matrices over the Segre quaternions.
//!
//! `T` is κ-normal when `T^†κ·T = T·T^†κ`. For `T = T(p, ψ) + p₀I` the
//! generator condition is, for all `1 ≤ s, k ≤ n−1`,
//!
//! ```text
//! p_s·p_k⁽ᵏ⁾ + p_{n−s}⁽ᵏ⁾·p_{n−k} = ψ_s·ψ_k⁽ᵏ⁾ + ψ_{n−s}⁽ᵏ⁾·ψ_{n−k}
//! ```
//!
//! The condition only holds as a characterization when the first row stores
//! `ψ_k⁽ᵏ⁾`, i.e. the generator uses `SegreConj::Kappa(κ)` for the same κ.
//! [`resolve_conj_mode`] reproduces that finding from scratch.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::scalar::{real_from_i64, Kappa, Quaternion, Real};
use crate::segre::{Segre, SegreConj};
use crate::toeplitz::ToeplitzGen;

type SGen<R> = ToeplitzGen<Segre<R>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityVerdict {
    pub kappa: Kappa,
    #[serde(rename = "condition")]
    pub condition_holds: bool,
    pub commutator_zero: bool,
    /// First `(s, k)` where the generator condition fails.
    #[serde(rename = "violation")]
    pub first_violation: Option<(usize, usize)>,
    /// First matrix position where the commutator is nonzero.
    pub commutator_witness: Option<(usize, usize)>,
    /// The two sides disagree: a counterexample to the characterization.
    pub mismatch: bool,
}

/// `T^†κ·T − T·T^†κ` on the dense form.
pub fn kappa_commutator<R: Real>(g: &SGen<R>, kappa: Kappa) -> Mat<Segre<R>> {
    dense_commutator(&g.dense(), kappa).expect("Toeplitz matrices are square")
}

pub fn dense_commutator<R: Real>(m: &Mat<Segre<R>>, kappa: Kappa) -> Result<Mat<Segre<R>>> {
    m.order()?;
    let adj = m.kappa_adjoint(kappa);
    adj.mul(m)?.sub(&m.mul(&adj)?)
}

/// Evaluates the generator condition; returns the first failing `(s, k)`.
pub fn normal_condition<R: Real>(g: &SGen<R>, kappa: Kappa) -> Option<(usize, usize)> {
    let n = g.n();
    let p = g.col();
    let psi = g.psi();
    let pc: Vec<Segre<R>> = p.iter().map(|x| x.conj(kappa)).collect();
    let psic: Vec<Segre<R>> = psi.iter().map(|x| x.conj(kappa)).collect();
    for s in 1..n {
        for k in 1..n {
            let lhs = p[s].clone() * pc[k].clone() + pc[n - s].clone() * p[n - k].clone();
            let rhs = psi[s].clone() * psic[k].clone() + psic[n - s].clone() * psi[n - k].clone();
            if lhs != rhs {
                return Some((s, k));
            }
        }
    }
    None
}

pub fn classify_normal<R: Real>(g: &SGen<R>, kappa: Kappa) -> NormalityVerdict {
    let first_violation = normal_condition(g, kappa);
    let comm = kappa_commutator(g, kappa);
    let n = g.n();
    let commutator_witness = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| !comm[(i, j)].is_zero());
    let condition_holds = first_violation.is_none();
    let commutator_zero = commutator_witness.is_none();
    NormalityVerdict {
        kappa,
        condition_holds,
        commutator_zero,
        first_violation,
        commutator_witness,
        mismatch: condition_holds != commutator_zero,
    }
}

/// The two equation families for a general square matrix `M = (m_{ij})`:
///
/// * `Σ_{k≠ℓ} [m_{kℓ}⁽ᵏ⁾·m_{kℓ} − m_{ℓk}·m_{ℓk}⁽ᵏ⁾] = 0` for every `ℓ`,
/// * `Σ_k [m_{ki}⁽ᵏ⁾·m_{kj} − m_{ik}·m_{jk}⁽ᵏ⁾] = 0` for every `i < j`.
pub fn general_normal_equations<R: Real>(m: &Mat<Segre<R>>, kappa: Kappa) -> Result<bool> {
    let n = m.order()?;
    let c = |i: usize, j: usize| m[(i, j)].conj(kappa);
    for l in 0..n {
        let mut acc = Segre::zero();
        for k in (0..n).filter(|&k| k != l) {
            acc = acc + c(k, l) * m[(k, l)].clone() - m[(l, k)].clone() * c(l, k);
        }
        if !acc.is_zero() {
            return Ok(false);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut acc = Segre::zero();
            for k in 0..n {
                acc = acc + c(k, i) * m[(k, j)].clone() - m[(i, k)].clone() * c(j, k);
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    RealSymmetric,
    KappaCirculant,
    ExhaustiveGrid,
    RandomSearch,
}

/// Sampling budget for [`Strategy::RandomSearch`] and
/// [`Strategy::ExhaustiveGrid`].
pub const SEARCH_BUDGET: usize = 200_000;

fn seg<R: Real>(c: [i64; 4]) -> Segre<R> {
    Segre::from_components(c.map(real_from_i64))
}

fn random_seg<R: Real>(rng: &mut ChaCha8Rng, bound: i64) -> Segre<R> {
    seg([0; 4].map(|_| rng.gen_range(-bound..=bound)))
}

/// A κ-normal Toeplitz generator built by `strategy`.
///
/// Every result is confirmed by [`kappa_commutator`] before it is returned.
pub fn generate_normal<R: Real>(
    n: usize,
    kappa: Kappa,
    strategy: Strategy,
    seed: u64,
) -> Result<SGen<R>> {
    if n < 2 {
        return Err(Error::Config(format!("normal generation needs n >= 2, got {n}")));
    }
    let conj = SegreConj::Kappa(kappa);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero = Segre::<R>::zero();
    let candidate = match strategy {
        Strategy::RealSymmetric => {
            let mut p: Vec<Segre<R>> = (0..n)
                .map(|_| seg([rng.gen_range(-5..=5), 0, 0, 0]))
                .collect();
            p[0] = zero;
            let p0 = seg([rng.gen_range(-5..=5), 0, 0, 0]);
            ToeplitzGen::new(p0, p.clone(), p, conj)?
        }
        Strategy::KappaCirculant => {
            let mut p: Vec<Segre<R>> = (0..n).map(|_| random_seg(&mut rng, 5)).collect();
            p[0] = zero.clone();
            let mut psi = vec![zero; n];
            for k in 1..n {
                psi[k] = p[n - k].conj(kappa);
            }
            ToeplitzGen::new(random_seg(&mut rng, 5), p, psi, conj)?
        }
        Strategy::ExhaustiveGrid => grid_search(n, kappa, rng.gen())?,
        Strategy::RandomSearch => {
            let mut found = None;
            for _ in 0..SEARCH_BUDGET {
                let g = random_generator(n, 1, conj, &mut rng);
                let trivial = g.col().iter().chain(g.psi()).all(|x| x.is_zero());
                if !trivial && kappa_commutator(&g, kappa).is_zero() {
                    found = Some(g);
                    break;
                }
            }
            found.ok_or(Error::SearchExhausted(SEARCH_BUDGET))?
        }
    };
    if !kappa_commutator(&candidate, kappa).is_zero() {
        return Err(Error::SearchExhausted(0));
    }
    Ok(candidate)
}

fn random_generator<R: Real>(n: usize, bound: i64, conj: SegreConj, rng: &mut ChaCha8Rng) -> SGen<R> {
    let col = (0..n).map(|_| random_seg(rng, bound)).collect();
    let psi = (0..n).map(|_| random_seg(rng, bound)).collect();
    ToeplitzGen::new(random_seg(rng, bound), col, psi, conj).expect("n >= 1")
}

/// Decodes grid index `idx` into a generator whose `p₁..p_{n−1}`,
/// `ψ₁..ψ_{n−1}` components are in `{−1, 0, 1}` (`p₀ = 0`).
fn grid_generator<R: Real>(n: usize, mut idx: u64, conj: SegreConj) -> SGen<R> {
    let mut digit = || {
        let d = (idx % 3) as i64 - 1;
        idx /= 3;
        d
    };
    let mut col = vec![Segre::zero(); n];
    let mut psi = vec![Segre::zero(); n];
    for v in col.iter_mut().skip(1).chain(psi.iter_mut().skip(1)) {
        *v = seg([digit(), digit(), digit(), digit()]);
    }
    ToeplitzGen::new(Segre::zero(), col, psi, conj).expect("n >= 1")
}

fn grid_size(n: usize) -> Option<u64> {
    3u64.checked_pow(8 * (n as u32).saturating_sub(1))
}

/// Scans the `{−1, 0, 1}` grid from a seeded offset for a nontrivial normal
/// instance.
fn grid_search<R: Real>(n: usize, kappa: Kappa, start: u64) -> Result<SGen<R>> {
    let size = grid_size(n).ok_or_else(|| Error::Config(format!("grid for n = {n} is too large")))?;
    let conj = SegreConj::Kappa(kappa);
    for step in 0..(SEARCH_BUDGET as u64).min(size) {
        let g = grid_generator::<R>(n, (start % size + step) % size, conj);
        let trivial = g.col().iter().chain(g.psi()).all(|x| x.is_zero());
        if !trivial && kappa_commutator(&g, kappa).is_zero() {
            return Ok(g);
        }
    }
    Err(Error::SearchExhausted(SEARCH_BUDGET))
}

/// Counts over an enumerated or sampled family.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub kappa: u8,
    pub n: usize,
    pub total: u64,
    pub normal: u64,
    pub condition_true: u64,
    pub mismatches: u64,
    /// Generator components of the first mismatch, when any.
    pub first_mismatch: Option<String>,
}

fn census_over<R: Real, F>(n: usize, kappa: Kappa, total: u64, make: F) -> Census
where
    F: Fn(u64) -> SGen<R> + Sync,
{
    const CHUNK: u64 = 4096;
    let chunks: Vec<Census> = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut out = Census::default();
            for idx in c * CHUNK..((c + 1) * CHUNK).min(total) {
                let g = make(idx);
                let v = classify_normal(&g, kappa);
                out.total += 1;
                out.normal += u64::from(v.commutator_zero);
                out.condition_true += u64::from(v.condition_holds);
                if v.mismatch {
                    out.mismatches += 1;
                    if out.first_mismatch.is_none() {
                        out.first_mismatch = Some(describe(&g));
                    }
                }
            }
            out
        })
        .collect();
    // Ordered merge keeps `first_mismatch` independent of scheduling.
    chunks.into_iter().fold(
        Census {
            kappa: kappa.index(),
            n,
            ..Census::default()
        },
        |mut acc, c| {
            acc.total += c.total;
            acc.normal += c.normal;
            acc.condition_true += c.condition_true;
            acc.mismatches += c.mismatches;
            if acc.first_mismatch.is_none() {
                acc.first_mismatch = c.first_mismatch;
            }
            acc
        },
    )
}

fn describe<R: Real>(g: &SGen<R>) -> String {
    let f = |v: &[Segre<R>]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    format!("p0 = {}, p = [{}], psi = [{}], conj = {:?}", g.p0(), f(g.col()), f(g.psi()), g.conj())
}

/// Exhaustive `n = 2` census: `p₀, p₁, ψ₁` range over `{−1, 0, 1}⁴` each.
pub fn normal_census<R: Real>(kappa: Kappa, conj: SegreConj) -> Census {
    census_over::<R, _>(2, kappa, 3u64.pow(12), move |idx| {
        let mut idx = idx;
        let mut q = || {
            let c = [0; 4].map(|_| {
                let d = (idx % 3) as i64 - 1;
                idx /= 3;
                d
            });
            seg::<R>(c)
        };
        let (p0, p1, s1) = (q(), q(), q());
        ToeplitzGen::new(p0, vec![Segre::zero(), p1], vec![Segre::zero(), s1], conj).expect("n = 2")
    })
}

/// Seeded sampling census: `samples` generators of order `n`, components in
/// `[−bound, bound]`, with each sample drawn from its own stream.
pub fn sampled_census<R: Real>(
    n: usize,
    kappa: Kappa,
    conj: SegreConj,
    samples: u64,
    bound: i64,
    seed: u64,
) -> Census {
    census_over::<R, _>(n, kappa, samples, move |idx| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(idx);
        random_generator(n, bound, conj, &mut rng)
    })
}

/// How the first row of a Segre Toeplitz matrix is read from `ψ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjCandidate {
    /// First row holds `ψ_k` unchanged.
    Raw,
    /// First row holds `ψ_k⁽ᵏ⁾` for the κ under test.
    Kappa,
    /// First row holds `ψ_k⁽¹⁾` whatever κ is.
    FixedOne,
}

impl ConjCandidate {
    pub const ALL: [ConjCandidate; 3] = [ConjCandidate::Raw, ConjCandidate::Kappa, ConjCandidate::FixedOne];

    pub fn resolve(self, kappa: Kappa) -> SegreConj {
        match self {
            ConjCandidate::Raw => SegreConj::Raw,
            ConjCandidate::Kappa => SegreConj::Kappa(kappa),
            ConjCandidate::FixedOne => SegreConj::Kappa(Kappa::One),
        }
    }
}

/// The convention the library freezes.
pub const FROZEN_CONJ: ConjCandidate = ConjCandidate::Kappa;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjResolution {
    pub candidate: ConjCandidate,
    pub censuses: Vec<Census>,
    pub mismatches: u64,
}

/// Runs the equivalence suite under every candidate convention: the full
/// `n = 2` grid and `samples` seeded `n = 3` instances on `{−1, 0, 1}`, for
/// all three κ. Returns per-candidate results and the passing candidates,
/// raw storage first when several pass.
pub fn resolve_conj_mode<R: Real>(samples: u64, seed: u64) -> (Vec<ConjResolution>, Vec<ConjCandidate>) {
    let results: Vec<ConjResolution> = ConjCandidate::ALL
        .iter()
        .map(|&cand| {
            let mut censuses = Vec::new();
            for kappa in Kappa::ALL {
                let conj = cand.resolve(kappa);
                censuses.push(normal_census::<R>(kappa, conj));
                censuses.push(sampled_census::<R>(3, kappa, conj, samples, 1, seed));
            }
            let mismatches = censuses.iter().map(|c| c.mismatches).sum();
            ConjResolution {
                candidate: cand,
                censuses,
                mismatches,
            }
        })
        .collect();
    let passing = results
        .iter()
        .filter(|r| r.mismatches == 0)
        .map(|r| r.candidate)
        .collect();
    (results, passing)
}
