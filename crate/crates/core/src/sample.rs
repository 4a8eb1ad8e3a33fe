//! Seeded random instances with small integer components.
//!
//! Every sampler draws from a [`ChaCha8Rng`]; campaigns give each trial its
//! own stream via [`trial_rng`] so results do not depend on scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{Mat, Vect};
use crate::scalar::{real_from_i64, Quaternion};
use crate::toeplitz::ToeplitzGen;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn component(rng: &mut impl Rng, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

pub fn quat<Q: Quaternion>(rng: &mut impl Rng, bound: i64) -> Q {
    Q::from_components([0; 4].map(|_| real_from_i64(component(rng, bound))))
}

pub fn nonzero_quat<Q: Quaternion>(rng: &mut impl Rng, bound: i64) -> Q {
    loop {
        let q: Q = quat(rng, bound.max(1));
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn real_quat<Q: Quaternion>(rng: &mut impl Rng, bound: i64) -> Q {
    Q::from_real(real_from_i64(component(rng, bound)))
}

pub fn vector<Q: Quaternion>(rng: &mut impl Rng, n: usize, bound: i64) -> Vect<Q> {
    (0..n).map(|_| quat(rng, bound)).collect()
}

pub fn matrix<Q: Quaternion>(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Mat<Q> {
    Mat::from_fn(rows, cols, |_, _| quat(rng, bound))
}

/// Random generator; `real_diag` restricts `p₀` to a real value.
pub fn toeplitz<Q: Quaternion>(
    rng: &mut impl Rng,
    n: usize,
    bound: i64,
    conj: Q::Conj,
    real_diag: bool,
) -> ToeplitzGen<Q> {
    let p0 = if real_diag {
        real_quat(rng, bound)
    } else {
        quat(rng, bound)
    };
    let col = vector(rng, n, bound);
    let psi = vector(rng, n, bound);
    ToeplitzGen::new(p0, col, psi, conj).expect("n >= 1")
}

/// Adds a nonzero scalar to one entry off row 0 and column 0, which breaks
/// the constant diagonal through that entry. Needs `n ≥ 2`.
pub fn perturb_interior<Q: Quaternion>(m: &Mat<Q>, rng: &mut impl Rng, bound: i64) -> (Mat<Q>, (usize, usize)) {
    let n = m.rows();
    assert!(n >= 2 && m.is_square(), "perturbation needs a square matrix of order >= 2");
    let (i, j) = (rng.gen_range(1..n), rng.gen_range(1..n));
    let mut out = m.clone();
    out[(i, j)] = out[(i, j)].clone() + nonzero_quat(rng, bound);
    (out, (i, j))
}

/// Uniform order in `[lo, hi]`.
pub fn order(rng: &mut impl Rng, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo..=hi)
}
