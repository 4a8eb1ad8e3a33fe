//! Displacement of a product of two Hamilton-quaternion Toeplitz matrices.
//!
//! For `T = T(p, ψ) + p₀I` and `U = T(q, φ) + q₀I` with real `p₀, q₀`,
//!
//! ```text
//! TU − Γ·TU·Γ* = p⊗φ − ψ̃⊗q̃ + X⊗e₀ + e₀⊗Y
//! X = T·q + q₀·p + p₀q₀·e₀          (column 0 of TU)
//! Y = Γ·U*·Γ*·ψ + p̄₀·φ             (conjugated row 0 of TU, index 0 dropped)
//! ```
//!
//! where `ψ̃` comes from `T` and `q̃` from `U` via
//! [`ToeplitzGen::tilde_vectors`]. The first two terms vanish on row 0 and
//! column 0, so they alone decide whether a difference `TU − VW` is Toeplitz.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamilton::Hamilton;
use crate::matrix::{outer, Mat, Vect};
use crate::scalar::{Field, Quaternion, Real};
use crate::toeplitz::{is_toeplitz, ToeplitzGen};

type HGen<R> = ToeplitzGen<Hamilton<R>>;

/// Four Toeplitz generators `T, U, V, W` of one order with real diagonals.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadInstance<R: Real> {
    pub t: HGen<R>,
    pub u: HGen<R>,
    pub v: HGen<R>,
    pub w: HGen<R>,
}

impl<R: Real> QuadInstance<R> {
    pub fn new(t: HGen<R>, u: HGen<R>, v: HGen<R>, w: HGen<R>) -> Result<Self> {
        let n = t.n();
        for (g, name) in [(&u, "U"), (&v, "V"), (&w, "W")] {
            if g.n() != n {
                return Err(Error::DimensionMismatch(format!(
                    "{name} has order {}, T has order {n}",
                    g.n()
                )));
            }
        }
        require_real(&t, "T")?;
        require_real(&u, "U")?;
        require_real(&v, "V")?;
        require_real(&w, "W")?;
        Ok(QuadInstance { t, u, v, w })
    }

    pub fn n(&self) -> usize {
        self.t.n()
    }

    /// `TU − VW` formed densely.
    pub fn dense_difference(&self) -> Mat<Hamilton<R>> {
        let tu = self.t.dense().mul(&self.u.dense()).expect("orders checked");
        let vw = self.v.dense().mul(&self.w.dense()).expect("orders checked");
        tu.sub(&vw).expect("orders checked")
    }
}

fn require_real<R: Real>(g: &HGen<R>, name: &'static str) -> Result<()> {
    if g.p0().is_real() {
        Ok(())
    } else {
        Err(Error::NonRealDiagonal(name))
    }
}

fn same_order<R: Real>(t: &HGen<R>, u: &HGen<R>) -> Result<usize> {
    if t.n() != u.n() {
        return Err(Error::DimensionMismatch(format!(
            "Toeplitz orders {} and {}",
            t.n(),
            u.n()
        )));
    }
    Ok(t.n())
}

/// The four rank-one generator pairs of `D(TU)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductGenerators<R: Real> {
    pub p: Vect<Hamilton<R>>,
    pub phi: Vect<Hamilton<R>>,
    pub psi_tilde: Vect<Hamilton<R>>,
    pub q_tilde: Vect<Hamilton<R>>,
    pub x: Vect<Hamilton<R>>,
    pub y: Vect<Hamilton<R>>,
}

impl<R: Real> ProductGenerators<R> {
    /// `p⊗φ − ψ̃⊗q̃`.
    pub fn interior(&self) -> Mat<Hamilton<R>> {
        outer(&self.p, &self.phi, ())
            .sub(&outer(&self.psi_tilde, &self.q_tilde, ()))
            .expect("equal lengths")
    }

    /// `p⊗φ − ψ̃⊗q̃ + X⊗e₀ + e₀⊗Y`.
    pub fn assemble(&self) -> Mat<Hamilton<R>> {
        let mut d = self.interior();
        let n = self.x.len();
        for i in 0..n {
            d[(i, 0)] = d[(i, 0)].clone() + self.x[i].clone();
        }
        for j in 0..n {
            d[(0, j)] = d[(0, j)].clone() + self.y[j].conj();
        }
        d
    }
}

/// Generator pairs without the real-diagonal check.
///
/// Only meaningful for real `p₀, q₀`; exposed so the harness can measure
/// what happens outside that hypothesis.
pub fn product_generators_unchecked<R: Real>(
    t: &HGen<R>,
    u: &HGen<R>,
    ops: &mut u64,
) -> Result<ProductGenerators<R>> {
    let n = same_order(t, u)?;
    let (p0, q0) = (t.p0(), u.p0());
    let (psi_tilde, _) = t.tilde_vectors();
    let (_, q_tilde) = u.tilde_vectors();

    let mut x = t.mul_vec(u.col(), ops)?;
    for (xi, pi) in x.iter_mut().zip(t.col()) {
        *xi = xi.clone() + q0.clone() * pi.clone();
    }
    x[0] = x[0].clone() + p0.clone() * q0.clone();
    *ops += n as u64 + 1;

    let mut shifted_up: Vect<Hamilton<R>> = t.psi()[1..].to_vec();
    shifted_up.push(Hamilton::zero());
    let inner = u.adjoint().mul_vec(&shifted_up, ops)?;
    let p0c = p0.conj();
    let mut y = Vec::with_capacity(n);
    y.push(Hamilton::zero());
    for j in 1..n {
        y.push(inner[j - 1].clone() + p0c.clone() * u.psi()[j].clone());
    }
    *ops += n as u64;

    Ok(ProductGenerators {
        p: t.col().to_vec(),
        phi: u.psi().to_vec(),
        psi_tilde,
        q_tilde,
        x,
        y,
    })
}

pub fn product_generators<R: Real>(
    t: &HGen<R>,
    u: &HGen<R>,
    ops: &mut u64,
) -> Result<ProductGenerators<R>> {
    require_real(t, "T")?;
    require_real(u, "U")?;
    product_generators_unchecked(t, u, ops)
}

/// Right-hand side of the product identity, assembled densely.
pub fn product_displacement<R: Real>(t: &HGen<R>, u: &HGen<R>) -> Result<Mat<Hamilton<R>>> {
    let mut ops = 0;
    Ok(product_generators(t, u, &mut ops)?.assemble())
}

/// `p⊗φ − ψ̃⊗q̃` for the pair `(T, U)`.
pub fn interior_generator<R: Real>(t: &HGen<R>, u: &HGen<R>) -> Result<Mat<Hamilton<R>>> {
    let mut ops = 0;
    Ok(product_generators(t, u, &mut ops)?.interior())
}

/// `TU − VW` is Toeplitz iff `p⊗φ − ψ̃⊗q̃ = r⊗μ − λ̃⊗s̃`.
pub fn tu_minus_vw_is_toeplitz<R: Real>(q: &QuadInstance<R>) -> bool {
    let lhs = interior_generator(&q.t, &q.u).expect("validated quad");
    let rhs = interior_generator(&q.v, &q.w).expect("validated quad");
    lhs == rhs
}

/// Given that `TU − VW` is Toeplitz, decides `TU = VW` from the two vector
/// equations
///
/// * `T·q + q₀p + p₀q₀e₀ = V·s + s₀r + r₀s₀e₀` (column 0),
/// * `U*·ψ + p̄₀φ + p̄₀q̄₀e₀ = W*·λ + r̄₀μ + r̄₀s̄₀e₀` (conjugated row 0).
pub fn tu_equals_vw<R: Real>(q: &QuadInstance<R>) -> Result<bool> {
    if !tu_minus_vw_is_toeplitz(q) {
        return Err(Error::HypothesisViolated(
            "TU - VW is not Toeplitz".into(),
        ));
    }
    Ok(column_zero(&q.t, &q.u) == column_zero(&q.v, &q.w) && row_zero(&q.t, &q.u) == row_zero(&q.v, &q.w))
}

/// `T·q + q₀p + p₀q₀e₀`.
pub fn column_zero<R: Real>(t: &HGen<R>, u: &HGen<R>) -> Vect<Hamilton<R>> {
    let mut ops = 0;
    product_generators_unchecked(t, u, &mut ops)
        .expect("orders checked by caller")
        .x
}

/// `U*·ψ + p̄₀φ + p̄₀q̄₀e₀`.
pub fn row_zero<R: Real>(t: &HGen<R>, u: &HGen<R>) -> Vect<Hamilton<R>> {
    let mut ops = 0;
    let mut out = u.adjoint().mul_vec(t.psi(), &mut ops).expect("orders checked by caller");
    let p0c = t.p0().conj();
    for (o, f) in out.iter_mut().zip(u.psi()) {
        *o = o.clone() + p0c.clone() * f.clone();
    }
    out[0] = out[0].clone() + p0c * u.p0().conj();
    out
}

/// Dense `TU` rebuilt from the displacement generators.
///
/// Each entry is `S(i, j) = S(i−1, j−1) + D(i, j)` with `D` expanded from the
/// rank-one pairs on the fly, so the work is `O(n²)` scalar products.
pub fn displacement_multiply<R: Real>(t: &HGen<R>, u: &HGen<R>) -> Result<Mat<Hamilton<R>>> {
    let mut ops = 0;
    displacement_multiply_counted(t, u, &mut ops)
}

pub fn displacement_multiply_counted<R: Real>(
    t: &HGen<R>,
    u: &HGen<R>,
    ops: &mut u64,
) -> Result<Mat<Hamilton<R>>> {
    let g = product_generators(t, u, ops)?;
    let n = g.x.len();
    let phic: Vec<Hamilton<R>> = g.phi.iter().map(Hamilton::conj).collect();
    let qtc: Vec<Hamilton<R>> = g.q_tilde.iter().map(Hamilton::conj).collect();
    let mut s = Mat::zeros(n, n);
    for i in 0..n {
        s[(i, 0)] = g.x[i].clone();
    }
    for j in 1..n {
        s[(0, j)] = g.y[j].conj();
    }
    for i in 1..n {
        for j in 1..n {
            let d = g.p[i].clone() * phic[j].clone() - g.psi_tilde[i].clone() * qtc[j].clone();
            s[(i, j)] = s[(i - 1, j - 1)].clone() + d;
        }
    }
    *ops += 2 * ((n.saturating_sub(1)) * (n.saturating_sub(1))) as u64;
    Ok(s)
}

/// Which branch of the zero-product theorem a pair falls into.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "case")]
pub enum ZeroCase {
    /// `ψ = 0`: `T` is lower triangular.
    PsiZero,
    /// `p = 0`, `ψ ≠ 0`: `T` is upper triangular.
    PZero,
    /// `p` and `ψ̃` are linearly independent.
    Independent,
    /// `p = ψ̃·λ` with the recorded `λ` (components as strings).
    Dependent { lambda: [String; 4] },
}

/// Case label plus the case's stated conclusion evaluated against dense `TU`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroProductReport {
    #[serde(flatten)]
    pub case: ZeroCase,
    pub dense_zero: bool,
    pub u_zero: bool,
    /// The case's stated sufficient or necessary condition, when it has one.
    pub stated_condition: Option<bool>,
    /// `TU = 0 ⇒ …` direction of the case.
    pub implication_holds: bool,
    /// `TU = 0 ⟺ stated_condition`, when the case asserts an equivalence
    /// and its side conditions are met.
    pub equivalence_holds: Option<bool>,
    /// Exact criterion for triangular cases: the lowest nonzero generator
    /// indices of `T` and `U` sum to at least `n`.
    pub valuation_rule: Option<bool>,
}

impl ZeroProductReport {
    pub fn conclusion_holds(&self) -> bool {
        self.implication_holds && self.equivalence_holds.unwrap_or(true)
    }
}

/// Lowest index `k ≥ 1` with `v[k] ≠ 0`, or `n` when all vanish.
fn valuation<R: Real>(v: &[Hamilton<R>]) -> usize {
    v.iter()
        .enumerate()
        .skip(1)
        .find(|(_, x)| !x.is_zero())
        .map_or(v.len(), |(k, _)| k)
}

fn only_last_nonzero<R: Real>(v: &[Hamilton<R>]) -> bool {
    let n = v.len();
    n < 2 || v[1..n - 1].iter().all(Zero::is_zero)
}

/// `p = ψ̃·λ` for some `λ`, with `ψ̃ ≠ 0`.
pub fn right_multiple<R: Field>(p: &[Hamilton<R>], base: &[Hamilton<R>]) -> Option<Hamilton<R>> {
    let (k, b) = base.iter().enumerate().find(|(_, b)| !b.is_zero())?;
    let lambda = b.inv().ok()? * p[k].clone();
    p.iter()
        .zip(base)
        .all(|(pi, bi)| *pi == bi.clone() * lambda.clone())
        .then_some(lambda)
}

/// `p = λ·ψ̃` for some `λ`, with `ψ̃ ≠ 0`.
pub fn left_multiple<R: Field>(p: &[Hamilton<R>], base: &[Hamilton<R>]) -> Option<Hamilton<R>> {
    let (k, b) = base.iter().enumerate().find(|(_, b)| !b.is_zero())?;
    let lambda = p[k].clone() * b.inv().ok()?;
    p.iter()
        .zip(base)
        .all(|(pi, bi)| *pi == lambda.clone() * bi.clone())
        .then_some(lambda)
}

pub fn zero_product_classify<R: Field>(t: &HGen<R>, u: &HGen<R>) -> Result<ZeroProductReport> {
    same_order(t, u)?;
    require_real(t, "T")?;
    require_real(u, "U")?;
    let n = t.n();
    let dense_zero = t.dense().mul(&u.dense())?.is_zero();
    let u_zero = u.p0().is_zero()
        && u.col().iter().all(Zero::is_zero)
        && u.psi().iter().all(Zero::is_zero);
    let zero = |v: &[Hamilton<R>]| v.iter().all(Zero::is_zero);
    let diag_zero = t.p0().is_zero() && u.p0().is_zero();

    // `a`, `b` are the generator vectors of `T` and `U` that survive in the
    // triangular sub-case, `cross` the one of `U` that must vanish.
    let triangular = |cross: &[Hamilton<R>], a: &[Hamilton<R>], b: &[Hamilton<R>], case: ZeroCase| {
        let side = diag_zero && zero(cross);
        let in_subcase = side && !u_zero;
        let patterns = only_last_nonzero(b) || only_last_nonzero(a);
        ZeroProductReport {
            case,
            dense_zero,
            u_zero,
            stated_condition: in_subcase.then_some(patterns),
            implication_holds: !dense_zero || u_zero || side,
            equivalence_holds: in_subcase.then_some(patterns == dense_zero),
            valuation_rule: in_subcase.then_some(valuation(a) + valuation(b) >= n),
        }
    };

    if zero(t.psi()) {
        return Ok(triangular(u.psi(), t.col(), u.col(), ZeroCase::PsiZero));
    }
    if zero(t.col()) {
        return Ok(triangular(u.col(), t.psi(), u.psi(), ZeroCase::PZero));
    }
    let (psi_tilde, _) = t.tilde_vectors();
    match right_multiple(t.col(), &psi_tilde) {
        None => Ok(ZeroProductReport {
            case: ZeroCase::Independent,
            dense_zero,
            u_zero,
            stated_condition: None,
            implication_holds: !dense_zero || u_zero,
            equivalence_holds: None,
            valuation_rule: None,
        }),
        Some(lambda) => {
            let (phi_tilde, _) = u.tilde_vectors();
            let q_matches = u
                .col()
                .iter()
                .zip(&phi_tilde)
                .all(|(qi, fi)| *qi == lambda.clone() * fi.clone());
            let q5 = column_zero(t, u).iter().all(Zero::is_zero);
            let stated = q_matches && q5;
            Ok(ZeroProductReport {
                case: ZeroCase::Dependent {
                    lambda: lambda.components().map(|c| c.to_string()),
                },
                dense_zero,
                u_zero,
                stated_condition: Some(stated),
                implication_holds: !dense_zero || stated,
                equivalence_holds: Some(stated == dense_zero),
                valuation_rule: None,
            })
        }
    }
}

/// Dense oracle check: is `dense(T)·dense(U)` Toeplitz, and if so with what
/// generators.
pub fn dense_product_generators<R: Real>(t: &HGen<R>, u: &HGen<R>) -> Result<Option<HGen<R>>> {
    Ok(is_toeplitz(&t.dense().mul(&u.dense())?, ()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::basis;
    use crate::toeplitz::displacement;
    use crate::{HQuat, Rational};
    use num_traits::{One, Zero};

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn h(w: i64, x: i64, y: i64, z: i64) -> HQuat {
        HQuat::new(r(w), r(x), r(y), r(z))
    }

    fn gen(p0: i64, col: Vec<HQuat>, psi: Vec<HQuat>) -> ToeplitzGen<HQuat> {
        ToeplitzGen::new(h(p0, 0, 0, 0), col, psi, ()).unwrap()
    }

    fn pair() -> (ToeplitzGen<HQuat>, ToeplitzGen<HQuat>) {
        let z = HQuat::zero();
        let t = gen(
            2,
            vec![z.clone(), h(1, 2, 0, -1), h(0, 1, 1, 0), h(3, 0, -2, 1)],
            vec![z.clone(), h(0, 0, 1, 1), h(-1, 1, 0, 2), h(1, -1, 1, 0)],
        );
        let u = gen(
            -1,
            vec![z.clone(), h(0, 1, 0, 3), h(2, 0, 0, 1), h(1, 1, -1, -1)],
            vec![z, h(2, -1, 0, 0), h(0, 0, 0, 1), h(-2, 1, 3, 0)],
        );
        (t, u)
    }

    #[test]
    fn identity_pair() {
        let i = ToeplitzGen::scalar(4, HQuat::one(), ());
        let e0 = basis::<HQuat>(4, 0);
        assert_eq!(product_displacement(&i, &i).unwrap(), outer(&e0, &e0, ()));
        assert_eq!(displacement_multiply(&i, &i).unwrap(), Mat::identity(4));
    }

    #[test]
    fn lemma_matches_dense_product() {
        let (t, u) = pair();
        let dense = t.dense().mul(&u.dense()).unwrap();
        assert_eq!(product_displacement(&t, &u).unwrap(), displacement(&dense).unwrap());
        assert_eq!(displacement_multiply(&t, &u).unwrap(), dense);
        let id = ToeplitzGen::scalar(4, HQuat::one(), ());
        assert_eq!(
            product_displacement(&t, &id).unwrap(),
            displacement(&t.dense()).unwrap()
        );
    }

    #[test]
    fn non_real_diagonal_is_rejected() {
        let (t, u) = pair();
        let bad = t.with_p0(HQuat::i());
        assert_eq!(product_displacement(&bad, &u), Err(Error::NonRealDiagonal("T")));
        assert_eq!(product_displacement(&u, &bad), Err(Error::NonRealDiagonal("U")));
    }

    #[test]
    fn quad_criteria() {
        let (t, u) = pair();
        let same = QuadInstance::new(t.clone(), u.clone(), t.clone(), u.clone()).unwrap();
        assert!(tu_minus_vw_is_toeplitz(&same));
        assert!(tu_equals_vw(&same).unwrap());

        let i = ToeplitzGen::scalar(3, HQuat::one(), ());
        let two = ToeplitzGen::scalar(3, h(2, 0, 0, 0), ());
        let q = QuadInstance::new(i.clone(), i.clone(), i.clone(), two).unwrap();
        assert!(tu_minus_vw_is_toeplitz(&q));
        assert!(!tu_equals_vw(&q).unwrap());

        let q = QuadInstance::new(t.clone(), u.clone(), u.clone(), t.clone()).unwrap();
        let dense = q.dense_difference();
        assert_eq!(tu_minus_vw_is_toeplitz(&q), is_toeplitz(&dense, ()).is_some());
        if !tu_minus_vw_is_toeplitz(&q) {
            assert!(matches!(tu_equals_vw(&q), Err(Error::HypothesisViolated(_))));
        }
    }

    #[test]
    fn zero_product_pattern_example() {
        let z = HQuat::zero();
        for n in 2..=6 {
            let mut p = vec![z.clone(); n];
            p[n - 1] = h(1, 2, 0, 1);
            let q: Vec<HQuat> = (0..n).map(|k| if k == 0 { z.clone() } else { h(k as i64, 1, 0, -1) }).collect();
            let t = gen(0, p, vec![z.clone(); n]);
            let u = gen(0, q, vec![z.clone(); n]);
            let rep = zero_product_classify(&t, &u).unwrap();
            assert_eq!(rep.case, ZeroCase::PsiZero);
            assert!(rep.dense_zero);
            assert_eq!(rep.stated_condition, Some(true));
        }
    }

    #[test]
    fn zero_product_trivial_and_independent() {
        let z = ToeplitzGen::scalar(3, HQuat::zero(), ());
        let rep = zero_product_classify(&z, &z).unwrap();
        assert!(rep.dense_zero && rep.u_zero && rep.conclusion_holds());

        let (t, u) = pair();
        let rep = zero_product_classify(&t, &u).unwrap();
        assert_eq!(rep.case, ZeroCase::Independent);
        assert!(!rep.dense_zero);
        assert!(rep.conclusion_holds());
    }

    #[test]
    fn triangular_pattern_is_not_exhaustive_from_order_four() {
        let z = HQuat::zero();
        let mid = |n: usize| -> Vec<HQuat> { (0..n).map(|k| if k == 2 { HQuat::one() } else { z.clone() }).collect() };
        let t = gen(0, mid(4), vec![z.clone(); 4]);
        let u = gen(0, mid(4), vec![z.clone(); 4]);
        let rep = zero_product_classify(&t, &u).unwrap();
        assert!(rep.dense_zero);
        assert_eq!(rep.stated_condition, Some(false));
        assert_eq!(rep.equivalence_holds, Some(false));
        assert_eq!(rep.valuation_rule, Some(true));
    }

    #[test]
    fn multiplication_counts() {
        let (t, u) = pair();
        let mut fast = 0;
        displacement_multiply_counted(&t, &u, &mut fast).unwrap();
        let mut naive = 0;
        t.dense().mul_counted(&u.dense(), &mut naive).unwrap();
        assert_eq!(naive, 64);
        assert!(fast <= 32 * 16, "{fast}");
    }
}
