//! Toeplitz generators and the displacement operator `M ↦ M − ΓMΓ*`.
//!
//! A Toeplitz matrix is stored as `T = T(p, ψ) + p₀I`: the strictly lower
//! part is read from `p` (`T[i, j] = p_{i−j}`), the strictly upper part from
//! `ψ` through the generator's involution (`T[i, j] = conj(ψ_{j−i})`), and
//! `p₀` sits on the diagonal. Both `p[0]` and `ψ[0]` are stored as zero.

use crate::error::{Error, Result};
use crate::matrix::{Mat, Vect};
use crate::scalar::Involutive;

#[derive(Clone, Debug, PartialEq)]
pub struct ToeplitzGen<S: Involutive> {
    p0: S,
    col: Vect<S>,
    psi: Vect<S>,
    conj: S::Conj,
}

impl<S: Involutive> ToeplitzGen<S> {
    /// Builds a generator of order `col.len()`. Index 0 of `col` and `psi` is
    /// ignored and stored as zero.
    pub fn new(p0: S, mut col: Vect<S>, mut psi: Vect<S>, conj: S::Conj) -> Result<Self> {
        if col.is_empty() || col.len() != psi.len() {
            return Err(Error::DimensionMismatch(format!(
                "Toeplitz generators need equal nonzero lengths, got {} and {}",
                col.len(),
                psi.len()
            )));
        }
        col[0] = S::zero();
        psi[0] = S::zero();
        Ok(ToeplitzGen { p0, col, psi, conj })
    }

    /// `p₀·I` of order `n`.
    pub fn scalar(n: usize, p0: S, conj: S::Conj) -> Self {
        ToeplitzGen {
            p0,
            col: vec![S::zero(); n.max(1)],
            psi: vec![S::zero(); n.max(1)],
            conj,
        }
    }

    pub fn n(&self) -> usize {
        self.col.len()
    }

    pub fn p0(&self) -> &S {
        &self.p0
    }

    /// Strictly lower generator `p` (first column below the diagonal).
    pub fn col(&self) -> &[S] {
        &self.col
    }

    /// Upper generator `ψ`; row 0 holds `conj(ψ_k)`.
    pub fn psi(&self) -> &[S] {
        &self.psi
    }

    pub fn conj(&self) -> S::Conj {
        self.conj
    }

    pub fn with_p0(&self, p0: S) -> Self {
        ToeplitzGen {
            p0,
            ..self.clone()
        }
    }

    pub fn with_conj(&self, conj: S::Conj) -> Self {
        ToeplitzGen {
            conj,
            ..self.clone()
        }
    }

    /// Generators of the adjoint `T*` under the same involution: the roles of
    /// `p` and `ψ` swap and the diagonal is conjugated.
    pub fn adjoint(&self) -> Self {
        ToeplitzGen {
            p0: self.p0.conj_by(self.conj),
            col: self.psi.clone(),
            psi: self.col.clone(),
            conj: self.conj,
        }
    }

    /// Entry `(i, j)` of the dense matrix.
    pub fn entry(&self, i: usize, j: usize) -> S {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => self.p0.clone(),
            Greater => self.col[i - j].clone(),
            Less => self.psi[j - i].conj_by(self.conj),
        }
    }

    pub fn dense(&self) -> Mat<S> {
        let n = self.n();
        let upper: Vec<S> = self.psi.iter().map(|x| x.conj_by(self.conj)).collect();
        Mat::from_fn(n, n, |i, j| {
            if i == j {
                self.p0.clone()
            } else if i > j {
                self.col[i - j].clone()
            } else {
                upper[j - i].clone()
            }
        })
    }

    /// The strict part `T̂ = T − p₀I`.
    pub fn strict_dense(&self) -> Mat<S> {
        self.with_p0(S::zero()).dense()
    }

    /// `T·v` in `O(n²)` without forming the dense matrix.
    pub fn mul_vec(&self, v: &[S], ops: &mut u64) -> Result<Vect<S>> {
        let n = self.n();
        if v.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "Toeplitz of order {n} times vector of length {}",
                v.len()
            )));
        }
        let upper: Vec<S> = self.psi.iter().map(|x| x.conj_by(self.conj)).collect();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = S::zero();
            for (j, vj) in v.iter().enumerate() {
                let t = if i == j {
                    &self.p0
                } else if i > j {
                    &self.col[i - j]
                } else {
                    &upper[j - i]
                };
                if !t.is_zero() && !vj.is_zero() {
                    acc = acc + t.clone() * vj.clone();
                }
            }
            out.push(acc);
        }
        *ops += (n * n) as u64;
        Ok(out)
    }

    /// Reads generators off a dense matrix when it is Toeplitz.
    ///
    /// The matrix qualifies exactly when its displacement vanishes outside
    /// row 0 and column 0; then `p` is column 0, `p₀ = M[0,0]` and `ψ` is
    /// row 0 mapped back through the (involutive) conjugation.
    pub fn from_dense(m: &Mat<S>, conj: S::Conj) -> Option<Self> {
        let n = m.order().ok()?;
        if n == 0 {
            return None;
        }
        let d = displacement(m).ok()?;
        for i in 1..n {
            for j in 1..n {
                if !d[(i, j)].is_zero() {
                    return None;
                }
            }
        }
        let mut col = m.column(0);
        let mut psi: Vect<S> = m.row(0).iter().map(|x| x.conj_by(conj)).collect();
        col[0] = S::zero();
        psi[0] = S::zero();
        Some(ToeplitzGen {
            p0: m[(0, 0)].clone(),
            col,
            psi,
            conj,
        })
    }

    /// `(ψ̃, q̃) = (Γ·T̂·e_{n−1}, Γ·T̂*·e_{n−1})`.
    ///
    /// The first vector is the shifted last column of the strict part,
    /// `ψ̃ᵢ = conj(ψ_{n−i})`; the second is the shifted conjugated last row,
    /// `q̃ᵢ = conj(p_{n−i})`, for `i ≥ 1`, both zero at index 0.
    pub fn tilde_vectors(&self) -> (Vect<S>, Vect<S>) {
        let n = self.n();
        let mut upper = vec![S::zero(); n];
        let mut lower = vec![S::zero(); n];
        for i in 1..n {
            upper[i] = self.psi[n - i].conj_by(self.conj);
            lower[i] = self.col[n - i].conj_by(self.conj);
        }
        (upper, lower)
    }
}

/// `M − Γ·M·Γ*`, computed by index shift.
pub fn displacement<S: Involutive>(m: &Mat<S>) -> Result<Mat<S>> {
    m.order()?;
    Ok(Mat::from_fn(m.rows(), m.cols(), |i, j| {
        if i == 0 || j == 0 {
            m[(i, j)].clone()
        } else {
            m[(i, j)].clone() - m[(i - 1, j - 1)].clone()
        }
    }))
}

/// `Σ_{ℓ<n} Γ^ℓ·D·(Γ*)^ℓ`, the inverse of [`displacement`].
///
/// Entry `(i, j)` accumulates `D` along its diagonal, so each entry costs one
/// addition: `S[i, j] = D[i, j] + S[i−1, j−1]`.
pub fn reconstruct<S: Involutive>(d: &Mat<S>) -> Result<Mat<S>> {
    let n = d.order()?;
    let mut out = d.clone();
    for i in 1..n {
        for j in 1..n {
            let prev = out[(i - 1, j - 1)].clone();
            out[(i, j)] = out[(i, j)].clone() + prev;
        }
    }
    Ok(out)
}

/// Convenience wrapper over [`ToeplitzGen::from_dense`].
pub fn is_toeplitz<S: Involutive>(m: &Mat<S>, conj: S::Conj) -> Option<ToeplitzGen<S>> {
    ToeplitzGen::from_dense(m, conj)
}

/// Displacement structure with respect to an arbitrary structure matrix `S`.
///
/// Returns true iff `M − S·M·S*` is supported on the head rows and columns
/// of `S`, the indices whose row in `S` is identically zero. For `S = Γ` the
/// head set is `{0}` and this is [`is_toeplitz`]; for a block-diagonal
/// `diag(Γ, Γ)` it is `{0, n}`.
pub fn is_toeplitz_wrt<S: Involutive>(m: &Mat<S>, s: &Mat<S>, conj: S::Conj) -> Result<bool> {
    let n = m.order()?;
    if s.rows() != n || s.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "structure matrix {}x{} for a matrix of order {n}",
            s.rows(),
            s.cols()
        )));
    }
    let heads: Vec<bool> = (0..n).map(|i| s.row(i).iter().all(|x| x.is_zero())).collect();
    let d = m.sub(&s.mul(m)?.mul(&s.adjoint_by(conj))?)?;
    for i in 0..n {
        for j in 0..n {
            if !heads[i] && !heads[j] && !d[(i, j)].is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{basis, outer, shift};
    use crate::{HQuat, Rational};
    use num_traits::{One, Zero};

    fn h(w: i64, x: i64, y: i64, z: i64) -> HQuat {
        let r = |v: i64| Rational::from_integer(v.into());
        HQuat::new(r(w), r(x), r(y), r(z))
    }

    fn gen4() -> ToeplitzGen<HQuat> {
        ToeplitzGen::new(
            h(2, 0, 0, 0),
            vec![h(9, 9, 9, 9), h(1, 2, 0, 0), h(0, 0, 1, -1), h(3, 0, 0, 1)],
            vec![h(7, 7, 7, 7), h(0, 1, 1, 0), h(-1, 0, 0, 2), h(0, 0, 0, 1)],
            (),
        )
        .unwrap()
    }

    #[test]
    fn index_zero_is_ignored() {
        let g = gen4();
        assert!(g.col()[0].is_zero());
        assert!(g.psi()[0].is_zero());
    }

    #[test]
    fn dense_layout() {
        let id = ToeplitzGen::scalar(3, HQuat::one(), ()).dense();
        assert_eq!(id, Mat::identity(3));

        let (p0, p1, s1) = (h(1, 1, 0, 0), h(0, 2, 0, 3), h(4, 0, 1, 0));
        let g = ToeplitzGen::new(p0.clone(), vec![HQuat::zero(), p1.clone()], vec![HQuat::zero(), s1.clone()], ())
            .unwrap();
        let expect = Mat::from_rows(vec![vec![p0.clone(), s1.conj()], vec![p1, p0]]).unwrap();
        assert_eq!(g.dense(), expect);
    }

    #[test]
    fn round_trip_generators() {
        let g = gen4();
        let back = ToeplitzGen::from_dense(&g.dense(), ()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn displacement_examples() {
        let p0 = h(3, -1, 0, 2);
        let m = Mat::identity(4).scale_left(&p0);
        let e0 = basis::<HQuat>(4, 0);
        assert_eq!(displacement(&m).unwrap(), outer(&e0, &e0, ()).scale_left(&p0));

        let d = displacement(&gen4().dense()).unwrap();
        for i in 1..4 {
            for j in 1..4 {
                assert!(d[(i, j)].is_zero());
            }
        }

        let dense = Mat::from_fn(3, 3, |i, j| h(i as i64, j as i64, (i * j) as i64, 1));
        let d = displacement(&dense).unwrap();
        assert_eq!(d[(0, 2)], dense[(0, 2)]);
        assert_eq!(d[(2, 0)], dense[(2, 0)]);
        assert_eq!(d[(1, 1)], dense[(1, 1)].clone() - dense[(0, 0)].clone());
        assert_eq!(d[(2, 1)], dense[(2, 1)].clone() - dense[(1, 0)].clone());
        assert!(displacement(&Mat::<HQuat>::zeros(2, 3)).is_err());
    }

    #[test]
    fn reconstruct_examples() {
        let e0 = basis::<HQuat>(4, 0);
        assert_eq!(reconstruct(&outer(&e0, &e0, ())).unwrap(), Mat::identity(4));
        assert!(reconstruct(&Mat::<HQuat>::zeros(3, 3)).unwrap().is_zero());
        let m = Mat::from_fn(5, 5, |i, j| h(i as i64 - 2, j as i64, 1, (i + 2 * j) as i64 % 3));
        assert_eq!(reconstruct(&displacement(&m).unwrap()).unwrap(), m);
    }

    #[test]
    fn characterization_examples() {
        let g = is_toeplitz(&Mat::<HQuat>::identity(3), ()).unwrap();
        assert!(g.p0().is_one());
        assert!(g.col().iter().all(Zero::is_zero));
        assert!(g.psi().iter().all(Zero::is_zero));

        let e0 = basis::<HQuat>(2, 0);
        assert!(is_toeplitz(&outer(&e0, &e0, ()), ()).is_none());
        assert!(is_toeplitz(&Mat::<HQuat>::zeros(2, 3), ()).is_none());
    }

    #[test]
    fn structure_matrix_generalization() {
        let t = gen4().dense();
        assert!(is_toeplitz_wrt(&t, &shift(4), ()).unwrap());
        let e0 = basis::<HQuat>(4, 0);
        assert!(!is_toeplitz_wrt(&outer(&e0, &e0, ()), &shift(4), ()).unwrap());
        assert!(is_toeplitz_wrt(&t, &shift(3), ()).is_err());
    }

    #[test]
    fn tilde_vectors_match_dense_definition() {
        let g = gen4();
        let n = g.n();
        let gamma = shift::<HQuat>(n);
        let that = g.strict_dense();
        let last = basis::<HQuat>(n, n - 1);
        let expect_upper = gamma.mul_vec(&that.mul_vec(&last).unwrap()).unwrap();
        let expect_lower = gamma.mul_vec(&that.adjoint().mul_vec(&last).unwrap()).unwrap();
        assert_eq!(g.tilde_vectors(), (expect_upper, expect_lower));

        let lower_only = ToeplitzGen::new(HQuat::one(), g.col().to_vec(), vec![HQuat::zero(); n], ()).unwrap();
        let (up, _) = lower_only.tilde_vectors();
        assert!(up.iter().all(Zero::is_zero));

        let one = ToeplitzGen::scalar(1, h(1, 2, 3, 4), ());
        let (a, b) = one.tilde_vectors();
        assert!(a[0].is_zero() && b[0].is_zero());
    }

    #[test]
    fn adjoint_generators() {
        let g = gen4();
        assert_eq!(g.adjoint().dense(), g.dense().adjoint());
    }

    #[test]
    fn toeplitz_matvec_matches_dense() {
        let g = gen4();
        let v = vec![h(1, 0, 0, 1), h(0, 2, 1, 0), h(1, 1, 1, 1), h(-2, 0, 3, 0)];
        let mut ops = 0;
        assert_eq!(g.mul_vec(&v, &mut ops).unwrap(), g.dense().mul_vec(&v).unwrap());
        assert_eq!(ops, 16);
    }
}
