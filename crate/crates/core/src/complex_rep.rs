//! The complex representation `χ₁` of Hamilton quaternion matrices.
//!
//! Writing `M = A + B·j` with complex `A` (the `w, x` parts) and `B` (the
//! `y, z` parts), the block layout is
//!
//! ```text
//! χ₁(M) = [  A   B ]
//!         [ −B̄   Ā ]
//! ```
//!
//! The interleaved layout replaces each entry by its 2×2 image `χ(M[i,j])`
//! in place. The two layouts differ by the perfect-shuffle permutation of
//! rows and columns, so every algebraic property holds for both.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::hamilton::Hamilton;
use crate::matrix::Mat;
use crate::scalar::{Quaternion, Real};

/// Exact complex matrix, the codomain of `χ₁`.
pub type CMat<R> = Mat<Complex<R>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Layout {
    #[default]
    Block,
    Interleaved,
}

/// Block layout `[[A, B], [−B̄, Ā]]`.
pub fn chi1<R: Real>(m: &Mat<Hamilton<R>>) -> CMat<R> {
    let (r, c) = (m.rows(), m.cols());
    Mat::from_fn(2 * r, 2 * c, |i, j| {
        let (bi, ii) = (i / r.max(1), i % r.max(1));
        let (bj, jj) = (j / c.max(1), j % c.max(1));
        let (a, b) = m[(ii, jj)].symplectic_parts();
        match (bi, bj) {
            (0, 0) => a,
            (0, _) => b,
            (_, 0) => -b.conj(),
            _ => a.conj(),
        }
    })
}

/// Interleaved layout: entry `(i, j)` becomes the 2×2 block `χ(M[i,j])`.
pub fn chi1_interleaved<R: Real>(m: &Mat<Hamilton<R>>) -> CMat<R> {
    Mat::from_fn(2 * m.rows(), 2 * m.cols(), |i, j| {
        m[(i / 2, j / 2)].chi2()[i % 2][j % 2].clone()
    })
}

pub fn chi1_with<R: Real>(m: &Mat<Hamilton<R>>, layout: Layout) -> CMat<R> {
    match layout {
        Layout::Block => chi1(m),
        Layout::Interleaved => chi1_interleaved(m),
    }
}

/// Inverse of [`chi1`] on its image. Returns `None` when `c` is not of the
/// form `[[A, B], [−B̄, Ā]]`.
pub fn chi1_inverse<R: Real>(c: &CMat<R>) -> Option<Mat<Hamilton<R>>> {
    if c.rows() % 2 != 0 || c.cols() % 2 != 0 {
        return None;
    }
    let (r, k) = (c.rows() / 2, c.cols() / 2);
    for i in 0..r {
        for j in 0..k {
            let (a, b) = (&c[(i, j)], &c[(i, j + k)]);
            if c[(i + r, j)] != -b.conj() || c[(i + r, j + k)] != a.conj() {
                return None;
            }
        }
    }
    Some(Mat::from_fn(r, k, |i, j| {
        let (a, b) = (&c[(i, j)], &c[(i, j + k)]);
        Hamilton::new(a.re.clone(), a.im.clone(), b.re.clone(), b.im.clone())
    }))
}

/// Outcome of the four homomorphism identities on one `(M, N, c)` triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chi1Props {
    /// `χ₁(cM) = c·χ₁(M)`
    pub homogeneous: bool,
    /// `χ₁(M + N) = χ₁(M) + χ₁(N)`
    pub additive: bool,
    /// `χ₁(MN) = χ₁(M)·χ₁(N)`
    pub multiplicative: bool,
    /// `χ₁(M*) = χ₁(M)*`
    pub adjoint: bool,
}

impl Chi1Props {
    pub fn all(&self) -> bool {
        self.homogeneous && self.additive && self.multiplicative && self.adjoint
    }
}

pub fn chi1_props_check<R: Real>(
    m: &Mat<Hamilton<R>>,
    n: &Mat<Hamilton<R>>,
    c: &R,
) -> Result<Chi1Props> {
    if m.rows() != n.rows() || m.cols() != n.cols() || !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "chi1 checks need equal square shapes, got {}x{} and {}x{}",
            m.rows(),
            m.cols(),
            n.rows(),
            n.cols()
        )));
    }
    let (cm, cn) = (chi1(m), chi1(n));
    let cc = Complex::new(c.clone(), R::zero());
    Ok(Chi1Props {
        homogeneous: chi1(&m.map(|x| x.scale(c))) == cm.scale_left(&cc),
        additive: chi1(&m.add(n)?) == cm.add(&cn)?,
        multiplicative: chi1(&m.mul(n)?) == cm.mul(&cn)?,
        adjoint: chi1(&m.adjoint()) == cm.adjoint(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::shift;
    use crate::toeplitz::{is_toeplitz_wrt, ToeplitzGen};
    use crate::{HQuat, Rational};
    use num_traits::{One, Zero};

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn h(w: i64, x: i64, y: i64, z: i64) -> HQuat {
        HQuat::new(r(w), r(x), r(y), r(z))
    }

    fn c(re: i64, im: i64) -> Complex<Rational> {
        Complex::new(r(re), r(im))
    }

    fn example() -> Mat<HQuat> {
        Mat::from_rows(vec![
            vec![h(0, 1, 1, 1), h(1, 0, 0, 1)],
            vec![h(0, 1, 1, 0), h(0, 0, 1, 1)],
        ])
        .unwrap()
    }

    #[test]
    fn worked_example_is_interleaved() {
        let expected = Mat::from_rows(vec![
            vec![c(0, 1), c(1, 1), c(1, 0), c(0, 1)],
            vec![c(-1, 1), c(0, -1), c(0, 1), c(1, 0)],
            vec![c(0, 1), c(1, 0), c(0, 0), c(1, 1)],
            vec![c(-1, 0), c(0, -1), c(-1, 1), c(0, 0)],
        ])
        .unwrap();
        assert_eq!(chi1_interleaved(&example()), expected);
        let perm = [0, 2, 1, 3];
        let block = chi1(&example());
        assert_eq!(Mat::from_fn(4, 4, |i, j| block[(perm[i], perm[j])].clone()), expected);
    }

    #[test]
    fn identity_maps_to_identity() {
        assert_eq!(chi1(&Mat::<HQuat>::identity(3)), Mat::identity(6));
        assert_eq!(chi1_interleaved(&Mat::<HQuat>::identity(3)), Mat::identity(6));
    }

    #[test]
    fn one_by_one_agrees_with_chi2() {
        let p = h(3, -1, 2, 5);
        let m = Mat::from_rows(vec![vec![p.clone()]]).unwrap();
        let img = p.chi2();
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert_eq!(chi1(&m)[(a, b)], img[a][b]);
        }
    }

    #[test]
    fn homomorphism_on_example_pair() {
        let n = Mat::from_rows(vec![
            vec![h(2, 0, -1, 3), h(0, 1, 0, 0)],
            vec![h(1, 1, 1, -2), h(-3, 0, 2, 1)],
        ])
        .unwrap();
        let props = chi1_props_check(&example(), &n, &Rational::new((-3).into(), 2.into())).unwrap();
        assert!(props.all(), "{props:?}");
        let zero = Mat::zeros(2, 2);
        assert!(chi1_props_check(&example(), &zero, &r(7)).unwrap().additive);
        assert!(chi1_props_check(&example(), &Mat::zeros(3, 3), &r(1)).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        assert_eq!(chi1_inverse(&chi1(&example())).unwrap(), example());
        let mut bad = chi1(&example());
        bad[(0, 0)] = c(9, 9);
        assert!(chi1_inverse(&bad).is_none());
    }

    #[test]
    fn toeplitz_structure_through_chi1() {
        let g = ToeplitzGen::new(
            h(1, 0, 0, 0),
            vec![HQuat::zero(), h(0, 1, 2, 0), h(1, 0, 0, -1)],
            vec![HQuat::zero(), h(2, 0, 1, 1), h(0, 0, 0, 1)],
            (),
        )
        .unwrap();
        let t = g.dense();
        let gamma = chi1(&shift::<HQuat>(3));
        assert!(is_toeplitz_wrt(&chi1(&t), &gamma, ()).unwrap());
        let mut bad = t.clone();
        bad[(2, 1)] = bad[(2, 1)].clone() + HQuat::one();
        assert!(!is_toeplitz_wrt(&chi1(&bad), &gamma, ()).unwrap());
    }
}
