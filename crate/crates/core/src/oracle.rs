//! Brute-force counterparts of the structured algorithms.
//!
//! Nothing here shares code with the fast paths beyond `Mat` storage: the
//! shift is a literal matrix, products are triple loops, quaternion products
//! are expanded from the basis table.

use num_traits::Zero;

use crate::hamilton::Hamilton;
use crate::matrix::{shift, Mat};
use crate::scalar::{Involutive, Kappa, Quaternion, Real, Ring};
use crate::segre::Segre;

/// True iff every descending diagonal of a square matrix is constant.
pub fn diagonal_scan<S: Ring>(m: &Mat<S>) -> bool {
    if !m.is_square() {
        return false;
    }
    let n = m.rows();
    (1..n).all(|i| (1..n).all(|j| m[(i, j)] == m[(i - 1, j - 1)]))
}

/// `Σₖ a[i,k]·b[k,j]` by explicit loops.
pub fn naive_product<S: Ring>(a: &Mat<S>, b: &Mat<S>) -> Mat<S> {
    assert_eq!(a.cols(), b.rows());
    Mat::from_fn(a.rows(), b.cols(), |i, j| {
        let mut acc = S::zero();
        for k in 0..a.cols() {
            acc = acc + a[(i, k)].clone() * b[(k, j)].clone();
        }
        acc
    })
}

/// `M − Γ·M·Γ*` with `Γ` materialized.
pub fn displacement_by_matmul<S: Involutive>(m: &Mat<S>, c: S::Conj) -> Mat<S> {
    let g = shift::<S>(m.rows());
    let rhs = naive_product(&naive_product(&g, m), &g.adjoint_by(c));
    Mat::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)].clone() - rhs[(i, j)].clone())
}

/// `Σ_{ℓ<n} Γ^ℓ·D·(Γ*)^ℓ` with explicit powers.
pub fn reconstruct_by_powers<S: Involutive>(d: &Mat<S>, c: S::Conj) -> Mat<S> {
    let n = d.rows();
    let g = shift::<S>(n);
    let gs = g.adjoint_by(c);
    let mut gl = Mat::identity(n);
    let mut gsl = Mat::identity(n);
    let mut acc: Mat<S> = Mat::zeros(n, n);
    for _ in 0..n {
        let term = naive_product(&naive_product(&gl, d), &gsl);
        acc = Mat::from_fn(n, n, |i, j| acc[(i, j)].clone() + term[(i, j)].clone());
        gl = naive_product(&g, &gl);
        gsl = naive_product(&gsl, &gs);
    }
    acc
}

/// `M^†κ·M − M·M^†κ` entry by entry.
pub fn kappa_commutator_naive<R: Real>(m: &Mat<Segre<R>>, kappa: Kappa) -> Mat<Segre<R>> {
    let n = m.rows();
    Mat::from_fn(n, n, |i, j| {
        let mut acc = Segre::zero();
        for k in 0..n {
            acc = acc + m[(k, i)].conj(kappa) * m[(k, j)].clone()
                - m[(i, k)].clone() * m[(j, k)].conj(kappa);
        }
        acc
    })
}

/// Hamilton product expanded from `i² = j² = k² = ijk = −1`.
pub fn hamilton_by_table<R: Real>(p: &Hamilton<R>, q: &Hamilton<R>) -> Hamilton<R> {
    // table[a][b] = (sign, index) of e_a·e_b with e = (1, i, j, k)
    const TABLE: [[(i8, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    by_table(p.components(), q.components(), &TABLE)
}

/// Segre product expanded from `i² = k² = −1`, `j² = 1`, `ij = k`,
/// `jk = i`, `ki = −j`, all commuting.
pub fn segre_by_table<R: Real>(p: &Segre<R>, q: &Segre<R>) -> Segre<R> {
    const TABLE: [[(i8, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (1, 3), (1, 0), (1, 1)],
        [(1, 3), (-1, 2), (1, 1), (-1, 0)],
    ];
    by_table(p.components(), q.components(), &TABLE)
}

fn by_table<R: Real, Q: Quaternion<Real = R>>(a: [&R; 4], b: [&R; 4], table: &[[(i8, usize); 4]; 4]) -> Q {
    let mut out = [R::zero(), R::zero(), R::zero(), R::zero()];
    for (x, ax) in a.iter().enumerate() {
        for (y, by) in b.iter().enumerate() {
            let (sign, idx) = table[x][y];
            let term = (*ax).clone() * (*by).clone();
            out[idx] = if sign > 0 {
                out[idx].clone() + term
            } else {
                out[idx].clone() - term
            };
        }
    }
    Q::from_components(out)
}

/// Lower triangular nilpotent Toeplitz matrices over a division ring multiply
/// to zero iff their lowest nonzero subdiagonals lie at depth summing to at
/// least `n`. Checked here by building both and multiplying.
pub fn strictly_lower_product_is_zero<R: Real>(p: &[Hamilton<R>], q: &[Hamilton<R>]) -> bool {
    let n = p.len();
    let lower = |v: &[Hamilton<R>]| {
        Mat::from_fn(n, n, |i, j| if i > j { v[i - j].clone() } else { Hamilton::zero() })
    };
    naive_product(&lower(p), &lower(q)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toeplitz::{displacement, reconstruct};
    use crate::{HQuatInt, Int, SQuatInt};

    fn h(w: i64, x: i64, y: i64, z: i64) -> HQuatInt {
        Hamilton::new(Int(w), Int(x), Int(y), Int(z))
    }

    #[test]
    fn tables_match_component_formulas() {
        let vals = [h(1, 2, -1, 3), h(0, -2, 5, 1), h(4, 0, 0, -1)];
        for p in &vals {
            for q in &vals {
                assert_eq!(hamilton_by_table(p, q), p * q);
                let (sp, sq): (SQuatInt, SQuatInt) = (
                    Segre::new(p.w, p.x, p.y, p.z),
                    Segre::new(q.w, q.x, q.y, q.z),
                );
                assert_eq!(segre_by_table(&sp, &sq), &sp * &sq);
            }
        }
    }

    #[test]
    fn matmul_oracles_match_fast_paths() {
        let m = Mat::from_fn(4, 4, |i, j| h(i as i64, j as i64 - 1, 2, (i * j) as i64));
        assert_eq!(displacement_by_matmul(&m, ()), displacement(&m).unwrap());
        let d = displacement(&m).unwrap();
        assert_eq!(reconstruct_by_powers(&d, ()), reconstruct(&d).unwrap());
        assert!(!diagonal_scan(&m));
        assert!(diagonal_scan(&Mat::<HQuatInt>::identity(3)));
    }
}
