//! Dense row-major matrices and vectors over any [`Ring`].
//!
//! Products keep the order of scalar factors: entry `(i, j)` of `A·B` is
//! `Σₖ A[i,k]·B[k,j]`, which matters over the Hamilton quaternions.
//!
//! Rank-one conventions used throughout the crate:
//!
//! * `inner(r, q) = Σᵢ conj(qᵢ)·rᵢ`,
//! * `outer(p, q)[i, j] = pᵢ·conj(qⱼ)`,
//!
//! so that `outer(p, q)·r = p·inner(r, q)` with the scalar acting on the right.
//! Over a commutative ring the side is immaterial.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::{Involutive, Kappa, Real, Ring};
use crate::segre::Segre;

/// Dense vector. Plain `Vec` so slices and iterators work unchanged.
pub type Vect<S> = Vec<S>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Ring> Mat<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length of a square matrix.
    pub fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::DimensionMismatch(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vect<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<Vec<S>> {
        let cols = self.cols.max(1);
        let mut out: Vec<Vec<S>> = Vec::with_capacity(self.rows);
        let mut it = self.data.into_iter();
        for _ in 0..self.rows {
            out.push(it.by_ref().take(cols).collect());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> Mat<T> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    fn same_shape(&self, o: &Self, what: &str) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::DimensionMismatch(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_shape(o, "add")?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_shape(o, "sub")?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    /// `s·A`, scalar on the left of every entry.
    pub fn scale_left(&self, s: &S) -> Self {
        self.map(|a| s.clone() * a.clone())
    }

    /// `A·s`, scalar on the right of every entry.
    pub fn scale_right(&self, s: &S) -> Self {
        self.map(|a| a.clone() * s.clone())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        let mut ops = 0;
        self.mul_counted(o, &mut ops)
    }

    /// Naive product, adding the number of scalar multiplications to `ops`.
    pub fn mul_counted(&self, o: &Self, ops: &mut u64) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul: {}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Vec::with_capacity(self.rows * o.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..o.cols {
                let mut acc = S::zero();
                for (k, a) in row.iter().enumerate() {
                    acc = acc + a.clone() * o[(k, j)].clone();
                }
                out.push(acc);
            }
        }
        *ops += (self.rows * self.cols * o.cols) as u64;
        Ok(Mat {
            rows: self.rows,
            cols: o.cols,
            data: out,
        })
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vect<S>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "mul_vec: {} columns, vector of length {}",
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let n = self.order()?;
        let mut acc = Mat::identity(n);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

impl<S: Involutive> Mat<S> {
    /// Entrywise conjugation.
    pub fn conj_by(&self, c: S::Conj) -> Self {
        self.map(|a| a.conj_by(c))
    }

    /// Conjugate transpose with respect to the involution `c`.
    pub fn adjoint_by(&self, c: S::Conj) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj_by(c))
    }
}

impl<S: Involutive<Conj = ()>> Mat<S> {
    /// `M*` for rings with a single conjugation (ℍ, ℂ).
    pub fn adjoint(&self) -> Self {
        self.adjoint_by(())
    }
}

impl<R: Real> Mat<Segre<R>> {
    /// `M⁽ᵏ⁾`, entrywise κ-conjugate.
    pub fn kappa_conj(&self, kappa: Kappa) -> Self {
        self.map(|a| a.conj(kappa))
    }

    /// `M^†κ = (M⁽ᵏ⁾)ᵗ`.
    pub fn kappa_adjoint(&self, kappa: Kappa) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj(kappa))
    }
}

impl<S> Index<(usize, usize)> for Mat<S> {
    type Output = S;

    fn index(&self, (i, j): (usize, usize)) -> &S {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Mat<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

/// Down-shift `Γ`: ones on the subdiagonal.
pub fn shift<S: Ring>(n: usize) -> Mat<S> {
    Mat::from_fn(n, n, |i, j| if i == j + 1 { S::one() } else { S::zero() })
}

/// Standard basis vector `e_k` of length `n`.
pub fn basis<S: Ring>(n: usize, k: usize) -> Vect<S> {
    (0..n).map(|i| if i == k { S::one() } else { S::zero() }).collect()
}

pub fn zero_vec<S: Ring>(n: usize) -> Vect<S> {
    vec![S::zero(); n]
}

/// `<r, q> = Σᵢ conj(qᵢ)·rᵢ`.
pub fn inner<S: Involutive>(r: &[S], q: &[S], c: S::Conj) -> Result<S> {
    if r.len() != q.len() {
        return Err(Error::DimensionMismatch(format!(
            "inner: lengths {} and {}",
            r.len(),
            q.len()
        )));
    }
    Ok(r
        .iter()
        .zip(q)
        .fold(S::zero(), |acc, (ri, qi)| acc + qi.conj_by(c) * ri.clone()))
}

/// `p ⊗ q` with entry `(i, j) = pᵢ·conj(qⱼ)`.
pub fn outer<S: Involutive>(p: &[S], q: &[S], c: S::Conj) -> Mat<S> {
    let qc: Vec<S> = q.iter().map(|x| x.conj_by(c)).collect();
    Mat::from_fn(p.len(), q.len(), |i, j| p[i].clone() * qc[j].clone())
}

pub fn vec_add<S: Ring>(a: &[S], b: &[S]) -> Vect<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn vec_sub<S: Ring>(a: &[S], b: &[S]) -> Vect<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

/// `v·s`, scalar on the right.
pub fn vec_scale_right<S: Ring>(v: &[S], s: &S) -> Vect<S> {
    v.iter().map(|x| x.clone() * s.clone()).collect()
}

/// `s·v`, scalar on the left.
pub fn vec_scale_left<S: Ring>(s: &S, v: &[S]) -> Vect<S> {
    v.iter().map(|x| s.clone() * x.clone()).collect()
}
