//! Hamilton quaternions: `i² = j² = k² = ijk = −1`, noncommutative.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Involutive, Quaternion, Real};

/// `w + x·i + y·j + z·k` over the component type `R`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Hamilton<R> {
    pub w: R,
    pub x: R,
    pub y: R,
    pub z: R,
}

impl<R: Real> Hamilton<R> {
    pub fn new(w: R, x: R, y: R, z: R) -> Self {
        Hamilton { w, x, y, z }
    }

    pub fn i() -> Self {
        Hamilton::new(R::zero(), R::one(), R::zero(), R::zero())
    }

    pub fn j() -> Self {
        Hamilton::new(R::zero(), R::zero(), R::one(), R::zero())
    }

    pub fn k() -> Self {
        Hamilton::new(R::zero(), R::zero(), R::zero(), R::one())
    }

    /// Element of `span{1, i}`, identified with `re + im·i ∈ ℂ`.
    pub fn from_complex(c: &Complex<R>) -> Self {
        Hamilton::new(c.re.clone(), c.im.clone(), R::zero(), R::zero())
    }

    pub fn re(&self) -> R {
        self.w.clone()
    }

    pub fn im(&self) -> Self {
        Hamilton::new(R::zero(), self.x.clone(), self.y.clone(), self.z.clone())
    }

    pub fn conj(&self) -> Self {
        Hamilton::new(
            self.w.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }

    /// `w² + x² + y² + z²`, the square of the norm.
    pub fn norm_sq(&self) -> R {
        self.w.clone() * self.w.clone()
            + self.x.clone() * self.x.clone()
            + self.y.clone() * self.y.clone()
            + self.z.clone() * self.z.clone()
    }

    /// Split `p = a + b·j` with `a, b ∈ ℂ`.
    pub fn symplectic_parts(&self) -> (Complex<R>, Complex<R>) {
        (
            Complex::new(self.w.clone(), self.x.clone()),
            Complex::new(self.y.clone(), self.z.clone()),
        )
    }

    /// The 2×2 complex image `[[w+xi, y+zi], [−y+zi, w−xi]]`.
    pub fn chi2(&self) -> [[Complex<R>; 2]; 2] {
        let (a, b) = self.symplectic_parts();
        [[a.clone(), b.clone()], [-b.conj(), a.conj()]]
    }
}

impl<R: Field> Hamilton<R> {
    /// `p̄ / ‖p‖²`.
    pub fn inv(&self) -> Result<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let c = self.conj();
        Ok(Hamilton::new(
            c.w / n.clone(),
            c.x / n.clone(),
            c.y / n.clone(),
            c.z / n,
        ))
    }
}

impl<R: Real> Add for Hamilton<R> {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Hamilton::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<R: Real> Sub for Hamilton<R> {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        Hamilton::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<R: Real> Neg for Hamilton<R> {
    type Output = Self;

    fn neg(self) -> Self {
        Hamilton::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl<R: Real> Mul for Hamilton<R> {
    type Output = Self;

    fn mul(self, o: Self) -> Self {
        let Hamilton { w: a1, x: b1, y: c1, z: d1 } = self;
        let Hamilton { w: a2, x: b2, y: c2, z: d2 } = o;
        Hamilton::new(
            a1.clone() * a2.clone() - b1.clone() * b2.clone() - c1.clone() * c2.clone()
                - d1.clone() * d2.clone(),
            a1.clone() * b2.clone() + b1.clone() * a2.clone() + c1.clone() * d2.clone()
                - d1.clone() * c2.clone(),
            a1.clone() * c2.clone() - b1.clone() * d2.clone()
                + c1.clone() * a2.clone()
                + d1.clone() * b2.clone(),
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl<'a, R: Real> Mul<&'a Hamilton<R>> for &'a Hamilton<R> {
    type Output = Hamilton<R>;

    fn mul(self, o: &'a Hamilton<R>) -> Hamilton<R> {
        self.clone() * o.clone()
    }
}

impl<R: Real> Zero for Hamilton<R> {
    fn zero() -> Self {
        Hamilton::new(R::zero(), R::zero(), R::zero(), R::zero())
    }

    fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl<R: Real> One for Hamilton<R> {
    fn one() -> Self {
        Hamilton::new(R::one(), R::zero(), R::zero(), R::zero())
    }
}

impl<R: Real> Involutive for Hamilton<R> {
    type Conj = ();

    fn conj_by(&self, _: ()) -> Self {
        self.conj()
    }
}

impl<R: Real> Quaternion for Hamilton<R> {
    type Real = R;

    fn from_components([w, x, y, z]: [R; 4]) -> Self {
        Hamilton { w, x, y, z }
    }

    fn components(&self) -> [&R; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }
}

impl<R: Real> fmt::Display for Hamilton<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i + {}j + {}k)", self.w, self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{HQuat, Rational};

    fn q(w: i64, x: i64, y: i64, z: i64) -> HQuat {
        HQuat::new(r(w, 1), r(x, 1), r(y, 1), r(z, 1))
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn basis_table() {
        let (i, j, k) = (HQuat::i(), HQuat::j(), HQuat::k());
        let one = HQuat::one();
        assert_eq!(i.clone() * j.clone(), k);
        assert_eq!(j.clone() * i.clone(), -k.clone());
        assert_eq!(j.clone() * k.clone(), i);
        assert_eq!(k.clone() * i.clone(), j);
        for u in [&i, &j, &k] {
            assert_eq!(u * u, -one.clone());
        }
        assert_eq!(i.clone() * j.clone() * k.clone(), -one);
    }

    #[test]
    fn mul_examples() {
        let p = q(3, -1, 2, 7);
        assert_eq!(HQuat::one() * p.clone(), p);
        // (1+i)(1+j) = 1 + j + i + ij = 1+i+j+k
        assert_eq!(q(1, 1, 0, 0) * q(1, 0, 1, 0), q(1, 1, 1, 1));
    }

    #[test]
    fn conj_examples() {
        assert_eq!(q(1, 1, 1, 1).conj(), q(1, -1, -1, -1));
        assert_eq!(q(5, 0, 0, 0).conj(), q(5, 0, 0, 0));
        let (i, j) = (HQuat::i(), HQuat::j());
        assert_eq!((i.clone() * j.clone()).conj(), j.conj() * i.conj());
        assert_eq!((i * j).conj(), -HQuat::k());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(q(1, 1, 1, 1).norm_sq(), r(4, 1));
        assert_eq!(HQuat::zero().norm_sq(), r(0, 1));
        let (p, s) = (q(1, 2, 0, 0), q(3, 0, 0, 1));
        assert_eq!((p * s).norm_sq(), r(50, 1));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(HQuat::i().inv().unwrap(), -HQuat::i());
        assert_eq!(
            q(1, 1, 0, 0).inv().unwrap(),
            HQuat::new(r(1, 2), r(-1, 2), r(0, 1), r(0, 1))
        );
        assert_eq!(HQuat::zero().inv(), Err(Error::ZeroInverse));
    }

    #[test]
    fn chi2_examples() {
        let one = HQuat::one().chi2();
        let c = |re: i64, im: i64| Complex::new(r(re, 1), r(im, 1));
        assert_eq!(one, [[c(1, 0), c(0, 0)], [c(0, 0), c(1, 0)]]);
        assert_eq!(HQuat::j().chi2(), [[c(0, 0), c(1, 0)], [c(-1, 0), c(0, 0)]]);
        let lhs = (HQuat::i() * HQuat::j()).chi2();
        let (a, b) = (HQuat::i().chi2(), HQuat::j().chi2());
        let prod = [
            [
                a[0][0].clone() * b[0][0].clone() + a[0][1].clone() * b[1][0].clone(),
                a[0][0].clone() * b[0][1].clone() + a[0][1].clone() * b[1][1].clone(),
            ],
            [
                a[1][0].clone() * b[0][0].clone() + a[1][1].clone() * b[1][0].clone(),
                a[1][0].clone() * b[0][1].clone() + a[1][1].clone() * b[1][1].clone(),
            ],
        ];
        assert_eq!(lhs, prod);
        assert_eq!(lhs, HQuat::k().chi2());
    }
}
