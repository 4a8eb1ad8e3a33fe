//! Segre commutative quaternions: `i² = k² = −1`, `j² = 1`, `ij = k`, all
//! products commute. The algebra has zero divisors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Field, Involutive, Kappa, Quaternion, Real};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Segre<R> {
    pub w: R,
    pub x: R,
    pub y: R,
    pub z: R,
}

/// Which involution a Segre-valued generator or inner product applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SegreConj {
    /// Identity map (no conjugation).
    Raw,
    Kappa(Kappa),
}

impl<R: Real> Segre<R> {
    pub fn new(w: R, x: R, y: R, z: R) -> Self {
        Segre { w, x, y, z }
    }

    pub fn i() -> Self {
        Segre::new(R::zero(), R::one(), R::zero(), R::zero())
    }

    pub fn j() -> Self {
        Segre::new(R::zero(), R::zero(), R::one(), R::zero())
    }

    pub fn k() -> Self {
        Segre::new(R::zero(), R::zero(), R::zero(), R::one())
    }

    /// The κ-th principal conjugate.
    pub fn conj(&self, kappa: Kappa) -> Self {
        let (w, x, y, z) = (
            self.w.clone(),
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
        );
        match kappa {
            Kappa::One => Segre::new(w, -x, y, -z),
            Kappa::Two => Segre::new(w, x, -y, -z),
            Kappa::Three => Segre::new(w, -x, -y, z),
        }
    }

    /// Fourth power of the norm, `[(w+y)² + (x+z)²]·[(w−y)² + (x−z)²]`.
    pub fn norm4(&self) -> R {
        let s = |a: R, b: R| a.clone() * a + b.clone() * b;
        let plus = s(
            self.w.clone() + self.y.clone(),
            self.x.clone() + self.z.clone(),
        );
        let minus = s(
            self.w.clone() - self.y.clone(),
            self.x.clone() - self.z.clone(),
        );
        plus * minus
    }

    /// Nonzero element whose norm form vanishes. Zero itself is not one.
    pub fn is_zero_divisor(&self) -> bool {
        !self.is_zero() && self.norm4().is_zero()
    }

    /// `p⁽¹⁾·p⁽²⁾·p⁽³⁾`, the adjugate used by the inverse.
    pub fn conj_product(&self) -> Self {
        self.conj(Kappa::One) * self.conj(Kappa::Two) * self.conj(Kappa::Three)
    }

    /// Left-multiplication matrix: `real_rep(p) · [q₀,q₁,q₂,q₃]ᵀ` are the
    /// components of `pq`.
    pub fn real_rep(&self) -> [[R; 4]; 4] {
        let (p0, p1, p2, p3) = (
            self.w.clone(),
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
        );
        [
            [p0.clone(), -p1.clone(), p2.clone(), -p3.clone()],
            [p1.clone(), p0.clone(), p3.clone(), p2.clone()],
            [p2.clone(), -p3.clone(), p0.clone(), -p1.clone()],
            [p3, p2, p1, p0],
        ]
    }
}

impl<R: Field> Segre<R> {
    /// `p⁽¹⁾p⁽²⁾p⁽³⁾ / (p·p⁽¹⁾p⁽²⁾p⁽³⁾)`; the denominator is the real scalar
    /// `norm4(p)`.
    pub fn inv(&self) -> Result<Self> {
        let n = self.norm4();
        if n.is_zero() {
            return Err(Error::NotInvertible);
        }
        let adj = self.conj_product();
        Ok(Segre::new(
            adj.w / n.clone(),
            adj.x / n.clone(),
            adj.y / n.clone(),
            adj.z / n,
        ))
    }
}

impl<R: Real + ToPrimitive> Segre<R> {
    /// Fourth root of `norm4`, for display only.
    pub fn norm_f64(&self) -> f64 {
        self.norm4().to_f64().unwrap_or(f64::NAN).powf(0.25)
    }
}

impl<R: Real> Add for Segre<R> {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Segre::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<R: Real> Sub for Segre<R> {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        Segre::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<R: Real> Neg for Segre<R> {
    type Output = Self;

    fn neg(self) -> Self {
        Segre::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl<R: Real> Mul for Segre<R> {
    type Output = Self;

    fn mul(self, o: Self) -> Self {
        let Segre { w: p0, x: p1, y: p2, z: p3 } = self;
        let Segre { w: q0, x: q1, y: q2, z: q3 } = o;
        Segre::new(
            p0.clone() * q0.clone() - p1.clone() * q1.clone() + p2.clone() * q2.clone()
                - p3.clone() * q3.clone(),
            p1.clone() * q0.clone()
                + p0.clone() * q1.clone()
                + p3.clone() * q2.clone()
                + p2.clone() * q3.clone(),
            p0.clone() * q2.clone() + p2.clone() * q0.clone()
                - p1.clone() * q3.clone()
                - p3.clone() * q1.clone(),
            p3 * q0 + p0 * q3 + p1 * q2 + p2 * q1,
        )
    }
}

impl<'a, R: Real> Mul<&'a Segre<R>> for &'a Segre<R> {
    type Output = Segre<R>;

    fn mul(self, o: &'a Segre<R>) -> Segre<R> {
        self.clone() * o.clone()
    }
}

impl<R: Real> Zero for Segre<R> {
    fn zero() -> Self {
        Segre::new(R::zero(), R::zero(), R::zero(), R::zero())
    }

    fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl<R: Real> One for Segre<R> {
    fn one() -> Self {
        Segre::new(R::one(), R::zero(), R::zero(), R::zero())
    }
}

impl<R: Real> Involutive for Segre<R> {
    type Conj = SegreConj;

    fn conj_by(&self, c: SegreConj) -> Self {
        match c {
            SegreConj::Raw => self.clone(),
            SegreConj::Kappa(k) => self.conj(k),
        }
    }
}

impl<R: Real> Quaternion for Segre<R> {
    type Real = R;

    fn from_components([w, x, y, z]: [R; 4]) -> Self {
        Segre { w, x, y, z }
    }

    fn components(&self) -> [&R; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }
}

impl<R: Real> fmt::Display for Segre<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i + {}j + {}k)", self.w, self.x, self.y, self.z)
    }
}
