//! Component and ring traits shared by every scalar type in the crate.
//!
//! Quaternion types are generic over a real component type `R: Real`.
//! Three families are supported:
//!
//! * [`Rational`](crate::Rational): arbitrary-precision rationals, the default
//!   for all theorem checks and the public exact API;
//! * [`Int`]: an `i64` that panics on overflow and on inexact division, used by
//!   integer-valued verification sweeps where bignum allocation would dominate;
//! * `f64` / `f32`: the float path used only by the benchmark counters.

use std::fmt::{self, Debug, Display};
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Real component type of a quaternion.
pub trait Real:
    Num + Signed + Clone + PartialOrd + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Num + Signed + Clone + PartialOrd + Debug + Display + Send + Sync + 'static
{
}

/// Component types with exact (or IEEE) division, required by inverses.
pub trait Field: Real {}

impl Field for BigRational {}
impl Field for f64 {}
impl Field for f32 {}

/// Element of a (possibly noncommutative) unital ring used as a matrix entry.
pub trait Ring:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Send + Sync
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Send + Sync
{
}

/// A ring with a family of involutions selected by `Conj`.
///
/// For Hamilton quaternions and complex numbers there is a single conjugation
/// and `Conj = ()`. Segre quaternions carry three, plus the identity.
pub trait Involutive: Ring {
    type Conj: Copy + Debug + PartialEq + Send + Sync;

    fn conj_by(&self, c: Self::Conj) -> Self;
}

impl<R: Real> Involutive for num_complex::Complex<R> {
    type Conj = ();

    fn conj_by(&self, _: ()) -> Self {
        self.conj()
    }
}

/// Four-component hypercomplex scalar over a real component type.
pub trait Quaternion: Involutive {
    type Real: Real;

    fn from_components(c: [Self::Real; 4]) -> Self;

    fn components(&self) -> [&Self::Real; 4];

    fn from_real(r: Self::Real) -> Self {
        Self::from_components([r, Self::Real::zero(), Self::Real::zero(), Self::Real::zero()])
    }

    /// True when the three imaginary components vanish.
    fn is_real(&self) -> bool {
        let [_, x, y, z] = self.components();
        x.is_zero() && y.is_zero() && z.is_zero()
    }

    fn scale(&self, r: &Self::Real) -> Self {
        let [w, x, y, z] = self.components();
        Self::from_components([
            w.clone() * r.clone(),
            x.clone() * r.clone(),
            y.clone() * r.clone(),
            z.clone() * r.clone(),
        ])
    }
}

/// Index of a Segre conjugate, one of exactly three.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Kappa {
    One,
    Two,
    Three,
}

impl Kappa {
    pub const ALL: [Kappa; 3] = [Kappa::One, Kappa::Two, Kappa::Three];

    pub fn index(self) -> u8 {
        match self {
            Kappa::One => 1,
            Kappa::Two => 2,
            Kappa::Three => 3,
        }
    }

    /// The third index when `self != other`; `None` when they coincide.
    pub fn complement(self, other: Kappa) -> Option<Kappa> {
        if self == other {
            return None;
        }
        Kappa::ALL.into_iter().find(|k| *k != self && *k != other)
    }
}

impl TryFrom<u8> for Kappa {
    type Error = crate::Error;

    fn try_from(v: u8) -> Result<Self, Self::Error> {
        match v {
            1 => Ok(Kappa::One),
            2 => Ok(Kappa::Two),
            3 => Ok(Kappa::Three),
            other => Err(crate::Error::InvalidKappa(other as i64)),
        }
    }
}

impl From<Kappa> for u8 {
    fn from(k: Kappa) -> u8 {
        k.index()
    }
}

impl Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// Exact machine integer: every operation is checked and panics rather than
/// wrapping, and division panics unless it is exact.
///
/// Integer-valued identities evaluated over `Int` are therefore either exact
/// or abort loudly.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Int(pub i64);

impl Int {
    pub fn get(self) -> i64 {
        self.0
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int(v)
    }
}

impl Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(&self.0, f)
    }
}

impl FromStr for Int {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse().map(Int)
    }
}

impl Add for Int {
    type Output = Int;

    fn add(self, rhs: Int) -> Int {
        Int(self.0.checked_add(rhs.0).expect("Int overflow in add"))
    }
}

impl Sub for Int {
    type Output = Int;

    fn sub(self, rhs: Int) -> Int {
        Int(self.0.checked_sub(rhs.0).expect("Int overflow in sub"))
    }
}

impl Mul for Int {
    type Output = Int;

    fn mul(self, rhs: Int) -> Int {
        Int(self.0.checked_mul(rhs.0).expect("Int overflow in mul"))
    }
}

impl Div for Int {
    type Output = Int;

    fn div(self, rhs: Int) -> Int {
        let q = self.0.checked_div(rhs.0).expect("Int division by zero or overflow");
        assert!(q * rhs.0 == self.0, "inexact Int division {} / {}", self.0, rhs.0);
        Int(q)
    }
}

impl Rem for Int {
    type Output = Int;

    fn rem(self, rhs: Int) -> Int {
        Int(self.0.checked_rem(rhs.0).expect("Int remainder by zero or overflow"))
    }
}

impl Neg for Int {
    type Output = Int;

    fn neg(self) -> Int {
        Int(self.0.checked_neg().expect("Int overflow in neg"))
    }
}

impl Zero for Int {
    fn zero() -> Self {
        Int(0)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Int {
    fn one() -> Self {
        Int(1)
    }
}

impl Num for Int {
    type FromStrRadixErr = std::num::ParseIntError;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Int)
    }
}

impl Signed for Int {
    fn abs(&self) -> Self {
        Int(self.0.checked_abs().expect("Int overflow in abs"))
    }

    fn abs_sub(&self, other: &Self) -> Self {
        if self.0 <= other.0 {
            Int(0)
        } else {
            *self - *other
        }
    }

    fn signum(&self) -> Self {
        Int(self.0.signum())
    }

    fn is_positive(&self) -> bool {
        self.0 > 0
    }

    fn is_negative(&self) -> bool {
        self.0 < 0
    }
}

impl Sum for Int {
    fn sum<I: Iterator<Item = Int>>(iter: I) -> Int {
        iter.fold(Int(0), |a, b| a + b)
    }
}

impl Product for Int {
    fn product<I: Iterator<Item = Int>>(iter: I) -> Int {
        iter.fold(Int(1), |a, b| a * b)
    }
}

/// Lift a small integer into any component type.
pub fn real_from_i64<R: Real>(v: i64) -> R {
    let mut acc = R::zero();
    let unit = if v < 0 { -R::one() } else { R::one() };
    // Binary expansion keeps this O(log |v|) for every `Num` type.
    let mut bit = unit;
    let mut m = v.unsigned_abs();
    while m > 0 {
        if m & 1 == 1 {
            acc = acc + bit.clone();
        }
        bit = bit.clone() + bit;
        m >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_is_checked() {
        assert_eq!(Int(6) / Int(3), Int(2));
        assert!(std::panic::catch_unwind(|| Int(7) / Int(2)).is_err());
        assert!(std::panic::catch_unwind(|| Int(i64::MAX) + Int(1)).is_err());
        assert!(std::panic::catch_unwind(|| Int(i64::MAX) * Int(2)).is_err());
    }

    #[test]
    fn lift_small_integers() {
        for v in [-17i64, -1, 0, 1, 5, 1024] {
            assert_eq!(real_from_i64::<Int>(v), Int(v));
            assert_eq!(real_from_i64::<f64>(v), v as f64);
            assert_eq!(
                real_from_i64::<BigRational>(v),
                BigRational::from_integer(v.into())
            );
        }
    }

    #[test]
    fn kappa_complement() {
        assert_eq!(Kappa::One.complement(Kappa::Two), Some(Kappa::Three));
        assert_eq!(Kappa::Three.complement(Kappa::One), Some(Kappa::Two));
        assert_eq!(Kappa::Two.complement(Kappa::Two), None);
        assert!(Kappa::try_from(4u8).is_err());
    }
}
