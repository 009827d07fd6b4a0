//! Exact arithmetic in the real quadratic field `Q(sqrt(5))`.
//!
//! [`QuadExt`] stores `a + b*sqrt(5)` with reduced arbitrary-precision
//! rational components. Equality, hashing, ordering, and the sign predicate
//! are all exact; the only lossy operation is the explicit rendering to a
//! high-precision float.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use astro_float::{BigFloat, RoundingMode};
use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use num_rational::BigRational;

/// Errors surfaced by the exact-number kernel.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactNumError {
    #[error("division by zero in Q(sqrt(5))")]
    DivisionByZero,
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,
}

/// `a + b*sqrt(5)` with exact rational components.
///
/// The component representation is canonical (rationals are kept reduced by
/// `BigRational`), so derived equality and hashing agree with equality of
/// the represented real numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: BigRational,
    b: BigRational,
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadExt { a, b }
    }

    pub fn from_rational(a: BigRational) -> Self {
        QuadExt {
            a,
            b: BigRational::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`, as a convenience for literal tables.
    pub fn rational(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational literal with zero denominator");
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `an/ad + (bn/bd)*sqrt(5)`, as a convenience for literal tables.
    pub fn quad(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        assert!(ad != 0 && bd != 0, "quad literal with zero denominator");
        QuadExt {
            a: BigRational::new(BigInt::from(an), BigInt::from(ad)),
            b: BigRational::new(BigInt::from(bn), BigInt::from(bd)),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn sqrt5() -> Self {
        QuadExt {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    /// The golden ratio `(1 + sqrt(5))/2`.
    pub fn golden_ratio() -> Self {
        Self::quad(1, 2, 1, 2)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The exact rational value, if the radical component vanishes.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.a.clone())
    }

    /// Field conjugation `sqrt(5) -> -sqrt(5)`.
    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// `self * self.conjugate() = a^2 - 5 b^2`, always rational.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(BigInt::from(5)) * &self.b * &self.b
    }

    /// Exact sign of the represented real number: `-1`, `0`, or `1`.
    ///
    /// When the components disagree in sign the comparison reduces to
    /// `a^2` versus `5 b^2`; equality there is impossible for nonzero
    /// rationals because 5 is not a rational square.
    pub fn sign(&self) -> i32 {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (a, b) if a >= 0 && b >= 0 => 1,
            (a, b) if a <= 0 && b <= 0 => -1,
            _ => {
                let lhs = &self.a * &self.a;
                let rhs = BigRational::from_integer(BigInt::from(5)) * &self.b * &self.b;
                match lhs.cmp(&rhs) {
                    Ordering::Greater => sa,
                    Ordering::Less => -sa,
                    Ordering::Equal => 0,
                }
            }
        }
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inverse(&self) -> Result<Self, ExactNumError> {
        if self.is_zero() {
            return Err(ExactNumError::DivisionByZero);
        }
        let n = self.norm();
        Ok(QuadExt {
            a: &self.a / &n,
            b: -(&self.b / &n),
        })
    }

    /// Exact division. Errors on a zero divisor.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactNumError> {
        Ok(self * &rhs.inverse()?)
    }

    /// Integer power with exponentiation by squaring. Negative exponents
    /// invert first and therefore error on zero.
    pub fn powi(&self, exp: i64) -> Result<Self, ExactNumError> {
        if exp == 0 {
            return Ok(Self::one());
        }
        let base = if exp < 0 {
            if self.is_zero() {
                return Err(ExactNumError::ZeroToNegativePower);
            }
            self.inverse()?
        } else {
            self.clone()
        };
        let mut result = Self::one();
        let mut square = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &square;
            }
            e >>= 1;
            if e > 0 {
                square = &square * &square;
            }
        }
        Ok(result)
    }

    /// Rounds the exact value to a binary float with `precision_bits`
    /// significant bits. The result is accurate to within a few ulps.
    pub fn to_float(&self, precision_bits: usize) -> BigFloat {
        let p = precision_bits.max(8);
        let work = p + 32;
        let rm = RoundingMode::ToEven;
        let a = rational_to_bigfloat(&self.a, work);
        if self.b.is_zero() {
            return round_to(a, p);
        }
        let sqrt5 = BigFloat::from_u8(5, work).sqrt(work, rm);
        let b = rational_to_bigfloat(&self.b, work);
        round_to(a.add(&b.mul(&sqrt5, work, rm), work, rm), p)
    }
}

fn rational_sign(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

fn round_to(x: BigFloat, p: usize) -> BigFloat {
    let mut out = x;
    // Precision reduction only fails on NaN, which the construction above
    // cannot produce.
    out.set_precision(p, RoundingMode::ToEven)
        .expect("finite value");
    out
}

/// Converts a `BigInt` to a float with relative error below `2^(16 - p)`.
///
/// Only the top `p` bits of the integer participate: the integer is shifted
/// down to at most `p` bits, converted digit by digit (exactly, since the
/// working precision covers every bit), then the shift is restored on the
/// exponent.
pub fn bigint_to_bigfloat(n: &BigInt, p: usize) -> BigFloat {
    let p = p.max(64);
    let rm = RoundingMode::ToEven;
    let (sign, mag) = n.clone().into_parts();
    if mag.is_zero() {
        return BigFloat::from_u8(0, p);
    }
    let bits = mag.bits();
    let shift = bits.saturating_sub(p as u64);
    let top = &mag >> shift;
    let digits = top.to_u64_digits();
    let mut f = BigFloat::from_u8(0, p + 64);
    let two64 = BigFloat::from_u8(2, p + 64).powi(64, p + 64, rm);
    for d in digits.iter().rev() {
        f = f.mul(&two64, p + 64, rm);
        f = f.add(&BigFloat::from_u64(*d, p + 64), p + 64, rm);
    }
    if shift > 0 {
        let scale = BigFloat::from_u8(2, p + 64).powi(shift as usize, p + 64, rm);
        f = f.mul(&scale, p + 64, rm);
    }
    if sign == Sign::Minus {
        f = f.neg();
    }
    round_to(f, p)
}

/// Converts an exact rational to a float accurate to a few ulps at
/// precision `p`.
pub fn rational_to_bigfloat(q: &BigRational, p: usize) -> BigFloat {
    let p = p.max(64);
    let num = bigint_to_bigfloat(q.numer(), p + 32);
    let den = bigint_to_bigfloat(q.denom(), p + 32);
    round_to(num.div(&den, p + 32, RoundingMode::ToEven), p)
}

impl Default for QuadExt {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadExt {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        QuadExt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        let five = BigRational::from_integer(BigInt::from(5));
        QuadExt {
            a: &self.a * &rhs.a + &five * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt(5)", self.b);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt(5)", self.a, -self.b.clone())
        } else {
            write!(f, "{} + {}*sqrt(5)", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau() -> QuadExt {
        QuadExt::golden_ratio()
    }

    #[test]
    fn golden_ratio_satisfies_its_quadratic() {
        let t = tau();
        assert_eq!(&t * &t, &t + &QuadExt::one());
        assert_eq!(t.norm(), BigRational::from_integer(BigInt::from(-1)));
    }

    #[test]
    fn sqrt5_squares_to_five() {
        let r = QuadExt::sqrt5();
        assert_eq!(&r * &r, QuadExt::from_integer(5));
    }

    #[test]
    fn sign_handles_mixed_components() {
        assert_eq!(QuadExt::quad(7, 1, -3, 1).sign(), 1); // 49 > 45
        assert_eq!(QuadExt::quad(2, 1, -1, 1).sign(), -1); // 4 < 5
        assert_eq!(QuadExt::quad(-2, 1, 1, 1).sign(), 1);
        assert_eq!(QuadExt::quad(-7, 1, 3, 1).sign(), -1);
        assert_eq!(QuadExt::quad(-1, 2, 1, 2).sign(), 1); // tau - 1 > 0
        assert_eq!(QuadExt::zero().sign(), 0);
        assert_eq!(QuadExt::from_integer(-4).sign(), -1);
        assert_eq!(QuadExt::sqrt5().sign(), 1);
    }

    #[test]
    fn ordering_sorts_by_real_value() {
        let mut vals = vec![
            QuadExt::quad(2, 1, -2, 5),  // 2 - (2/5) sqrt5 ~ 1.106
            QuadExt::golden_ratio(),     // ~1.618
            QuadExt::quad(2, 1, 2, 5),   // ~2.894
            QuadExt::from_integer(3),
            QuadExt::from_integer(4),
        ];
        let expected = vals.clone();
        vals.reverse();
        vals.sort();
        assert_eq!(vals, expected);
    }

    #[test]
    fn inverse_and_division() {
        let x = QuadExt::quad(2, 1, -1, 2) + QuadExt::quad(0, 1, 0, 1); // 2 - (1/2)sqrt5
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, QuadExt::one());
        assert_eq!(
            QuadExt::zero().inverse(),
            Err(ExactNumError::DivisionByZero)
        );
        let y = QuadExt::quad(1, 1, 1, 1);
        assert_eq!(y.checked_div(&y).unwrap(), QuadExt::one());
        assert_eq!(
            y.checked_div(&QuadExt::zero()),
            Err(ExactNumError::DivisionByZero)
        );
    }

    #[test]
    fn integer_powers() {
        let t = tau();
        // tau^-2 = 2 - tau = (3 - sqrt5)/2
        assert_eq!(t.powi(-2).unwrap(), QuadExt::quad(3, 2, -1, 2));
        assert_eq!(t.powi(0).unwrap(), QuadExt::one());
        // tau^6 = 8 tau + 5 (Fibonacci recursion)
        assert_eq!(t.powi(6).unwrap(), QuadExt::quad(9, 1, 4, 1));
        assert_eq!(
            QuadExt::zero().powi(-1),
            Err(ExactNumError::ZeroToNegativePower)
        );
        assert_eq!(QuadExt::zero().powi(3).unwrap(), QuadExt::zero());
    }

    #[test]
    fn conjugation_is_a_field_automorphism() {
        let x = QuadExt::quad(2, 3, -1, 7);
        let y = QuadExt::quad(-5, 2, 4, 3);
        assert_eq!((&x * &y).conjugate(), &x.conjugate() * &y.conjugate());
        assert_eq!((&x + &y).conjugate(), &x.conjugate() + &y.conjugate());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(QuadExt::quad(7, 4, -3, 4).to_string(), "7/4 - 3/4*sqrt(5)");
        assert_eq!(QuadExt::from_integer(2).to_string(), "2");
        assert_eq!(QuadExt::sqrt5().to_string(), "1*sqrt(5)");
        assert_eq!(QuadExt::rational(-3, 6).to_string(), "-1/2");
        assert_eq!(QuadExt::golden_ratio().to_string(), "1/2 + 1/2*sqrt(5)");
    }

    #[test]
    fn float_rendering_matches_direct_evaluation() {
        let rm = RoundingMode::ToEven;
        let p = 128;
        let tau_f = tau().to_float(p);
        let direct = BigFloat::from_u8(5, p + 16)
            .sqrt(p + 16, rm)
            .add(&BigFloat::from_u8(1, p + 16), p + 16, rm)
            .div(&BigFloat::from_u8(2, p + 16), p + 16, rm);
        let diff = tau_f.sub(&direct, p + 16, rm).abs();
        let bound = direct.mul(&BigFloat::from_f64(1e-36, 64), 64, rm);
        assert!(diff.cmp(&bound).unwrap() < 0);
    }

    #[test]
    fn float_rendering_of_large_integers_keeps_leading_bits() {
        let big = BigInt::from(10).pow(100);
        let f = bigint_to_bigfloat(&big, 128);
        let direct = BigFloat::from_u8(10, 160).powi(100, 160, RoundingMode::ToEven);
        let diff = f.sub(&direct, 160, RoundingMode::ToEven).abs();
        let bound = direct.mul(&BigFloat::from_f64(1e-30, 64), 64, RoundingMode::ToEven);
        assert!(diff.cmp(&bound).unwrap() < 0);
    }
}
