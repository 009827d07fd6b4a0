//! Exact arithmetic in the cyclotomic fields `Q(zeta_E)`.
//!
//! Polygon chords live here: the squared chord between vertices `j` steps
//! apart on a regular `E`-gon inscribed in the unit circle is
//! `2 - zeta^j - zeta^(E-j)`, an algebraic integer of `Q(zeta_E)`. Elements
//! are dense coefficient vectors over the power basis `1, zeta, ...,
//! zeta^(phi(E)-1)`, kept reduced modulo the `E`-th cyclotomic polynomial,
//! so equality is coefficientwise and recognizing rational values is a
//! degree check.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Largest polygon order accepted by the capped constructors. Guards the
/// cost of computing cyclotomic polynomials, which is quadratic in the
/// order; callers may raise it explicitly.
pub const DEFAULT_POLYGON_CAP: u64 = 1000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycloError {
    #[error("cyclotomic order {order} outside 1..={cap}")]
    OrderOutOfRange { order: u64, cap: u64 },
    #[error("chord step {step} outside 1..={max} for order {order}")]
    ChordStepOutOfRange { order: u64, step: u64, max: u64 },
    #[error("mixed cyclotomic orders {0} and {1}")]
    MixedOrders(u64, u64),
    #[error("not a rational value: nonzero coefficient at basis degree {0}")]
    NotRational(usize),
}

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut remaining = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= remaining {
        if remaining % p == 0 {
            phi -= phi / p;
            while remaining % p == 0 {
                remaining /= p;
            }
        }
        p += 1;
    }
    if remaining > 1 {
        phi -= phi / remaining;
    }
    phi
}

fn sorted_divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            divs.push(d);
            if d != n / d {
                divs.push(n / d);
            }
        }
        d += 1;
    }
    divs.sort_unstable();
    divs
}

/// The `E`-th cyclotomic polynomial with integer coefficients, ascending
/// by degree and monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloPolynomial {
    order: u64,
    coeffs: Vec<BigInt>,
}

impl CycloPolynomial {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients ascending by degree; the last entry is 1.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }
}

/// `x^d - 1` as an ascending coefficient vector.
fn x_pow_minus_one(d: u64) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); d as usize + 1];
    v[0] = -BigInt::one();
    v[d as usize] = BigInt::one();
    v
}

/// Exact division of integer polynomials with a monic divisor. Panics if
/// the division leaves a remainder; callers only divide `x^d - 1` by
/// products of cyclotomic factors, where exactness is guaranteed.
fn poly_div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    assert!(den[dn].is_one(), "divisor must be monic");
    assert!(num.len() > dn);
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for i in (dn..rem.len()).rev() {
        let c = std::mem::take(&mut rem[i]);
        if c.is_zero() {
            continue;
        }
        for (k, dk) in den.iter().enumerate().take(dn) {
            let delta = &c * dk;
            rem[i - dn + k] -= delta;
        }
        quot[i - dn] = c;
    }
    assert!(
        rem.iter().take(dn).all(BigInt::is_zero),
        "inexact polynomial division"
    );
    quot
}

/// The `E`-th cyclotomic polynomial, refusing orders above
/// [`DEFAULT_POLYGON_CAP`].
pub fn cyclotomic_polynomial(order: u64) -> Result<CycloPolynomial, CycloError> {
    cyclotomic_polynomial_with_cap(order, DEFAULT_POLYGON_CAP)
}

/// The `E`-th cyclotomic polynomial, computed by exact recursive division:
/// `x^E - 1` divided by the cyclotomic polynomials of every proper divisor.
pub fn cyclotomic_polynomial_with_cap(
    order: u64,
    cap: u64,
) -> Result<CycloPolynomial, CycloError> {
    if order < 1 || order > cap {
        return Err(CycloError::OrderOutOfRange { order, cap });
    }
    let mut table: Vec<(u64, Vec<BigInt>)> = Vec::new();
    for d in sorted_divisors(order) {
        let mut poly = x_pow_minus_one(d);
        for (d2, phi) in &table {
            if d % d2 == 0 {
                poly = poly_div_exact_monic(&poly, phi);
            }
        }
        table.push((d, poly));
    }
    let (_, coeffs) = table.pop().expect("order has at least one divisor");
    Ok(CycloPolynomial { order, coeffs })
}

/// An element of `Q(zeta_E)` over the power basis, length `phi(E)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloElement {
    order: u64,
    coeffs: Vec<BigRational>,
}

impl CycloElement {
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficients over `1, zeta, ..., zeta^(phi(E)-1)`.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, CycloError> {
        self.check_order(rhs)?;
        Ok(CycloElement {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, CycloError> {
        self.check_order(rhs)?;
        Ok(CycloElement {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, CycloError> {
        self.check_order(rhs)?;
        let ring = PolygonRing::uncapped(self.order);
        Ok(ring.mul(self, rhs))
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        CycloElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CycloElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    fn check_order(&self, rhs: &Self) -> Result<(), CycloError> {
        if self.order == rhs.order {
            Ok(())
        } else {
            Err(CycloError::MixedOrders(self.order, rhs.order))
        }
    }
}

impl fmt::Display for CycloElement {
    /// Compact polynomial form in the primitive root `z`, e.g. `2 - z - z^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            if k > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "z")?;
                if k > 1 {
                    write!(f, "^{}", k)?;
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Arithmetic context for one cyclotomic order: caches the reduction
/// polynomial so bulk operations avoid recomputing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonRing {
    order: u64,
    degree: usize,
    /// Monic modulus as rationals, ascending, for in-place reduction.
    modulus: Vec<BigRational>,
}

impl PolygonRing {
    pub fn new(order: u64) -> Result<Self, CycloError> {
        Self::with_cap(order, DEFAULT_POLYGON_CAP)
    }

    pub fn with_cap(order: u64, cap: u64) -> Result<Self, CycloError> {
        let phi = cyclotomic_polynomial_with_cap(order, cap)?;
        Ok(Self::from_polynomial(phi))
    }

    /// For internal reduction of elements that were already admitted by a
    /// capped constructor.
    fn uncapped(order: u64) -> Self {
        let phi = cyclotomic_polynomial_with_cap(order, u64::MAX)
            .expect("order was validated at element construction");
        Self::from_polynomial(phi)
    }

    fn from_polynomial(phi: CycloPolynomial) -> Self {
        let degree = phi.degree();
        let modulus = phi
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        PolygonRing {
            order: phi.order,
            degree,
            modulus,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn zero(&self) -> CycloElement {
        CycloElement {
            order: self.order,
            coeffs: vec![BigRational::zero(); self.degree],
        }
    }

    pub fn from_rational(&self, q: BigRational) -> CycloElement {
        let mut out = self.zero();
        out.coeffs[0] = q;
        out
    }

    pub fn one(&self) -> CycloElement {
        self.from_rational(BigRational::one())
    }

    /// `zeta^j`, reduced.
    pub fn zeta_pow(&self, j: u64) -> CycloElement {
        let j = (j % self.order) as usize;
        let mut v = vec![BigRational::zero(); j + 1];
        v[j] = BigRational::one();
        self.reduce(v)
    }

    /// Squared chord between polygon vertices `step` apart on the unit
    /// circle: `2 - zeta^step - zeta^(order-step)`.
    pub fn chord_sq(&self, step: u64) -> Result<CycloElement, CycloError> {
        if step < 1 || step >= self.order {
            return Err(CycloError::ChordStepOutOfRange {
                order: self.order,
                step,
                max: self.order - 1,
            });
        }
        let two = self.from_rational(BigRational::from_integer(BigInt::from(2)));
        let a = self.zeta_pow(step);
        let b = self.zeta_pow(self.order - step);
        Ok(two.sub(&a).and_then(|x| x.sub(&b)).expect("same ring"))
    }

    pub fn add(&self, a: &CycloElement, b: &CycloElement) -> CycloElement {
        self.assert_member(a);
        self.assert_member(b);
        a.add(b).expect("same ring")
    }

    pub fn sub(&self, a: &CycloElement, b: &CycloElement) -> CycloElement {
        self.assert_member(a);
        self.assert_member(b);
        a.sub(b).expect("same ring")
    }

    pub fn mul(&self, a: &CycloElement, b: &CycloElement) -> CycloElement {
        self.assert_member(a);
        self.assert_member(b);
        let mut conv = vec![BigRational::zero(); 2 * self.degree.max(1)];
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                conv[i + j] += ai * bj;
            }
        }
        self.reduce(conv)
    }

    /// `a^exp` by repeated squaring.
    pub fn pow(&self, a: &CycloElement, exp: u64) -> CycloElement {
        self.assert_member(a);
        let mut result = self.one();
        let mut square = a.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &square);
            }
            e >>= 1;
            if e > 0 {
                square = self.mul(&square, &square);
            }
        }
        result
    }

    fn assert_member(&self, a: &CycloElement) {
        assert_eq!(
            a.order, self.order,
            "element of order {} used in ring of order {}",
            a.order, self.order
        );
    }

    /// Reduces an ascending coefficient vector modulo the ring modulus and
    /// pads to the basis length.
    fn reduce(&self, mut v: Vec<BigRational>) -> CycloElement {
        let deg = self.degree;
        let mut i = v.len();
        while i > deg {
            i -= 1;
            let c = std::mem::replace(&mut v[i], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for k in 0..deg {
                if !self.modulus[k].is_zero() {
                    let delta = &c * &self.modulus[k];
                    v[i - deg + k] -= delta;
                }
            }
        }
        v.resize(deg, BigRational::zero());
        CycloElement {
            order: self.order,
            coeffs: v,
        }
    }
}

/// Squared chord between vertices `step` apart on a regular `order`-gon
/// inscribed in the unit circle, under the default order cap.
pub fn chord_sq_polygon(order: u64, step: u64) -> Result<CycloElement, CycloError> {
    if order < 3 {
        return Err(CycloError::OrderOutOfRange {
            order,
            cap: DEFAULT_POLYGON_CAP,
        });
    }
    PolygonRing::new(order)?.chord_sq(step)
}

/// Extracts the exact rational value of an element, erroring if any
/// higher basis coefficient is nonzero.
pub fn rational_recognition(x: &CycloElement) -> Result<BigRational, CycloError> {
    for (k, c) in x.coeffs.iter().enumerate().skip(1) {
        if !c.is_zero() {
            return Err(CycloError::NotRational(k));
        }
    }
    Ok(x.coeffs[0].clone())
}
