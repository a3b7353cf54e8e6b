//! Coefficient rings for the exact algebra.
//!
//! Everything downstream (series, noncommutative algebra, return maps) is
//! generic over [`Scalar`], whose implementors are exact rings: arbitrary
//! precision rationals, Gaussian rationals and multivariate polynomials.
//! Floating point lives only in the flow oracle and never enters a `Scalar`
//! computation, so "exact vs float" mixups are unrepresentable.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An exact coefficient ring element. `from_rat` embeds the rationals, which
/// every ring used here contains (division only ever happens by nonzero
/// rational scalars such as factorials and binomial coefficients).
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_rat(r: &BigRational) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Multiply by an exact rational scalar.
    fn scale(&self, r: &BigRational) -> Self {
        self.mul(&Self::from_rat(r))
    }
}

/// Scalars that can be pushed into the complex plane for the float oracle.
pub trait ToComplex: Scalar {
    fn to_complex(&self) -> Complex64;
}

/// Exact `re + im·i` with rational parts. The working ring for concrete
/// word amplitudes; plain rationals are the `im = 0` case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        Self {
            re,
            im: Zero::zero(),
        }
    }

    /// Shorthand for small rational constants: `ratio(p, q) = p/q`.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self::from_real(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl Scalar for GaussianRational {
    fn zero() -> Self {
        Self::from_real(Zero::zero())
    }
    fn one() -> Self {
        Self::from_real(One::one())
    }
    fn from_int(n: i64) -> Self {
        Self::from_real(BigRational::from_integer(BigInt::from(n)))
    }
    fn from_rat(r: &BigRational) -> Self {
        Self::from_real(r.clone())
    }
    fn add(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        // Real times real is the overwhelmingly common case.
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self {
                re: &self.re * &rhs.re,
                im: Zero::zero(),
            };
        }
        Self {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
    fn neg(&self) -> Self {
        Self {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl ToComplex for GaussianRational {
    fn to_complex(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// Parse an exact rational from the wire form `"p"` or `"p/q"`.
/// Lowest terms and a positive denominator are restored on construction.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        None => {
            let p = BigInt::from_str(s).map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
        Some((num, den)) => {
            let p = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Render a rational in the wire form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &BigRational) -> String {
    r.to_string()
}

pub fn rat_to_f64(r: &BigRational) -> f64 {
    // ToPrimitive can overflow for huge numerators; split as numer/denom.
    r.to_f64()
        .unwrap_or_else(|| r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN))
}

/// n! as an exact rational, for exponential and binomial coefficients.
pub fn factorial(n: usize) -> BigRational {
    let mut acc = BigInt::one();
    for j in 2..=n {
        acc *= BigInt::from(j);
    }
    BigRational::from_integer(acc)
}
