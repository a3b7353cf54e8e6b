//! Truncated univariate power series.
//!
//! Two shapes are used throughout:
//!
//! * [`PowerSeries`] — a general truncated series `e_0 + e_1 r + ... + e_N r^N`,
//!   for intermediates such as `(1+u)^{p/q}`;
//! * [`MapSeries`] — a series `r + c_1 r^2 + ... + c_N r^{N+1}` with an
//!   implicit unit leading coefficient. Under composition these form a group,
//!   and every first-return map lives here.
//!
//! All coefficients are exact; truncation degrees are strict (nothing above
//! the cap is ever read or written).

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::traits::One;

use crate::scalar::{Scalar, ToComplex};

/// Default truncation degree for series over scalar rings; word files that
/// omit a truncation get this.
pub const DEFAULT_SCALAR_TRUNCATION: usize = 16;

/// Default truncation degree when coefficients are multivariate
/// polynomials (composition cost grows much faster there).
pub const DEFAULT_POLY_TRUNCATION: usize = 12;

/// `e_0 + e_1 r + ... + e_N r^N`, truncated at degree `N = coeffs.len() - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> PowerSeries<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least degree 0");
        Self { coeffs }
    }

    pub fn zero(trunc: usize) -> Self {
        Self::new(vec![S::zero(); trunc + 1])
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = S::one();
        s
    }

    /// Truncation degree `N`.
    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &S {
        assert!(k <= self.trunc(), "coefficient above truncation degree");
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.trunc(), rhs.trunc(), "truncation degree mismatch");
        Self::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    /// Cauchy product, truncated.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.trunc(), rhs.trunc(), "truncation degree mismatch");
        let n = self.trunc();
        let mut out = vec![S::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }
}

/// `(1+u)^{p/q}` for a series `u` with zero constant term, via the
/// generalized binomial series with exact rational coefficients.
///
/// Panics if `u` has a nonzero constant term or `q == 0`.
pub fn binom_pow<S: Scalar>(u: &PowerSeries<S>, p: i64, q: i64) -> PowerSeries<S> {
    assert!(q > 0, "binom_pow requires a positive root index");
    assert!(
        u.coeff(0).is_zero(),
        "binom_pow is defined for unit-constant-term arguments only"
    );
    let n = u.trunc();
    let alpha = BigRational::new(BigInt::from(p), BigInt::from(q));
    let mut out = PowerSeries::one(n);
    // Sum_{s>=1} C(alpha, s) u^s; u^s starts at degree s, so s stops at N.
    let mut u_pow = PowerSeries::one(n);
    let mut binom = BigRational::one();
    for s in 1..=n as i64 {
        u_pow = u_pow.mul(u);
        binom *= (&alpha - BigRational::from_integer(BigInt::from(s - 1)))
            / BigRational::from_integer(BigInt::from(s));
        if num::traits::Zero::is_zero(&binom) {
            break; // integer exponent exhausted
        }
        out = out.add(&u_pow.scale(&S::from_rat(&binom)));
    }
    out
}

/// `r + c_1 r^2 + ... + c_N r^{N+1}`: a first-return-map shaped series.
/// The unit coefficient of `r` is implicit; `coeffs[i-1]` holds `c_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct MapSeries<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> MapSeries<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        Self { coeffs }
    }

    /// The identity `r` of the composition group.
    pub fn identity(trunc: usize) -> Self {
        Self::new(vec![S::zero(); trunc])
    }

    /// Truncation degree `N` (the series runs through `c_N r^{N+1}`).
    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }

    /// `c_i` for `1 <= i <= N`.
    pub fn coeff(&self, i: usize) -> &S {
        assert!(i >= 1 && i <= self.trunc(), "index outside 1..=N");
        &self.coeffs[i - 1]
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Full coefficient vector `[0, 1, c_1, ..., c_N]` of the underlying
    /// polynomial in `r`.
    fn full(&self) -> Vec<S> {
        let mut v = Vec::with_capacity(self.trunc() + 2);
        v.push(S::zero());
        v.push(S::one());
        v.extend(self.coeffs.iter().cloned());
        v
    }

    fn from_full(mut v: Vec<S>) -> Self {
        assert!(v.len() >= 2 && v[0].is_zero() && v[1].is_one(), "not a unit-leading series");
        v.drain(0..2);
        Self::new(v)
    }

    /// Composition `self ∘ rhs`, i.e. `self(rhs(r))`, truncated at degree
    /// `N + 1` in `r`. This is the group operation of the return-map group.
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.trunc(), rhs.trunc(), "truncation degree mismatch");
        let deg = self.trunc() + 1; // polynomial degree of the representation
        let g = rhs.full();
        // Horner with respect to the outer series' coefficients.
        let f = self.full();
        let mut acc = vec![S::zero(); deg + 1];
        for fk in f.iter().rev() {
            acc = poly_mul_trunc(&acc, &g, deg);
            acc[0] = acc[0].add(fk);
        }
        Self::from_full(acc)
    }

    /// Two-sided compositional inverse modulo the truncation, solved degree
    /// by degree (always possible: the leading coefficient is 1).
    pub fn inverse(&self) -> Self {
        let n = self.trunc();
        let mut inv = MapSeries::identity(n);
        for i in 1..=n {
            let residue = self.compose(&inv);
            inv.coeffs[i - 1] = residue.coeff(i).neg();
        }
        inv
    }

    /// Horner evaluation of the truncated polynomial at a complex point.
    pub fn eval(&self, r0: Complex64) -> Complex64
    where
        S: ToComplex,
    {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = (acc + c.to_complex()) * r0;
        }
        (acc + Complex64::new(1.0, 0.0)) * r0
    }
}

// Plain truncated polynomial product used by compose.
fn poly_mul_trunc<S: Scalar>(a: &[S], b: &[S], deg: usize) -> Vec<S> {
    let mut out = vec![S::zero(); deg + 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() || i > deg {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j > deg {
                break;
            }
            if bj.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}
