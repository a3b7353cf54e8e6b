//! Truncated free associative algebra in generators `X_1, X_2, ...`
//! graded by weight(`X_i`) = `i`.
//!
//! The central object is the signature series of a piecewise-constant
//! coefficient path: the ordered product of segment exponentials
//! ([`chen_series`]). Its coefficients are the basic iterated integrals,
//! which [`iterated_integral_direct`] recomputes by explicit simplex
//! integration so the two routes can check each other.
//!
//! Conventions (pinned, and enforced by the cross-route tests):
//! * paths and words are stored in time order;
//! * `chen_series` multiplies segment exponentials earliest-segment-leftmost;
//! * the coefficient of `X_{i1}...X_{ik}` pairs `i1` with the earliest
//!   integration time.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::rational::BigRational;
use num::traits::Zero;

use crate::error::Error;
use crate::scalar::{factorial, Scalar};

/// Hard ceiling for the grading weight; `2^{19}` compositions is the
/// largest index set the series storage is allowed to touch.
pub const HARD_WEIGHT_CAP: usize = 20;

/// Default grading cap. Override with the `RECTPATH_WEIGHT_CAP` environment
/// variable (clamped to [`HARD_WEIGHT_CAP`]).
pub const DEFAULT_WEIGHT_CAP: usize = 16;

/// The weight cap in effect: `RECTPATH_WEIGHT_CAP` if set and parseable,
/// otherwise [`DEFAULT_WEIGHT_CAP`]; never above [`HARD_WEIGHT_CAP`].
pub fn effective_weight_cap() -> usize {
    match std::env::var("RECTPATH_WEIGHT_CAP") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|n| n.min(HARD_WEIGHT_CAP))
            .unwrap_or(DEFAULT_WEIGHT_CAP),
        Err(_) => DEFAULT_WEIGHT_CAP,
    }
}

/// A monomial index `(i_1, ..., i_k)`: nonempty, order significant,
/// weight `i_1 + ... + i_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition(Vec<u32>);

#[allow(clippy::len_without_is_empty)] // nonempty by construction
impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "compositions are nonempty");
        assert!(parts.iter().all(|&p| p >= 1), "parts are positive");
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }
}

// Weight first, then lexicographic: a canonical order for reports.
impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All `2^{n-1}` compositions of `n`, first part ascending, recursively.
/// Errors above `cap` (enumeration is exponential in `n`).
pub fn compositions_of_weight_capped(n: u32, cap: usize) -> Result<Vec<Composition>, Error> {
    if n as usize > cap {
        return Err(Error::Resource(format!(
            "weight {n} exceeds the composition enumeration cap {cap}"
        )));
    }
    assert!(n >= 1, "weight must be positive");
    fn rec(n: u32, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(Vec::new());
            return;
        }
        let mut inner = Vec::new();
        for first in 1..=n {
            let before = inner.len();
            rec(n - first, &mut inner);
            for rest in inner.drain(before..).collect::<Vec<_>>() {
                let mut c = Vec::with_capacity(rest.len() + 1);
                c.push(first);
                c.extend(rest);
                out.push(c);
            }
        }
    }
    let mut raw = Vec::new();
    rec(n, &mut raw);
    Ok(raw.into_iter().map(Composition).collect())
}

pub fn compositions_of_weight(n: u32) -> Result<Vec<Composition>, Error> {
    compositions_of_weight_capped(n, HARD_WEIGHT_CAP)
}

/// Element of the truncated free algebra: constant term plus a sparse map
/// from compositions (weight <= trunc) to coefficients. No explicit zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct NcSeries<S: Scalar> {
    trunc: u32,
    constant: S,
    terms: BTreeMap<Composition, S>,
}

impl<S: Scalar> NcSeries<S> {
    pub fn zero(trunc: u32) -> Self {
        Self {
            trunc,
            constant: S::zero(),
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit `I`.
    pub fn one(trunc: u32) -> Self {
        Self {
            trunc,
            constant: S::one(),
            terms: BTreeMap::new(),
        }
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn constant(&self) -> &S {
        &self.constant
    }

    pub fn coeff(&self, c: &Composition) -> S {
        self.terms.get(c).cloned().unwrap_or_else(S::zero)
    }

    /// Nonzero terms in canonical (weight, lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &S)> {
        self.terms.iter()
    }

    pub fn set_coeff(&mut self, c: Composition, v: S) {
        assert!(c.weight() <= self.trunc, "composition above truncation weight");
        if v.is_zero() {
            self.terms.remove(&c);
        } else {
            self.terms.insert(c, v);
        }
    }

    pub fn set_constant(&mut self, v: S) {
        self.constant = v;
    }

    pub fn is_one(&self) -> bool {
        self.constant.is_one() && self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.trunc, rhs.trunc, "truncation weight mismatch");
        let mut out = self.clone();
        out.constant = out.constant.add(&rhs.constant);
        for (c, v) in &rhs.terms {
            let sum = out.coeff(c).add(v);
            out.set_coeff(c.clone(), sum);
        }
        out
    }

    pub fn scale(&self, k: &S) -> Self {
        let mut out = Self::zero(self.trunc);
        out.constant = self.constant.mul(k);
        for (c, v) in &self.terms {
            out.set_coeff(c.clone(), v.mul(k));
        }
        out
    }

    /// Concatenation product; monomial weights add, overflow is discarded.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.trunc, rhs.trunc, "truncation weight mismatch");
        let mut out = Self::zero(self.trunc);
        out.constant = self.constant.mul(&rhs.constant);
        if !rhs.constant.is_zero() {
            for (c, v) in &self.terms {
                out.set_coeff(c.clone(), out.coeff(c).add(&v.mul(&rhs.constant)));
            }
        }
        if !self.constant.is_zero() {
            for (c, v) in &rhs.terms {
                out.set_coeff(c.clone(), out.coeff(c).add(&self.constant.mul(v)));
            }
        }
        for (ca, va) in &self.terms {
            for (cb, vb) in &rhs.terms {
                if ca.weight() + cb.weight() > self.trunc {
                    continue;
                }
                let mut parts = ca.0.clone();
                parts.extend_from_slice(&cb.0);
                let c = Composition(parts);
                let sum = out.coeff(&c).add(&va.mul(vb));
                out.set_coeff(c, sum);
            }
        }
        out
    }

    /// `exp(h) = Sum h^n / n!` for `h` with zero constant term; the sum is
    /// finite because `h` is nilpotent modulo the truncation.
    pub fn exp(&self) -> Self {
        assert!(
            self.constant.is_zero(),
            "exp requires a zero constant term"
        );
        let mut out = Self::one(self.trunc);
        let mut power = Self::one(self.trunc);
        for n in 1..=self.trunc as usize {
            power = power.mul(self);
            if power.terms.is_empty() {
                break;
            }
            out = out.add(&power.scale(&S::from_rat(&factorial(n).recip())));
        }
        out
    }

    /// `log(I + u) = Sum (-1)^{s+1} u^s / s` for series with unit constant
    /// term.
    pub fn log(&self) -> Self {
        assert!(self.constant.is_one(), "log requires a unit constant term");
        let mut u = self.clone();
        u.constant = S::zero();
        let mut out = Self::zero(self.trunc);
        let mut power = Self::one(self.trunc);
        for s in 1..=self.trunc as usize {
            power = power.mul(&u);
            if power.terms.is_empty() {
                break;
            }
            let k = BigRational::new(
                if s % 2 == 1 { 1.into() } else { (-1).into() },
                (s as i64).into(),
            );
            out = out.add(&power.scale(&S::from_rat(&k)));
        }
        out
    }
}

/// A piecewise-constant coefficient path on `[0, 1]`: exact rational
/// breakpoints `0 = x_0 < ... < x_m = 1` and, per segment, a sparse
/// `axis -> value` map. Time is normalized so segment values already carry
/// the `T` factor through their durations.
#[derive(Clone, Debug, PartialEq)]
pub struct StepCoefficients<S: Scalar> {
    breakpoints: Vec<BigRational>,
    segments: Vec<BTreeMap<u32, S>>,
}

impl<S: Scalar> StepCoefficients<S> {
    /// `breakpoints` must start at 0, end at 1 and strictly increase;
    /// `segments[j]` holds the values on `[breakpoints[j], breakpoints[j+1])`.
    pub fn new(breakpoints: Vec<BigRational>, segments: Vec<BTreeMap<u32, S>>) -> Self {
        assert!(breakpoints.len() == segments.len() + 1, "breakpoint/segment count mismatch");
        assert!(breakpoints.first().is_some_and(Zero::is_zero), "path starts at 0");
        assert!(
            *breakpoints.last().unwrap() == BigRational::from_integer(1.into()),
            "path ends at 1"
        );
        assert!(
            breakpoints.windows(2).all(|w| w[0] < w[1]),
            "degenerate segment"
        );
        assert!(
            segments.iter().all(|seg| seg.keys().all(|&k| k >= 1)),
            "axes are positive"
        );
        Self {
            breakpoints,
            segments,
        }
    }

    /// Single segment `[0,1]` carrying the given axis values.
    pub fn constant(values: BTreeMap<u32, S>) -> Self {
        Self::new(
            vec![BigRational::from_integer(0.into()), BigRational::from_integer(1.into())],
            vec![values],
        )
    }

    pub fn num_segments(&self) -> usize {
        self.segments.len()
    }

    pub fn breakpoints(&self) -> &[BigRational] {
        &self.breakpoints
    }

    pub fn segment(&self, j: usize) -> &BTreeMap<u32, S> {
        &self.segments[j]
    }

    pub fn duration(&self, j: usize) -> BigRational {
        &self.breakpoints[j + 1] - &self.breakpoints[j]
    }

    pub fn max_axis(&self) -> u32 {
        self.segments
            .iter()
            .flat_map(|seg| seg.keys().copied())
            .max()
            .unwrap_or(0)
    }

    /// Concatenation in time: `self` runs first, compressed to `[0, 1/2]`,
    /// then `other` on `[1/2, 1]`. Values are doubled so every segment
    /// integral survives the reparametrization, which is all the iterated
    /// integrals see.
    pub fn then(&self, other: &Self) -> Self {
        let half = BigRational::new(1.into(), 2.into());
        let two = BigRational::from_integer(2.into());
        let mut breakpoints: Vec<BigRational> =
            self.breakpoints.iter().map(|x| x * &half).collect();
        breakpoints.extend(
            other.breakpoints[1..]
                .iter()
                .map(|x| &half + x * &half),
        );
        let rescale = |seg: &BTreeMap<u32, S>| -> BTreeMap<u32, S> {
            seg.iter().map(|(&k, v)| (k, v.scale(&two))).collect()
        };
        let mut segments: Vec<BTreeMap<u32, S>> = self.segments.iter().map(&rescale).collect();
        segments.extend(other.segments.iter().map(&rescale));
        Self::new(breakpoints, segments)
    }
}

/// The signature series of the path: the ordered product of segment
/// exponentials `exp(dur_j * Sum_i value_{i,j} X_i)`, earliest segment
/// leftmost, truncated at weight `trunc`.
pub fn chen_series<S: Scalar>(a: &StepCoefficients<S>, trunc: u32) -> Result<NcSeries<S>, Error> {
    let cap = effective_weight_cap();
    if trunc as usize > cap {
        return Err(Error::Resource(format!(
            "truncation weight {trunc} exceeds the weight cap {cap}"
        )));
    }
    let mut out = NcSeries::one(trunc);
    for j in 0..a.num_segments() {
        let dur = a.duration(j);
        let mut h = NcSeries::zero(trunc);
        for (&axis, value) in a.segment(j) {
            if axis <= trunc && !value.is_zero() {
                h.set_coeff(Composition::new(vec![axis]), value.scale(&dur));
            }
        }
        out = out.mul(&h.exp());
    }
    Ok(out)
}

/// The basic iterated integral for the composition `(i_1, ..., i_k)`:
/// the integral of `a_{i_1}(s_1) ... a_{i_k}(s_k)` over the ordered simplex
/// `0 <= s_1 <= ... <= s_k <= 1`, with `i_1` paired to the earliest time.
///
/// Computed by accumulating per-segment antiderivatives of piecewise
/// polynomials; exact, and fully independent of [`chen_series`].
pub fn iterated_integral_direct<S: Scalar>(a: &StepCoefficients<S>, c: &Composition) -> S {
    let m = a.num_segments();
    // Per segment, polynomial coefficients (in the global time variable) of
    // the running integrand G_j; G_0 = 1 everywhere.
    let mut current: Vec<Vec<S>> = vec![vec![S::one()]; m];
    for &axis in c.parts() {
        let mut next: Vec<Vec<S>> = Vec::with_capacity(m);
        // Value of the new antiderivative at the left end of the segment.
        let mut acc = S::zero();
        for (j, running) in current.iter().enumerate() {
            let value = a.segment(j).get(&axis).cloned().unwrap_or_else(S::zero);
            // H = antiderivative of the running integrand; the new
            // polynomial on segment j is acc + value * (H(x) - H(left)).
            let h = antiderivative(running);
            let left = &a.breakpoints()[j];
            let right = &a.breakpoints()[j + 1];
            let h_left = eval_poly(&h, left);
            let mut poly: Vec<S> = h.iter().map(|ck| ck.mul(&value)).collect();
            poly[0] = poly[0].sub(&h_left.mul(&value)).add(&acc);
            let h_right = eval_poly(&h, right);
            acc = acc.add(&value.mul(&h_right.sub(&h_left)));
            next.push(poly);
        }
        current = next;
        // After the last axis only the accumulated endpoint value G_k(1)
        // matters, but keeping the polynomials makes the loop uniform.
    }
    let last = current.last().expect("at least one segment");
    eval_poly(last, &BigRational::from_integer(1.into()))
}

fn antiderivative<S: Scalar>(poly: &[S]) -> Vec<S> {
    let mut out = Vec::with_capacity(poly.len() + 1);
    out.push(S::zero());
    for (k, c) in poly.iter().enumerate() {
        out.push(c.scale(&BigRational::new(1.into(), ((k + 1) as i64).into())));
    }
    out
}

fn eval_poly<S: Scalar>(poly: &[S], x: &BigRational) -> S {
    let mut acc = S::zero();
    for c in poly.iter().rev() {
        acc = acc.scale(x).add(c);
    }
    acc
}

/// All interleavings of `alpha` and `beta` preserving both internal orders,
/// with multiplicity (the result has `C(|alpha|+|beta|, |alpha|)` entries).
pub fn shuffle_pairs(alpha: &Composition, beta: &Composition) -> Vec<Composition> {
    fn rec(a: &[u32], b: &[u32], prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if a.is_empty() {
            let mut c = prefix.clone();
            c.extend_from_slice(b);
            out.push(Composition(c));
            return;
        }
        if b.is_empty() {
            let mut c = prefix.clone();
            c.extend_from_slice(a);
            out.push(Composition(c));
            return;
        }
        prefix.push(a[0]);
        rec(&a[1..], b, prefix, out);
        prefix.pop();
        prefix.push(b[0]);
        rec(a, &b[1..], prefix, out);
        prefix.pop();
    }
    let mut out = Vec::new();
    rec(alpha.parts(), beta.parts(), &mut Vec::new(), &mut out);
    out
}
