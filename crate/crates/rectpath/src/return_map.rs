//! First-return maps of rectangular words, by three independent routes.
//!
//! * Route A composes the closed-form one-letter maps
//!   `r (1 - k b r^k)^{-1/k}`.
//! * Route B reads the coefficients off the Chen series through the
//!   p-polynomial pairing; it also accepts arbitrary step-coefficient paths.
//! * Route C evaluates the q-polynomial expansion in the letter amplitudes
//!   directly.
//!
//! The three must agree coefficient by coefficient, exactly; `return_map`
//! with [`Route::All`] asserts it. A disagreement is an implementation bug,
//! never a property of the input word.
//!
//! Composition order: words are stored in time order and the last letter's
//! map is applied outermost, so `route_a([L1, L2]) = map(L2) ∘ map(L1)` —
//! the same orientation the flow oracle integrates in.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::One;

use crate::algebra::{effective_weight_cap, Composition, NcSeries, StepCoefficients};
use crate::error::Error;
use crate::scalar::{factorial, Scalar};
use crate::series::{binom_pow, MapSeries, PowerSeries};
use crate::word::Word;

/// Truncated first-return map of the one-letter word `(axis, amp)`:
/// `r (1 - axis * amp * r^axis)^{-1/axis}`. The coefficient of
/// `r^{axis*s + 1}` is `prod_{j=1..s}(axis*(j-1) + 1) / s! * amp^s`; every
/// other coefficient vanishes and all signs are positive for positive `amp`.
pub fn basic_return_map<S: Scalar>(axis: u32, amp: &S, trunc: usize) -> MapSeries<S> {
    assert!(axis >= 1, "axes are positive");
    if amp.is_zero() {
        return MapSeries::identity(trunc);
    }
    // Work at one degree extra so dividing out the leading r is exact.
    let k = axis as usize;
    let mut u = PowerSeries::zero(trunc + 1);
    if k <= trunc + 1 {
        let minus_k_amp = amp.scale(&BigRational::from_integer(BigInt::from(-(k as i64))));
        let coeffs_idx = k;
        // u = -k * amp * r^k
        let mut v = vec![S::zero(); trunc + 2];
        v[coeffs_idx] = minus_k_amp;
        u = PowerSeries::new(v);
    }
    let pow = binom_pow(&u, -1, k as i64);
    // r * pow: coefficient c_i of r^{i+1} is pow's degree-i coefficient.
    MapSeries::new(pow.coeffs()[1..=trunc].to_vec())
}

/// The p-polynomial value `p_{i_1,...,i_k}(i) = prod_m (i - (i_1+...+i_m) + 1)`
/// for a composition of weight `i`.
pub fn p_factor(c: &Composition, i: u32) -> BigInt {
    assert_eq!(c.weight(), i, "composition weight must equal the degree");
    let mut acc = 0i64;
    let mut out = BigInt::one();
    for &part in c.parts() {
        acc += part as i64;
        out *= BigInt::from(i as i64 - acc + 1);
    }
    out
}

/// The q-polynomial value of the amplitude expansion: for an axis pattern
/// `(k_1,...,k_l)` and exponents `(s_1,...,s_l)` with `sum k_m s_m = i`,
///
/// `q = prod_{n=0}^{l-1} prod_{j=1}^{s_{n+1}} (i - sum_{m<=n} s_m k_m - j k_{n+1} + 1)`.
///
/// The inner index starts at `j = 1`: the single-axis checks
/// `q_{1;s}(s) = s!` and `q_{2;s}(2s) = (2s-1)!!` pin the range.
pub fn q_factor(axes: &[u32], exponents: &[u32], i: u32) -> BigInt {
    assert_eq!(axes.len(), exponents.len(), "pattern/exponent length mismatch");
    let weight: u64 = axes
        .iter()
        .zip(exponents)
        .map(|(&k, &s)| k as u64 * s as u64)
        .sum();
    assert_eq!(weight, i as u64, "exponent vector weight must equal the degree");
    let mut out = BigInt::one();
    let mut prefix = 0i64;
    for (&k, &s) in axes.iter().zip(exponents) {
        for j in 1..=s as i64 {
            out *= BigInt::from(i as i64 - prefix - j * k as i64 + 1);
        }
        prefix += s as i64 * k as i64;
    }
    out
}

/// Route A: compose the letters' closed-form maps in time order (last
/// letter outermost).
pub fn route_a<S: Scalar>(w: &Word<S>) -> MapSeries<S> {
    let mut acc = MapSeries::identity(w.trunc());
    for letter in w.letters() {
        acc = basic_return_map(letter.axis, &letter.amp, w.trunc()).compose(&acc);
    }
    acc
}

/// Route B for an arbitrary step-coefficient path: the coefficient of
/// `r^{i+1}` is the p-weighted sum of the path's iterated integrals over
/// all compositions of `i`.
pub fn route_b_steps<S: Scalar>(
    a: &StepCoefficients<S>,
    trunc: usize,
) -> Result<MapSeries<S>, Error> {
    let e = crate::algebra::chen_series(a, trunc as u32)?;
    Ok(map_from_signature(&e, trunc))
}

/// Route B for a word (through its step-coefficient embedding).
pub fn route_b<S: Scalar>(w: &Word<S>) -> Result<MapSeries<S>, Error> {
    route_b_steps(&w.to_step_coefficients(), w.trunc())
}

/// Assemble the return map from a signature series by the p-pairing.
pub fn map_from_signature<S: Scalar>(e: &NcSeries<S>, trunc: usize) -> MapSeries<S> {
    let mut coeffs = vec![S::zero(); trunc];
    for (c, v) in e.terms() {
        let i = c.weight();
        if i as usize > trunc {
            continue;
        }
        let p = p_factor(c, i);
        let term = v.scale(&BigRational::from_integer(p));
        coeffs[i as usize - 1] = coeffs[i as usize - 1].add(&term);
    }
    MapSeries::new(coeffs)
}

/// Route C: the q-polynomial expansion
/// `c_i = sum_{s: sum k_m s_m = i} q(i) * prod amp_m^{s_m} / s_m!`.
pub fn route_c<S: Scalar>(w: &Word<S>) -> MapSeries<S> {
    let trunc = w.trunc();
    let axes: Vec<u32> = w.axes();
    // Amplitude powers divided by factorials, per letter.
    let scaled_powers: Vec<Vec<S>> = w
        .letters()
        .iter()
        .map(|l| {
            let max_s = trunc / l.axis as usize;
            let mut pows = Vec::with_capacity(max_s + 1);
            pows.push(S::one());
            let mut p = S::one();
            for s in 1..=max_s {
                p = p.mul(&l.amp);
                pows.push(p.scale(&factorial(s).recip()));
            }
            pows
        })
        .collect();

    let mut coeffs = vec![S::zero(); trunc];
    let mut exponents = vec![0u32; axes.len()];
    // Depth-first over exponent vectors with bounded weighted degree.
    fn rec<S: Scalar>(
        axes: &[u32],
        scaled: &[Vec<S>],
        exponents: &mut Vec<u32>,
        pos: usize,
        weight: usize,
        trunc: usize,
        coeffs: &mut [S],
    ) {
        if pos == axes.len() {
            if weight == 0 {
                return; // the identity term carries no coefficient
            }
            let i = weight as u32;
            let q = q_factor(axes, exponents, i);
            let mut term = S::from_rat(&BigRational::from_integer(q));
            for (m, &s) in exponents.iter().enumerate() {
                term = term.mul(&scaled[m][s as usize]);
            }
            coeffs[weight - 1] = coeffs[weight - 1].add(&term);
            return;
        }
        let k = axes[pos] as usize;
        let mut s = 0u32;
        while weight + k * s as usize <= trunc {
            exponents[pos] = s;
            rec(axes, scaled, exponents, pos + 1, weight + k * s as usize, trunc, coeffs);
            s += 1;
        }
        exponents[pos] = 0;
    }
    rec(&axes, &scaled_powers, &mut exponents, 0, 0, trunc, &mut coeffs);
    MapSeries::new(coeffs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    A,
    B,
    C,
    /// Run every applicable route, assert exact agreement, return the common
    /// value. Route B drops out above the weight cap.
    All,
}

impl std::str::FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Route::A),
            "b" => Ok(Route::B),
            "c" => Ok(Route::C),
            "all" => Ok(Route::All),
            other => Err(Error::Parse(format!("unknown route {other:?}"))),
        }
    }
}

/// The first-return map of a word by the chosen route.
pub fn return_map<S: Scalar>(w: &Word<S>, route: Route) -> Result<MapSeries<S>, Error> {
    match route {
        Route::A => Ok(route_a(w)),
        Route::B => route_b(w),
        Route::C => Ok(route_c(w)),
        Route::All => {
            let a = route_a(w);
            let c = route_c(w);
            if a != c {
                return Err(Error::InternalConsistency(format!(
                    "routes A and C disagree on word with axes {:?}",
                    w.axes()
                )));
            }
            if w.trunc() <= effective_weight_cap() {
                let b = route_b(w)?;
                if a != b {
                    return Err(Error::InternalConsistency(format!(
                        "routes A and B disagree on word with axes {:?}",
                        w.axes()
                    )));
                }
            }
            Ok(a)
        }
    }
}
