//! Rectangular words: time-ordered sequences of one-axis segments.
//!
//! A [`Letter`] is one segment of a rectangular coefficient path — an axis
//! index `k` and the exact amplitude `a_k * T` accumulated along it. A
//! [`Word`] strings letters in traversal (time) order and carries the
//! truncation degree its return maps are computed to. Words are the group
//! elements of the free product of one-axis flows; reduction to the normal
//! form lives in [`crate::center`].

use std::collections::BTreeMap;

use num::rational::BigRational;

use crate::algebra::StepCoefficients;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Letter<S: Scalar> {
    pub axis: u32,
    pub amp: S,
}

impl<S: Scalar> Letter<S> {
    pub fn new(axis: u32, amp: S) -> Self {
        assert!(axis >= 1, "axes are positive");
        Self { axis, amp }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Word<S: Scalar> {
    trunc: usize,
    letters: Vec<Letter<S>>,
}

impl<S: Scalar> Word<S> {
    /// Builds a word, dropping zero-amplitude letters (they contribute the
    /// identity flow). Letters stay otherwise untouched; merging adjacent
    /// same-axis letters is `reduce_word`'s job.
    pub fn new(trunc: usize, letters: Vec<Letter<S>>) -> Self {
        let letters = letters
            .into_iter()
            .filter(|l| !l.amp.is_zero())
            .collect();
        Self { trunc, letters }
    }

    pub fn empty(trunc: usize) -> Self {
        Self {
            trunc,
            letters: Vec::new(),
        }
    }

    /// Convenience constructor from `(axis, amplitude)` pairs.
    pub fn from_pairs(trunc: usize, pairs: &[(u32, S)]) -> Self {
        Self::new(
            trunc,
            pairs
                .iter()
                .map(|(k, a)| Letter::new(*k, a.clone()))
                .collect(),
        )
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn with_trunc(&self, trunc: usize) -> Self {
        Self {
            trunc,
            letters: self.letters.clone(),
        }
    }

    pub fn letters(&self) -> &[Letter<S>] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn axes(&self) -> Vec<u32> {
        self.letters.iter().map(|l| l.axis).collect()
    }

    /// Concatenation in time: `self` first, then `other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Self::new(self.trunc.max(other.trunc()), letters)
    }

    /// The group inverse: letters in reverse time order with negated
    /// amplitudes.
    pub fn reversed_negated(&self) -> Self {
        Self::new(
            self.trunc,
            self.letters
                .iter()
                .rev()
                .map(|l| Letter::new(l.axis, l.amp.neg()))
                .collect(),
        )
    }

    /// Embeds the word as a piecewise-constant coefficient path: letter `j`
    /// of `m` occupies `[j/m, (j+1)/m)` with its single axis set so the
    /// segment integral equals the letter amplitude.
    pub fn to_step_coefficients(&self) -> StepCoefficients<S> {
        let m = self.letters.len();
        if m == 0 {
            return StepCoefficients::constant(BTreeMap::new());
        }
        let breakpoints = (0..=m)
            .map(|j| BigRational::new((j as i64).into(), (m as i64).into()))
            .collect();
        let scale = BigRational::from_integer((m as i64).into());
        let segments = self
            .letters
            .iter()
            .map(|l| BTreeMap::from([(l.axis, l.amp.scale(&scale))]))
            .collect();
        StepCoefficients::new(breakpoints, segments)
    }
}
