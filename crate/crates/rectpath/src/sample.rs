//! Seeded random inputs for the property runs.
//!
//! Everything here is deterministic in the seed, so reports built on these
//! samples reproduce byte for byte.

use num::rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::scalar::{GaussianRational, Scalar};
use crate::word::Word;

/// A nonzero rational with numerator and denominator bounded by 9.
pub fn small_rational(rng: &mut ChaCha8Rng) -> GaussianRational {
    loop {
        let p = rng.random_range(-9i64..=9);
        if p == 0 {
            continue;
        }
        let q = rng.random_range(1i64..=9);
        return GaussianRational::ratio(p, q);
    }
}

/// A nonzero rational with absolute value at most 1.
pub fn small_rational_unit(rng: &mut ChaCha8Rng) -> GaussianRational {
    loop {
        let q = rng.random_range(1i64..=9);
        let p = rng.random_range(-q..=q);
        if p != 0 {
            return GaussianRational::ratio(p, q);
        }
    }
}

/// Random word: up to `max_len` letters on axes `1..=max_axis` with
/// small nonzero rational amplitudes.
pub fn random_word(
    rng: &mut ChaCha8Rng,
    max_len: usize,
    max_axis: u32,
    trunc: usize,
) -> Word<GaussianRational> {
    let len = rng.random_range(0..=max_len);
    let pairs: Vec<(u32, GaussianRational)> = (0..len)
        .map(|_| (rng.random_range(1..=max_axis), small_rational(rng)))
        .collect();
    Word::from_pairs(trunc, &pairs)
}

/// Like [`random_word`] but nonempty and with unit-bounded amplitudes, for
/// flow-oracle runs that must stay clear of the branch cut.
pub fn random_word_unit_amps(
    rng: &mut ChaCha8Rng,
    max_len: usize,
    max_axis: u32,
    trunc: usize,
) -> Word<GaussianRational> {
    let len = rng.random_range(1..=max_len);
    let pairs: Vec<(u32, GaussianRational)> = (0..len)
        .map(|_| (rng.random_range(1..=max_axis), small_rational_unit(rng)))
        .collect();
    Word::from_pairs(trunc, &pairs)
}

/// Random word that reduces to the empty word. Starts from
/// `w * w^{reverse-negated}` and then interleaves further structure:
/// letters split into same-axis pairs and fresh cancelling pairs drop in at
/// random positions. Every step preserves reducibility to the identity.
pub fn random_trivial_word(
    rng: &mut ChaCha8Rng,
    max_half_len: usize,
    max_axis: u32,
    trunc: usize,
) -> Word<GaussianRational> {
    let half = random_word(rng, max_half_len, max_axis, trunc);
    let mut letters: Vec<(u32, GaussianRational)> = half
        .concat(&half.reversed_negated())
        .letters()
        .iter()
        .map(|l| (l.axis, l.amp.clone()))
        .collect();

    // Split a letter (k, b) into (k, c)(k, b - c).
    let splits = rng.random_range(0..=2usize);
    for _ in 0..splits {
        if letters.is_empty() {
            break;
        }
        let at = rng.random_range(0..letters.len());
        let (axis, amp) = letters[at].clone();
        let c = small_rational(rng);
        letters[at] = (axis, c.clone());
        letters.insert(at + 1, (axis, amp.sub(&c)));
    }

    // Insert an adjacent cancelling pair anywhere.
    let inserts = rng.random_range(0..=2usize);
    for _ in 0..inserts {
        let at = rng.random_range(0..=letters.len());
        let axis = rng.random_range(1..=max_axis);
        let c = small_rational(rng);
        letters.insert(at, (axis, c.neg()));
        letters.insert(at, (axis, c));
    }

    Word::from_pairs(trunc, &letters)
}

/// A random rational scaling factor for homogeneity sweeps, drawn from a
/// fixed small pool of nonzero values.
pub fn random_scale(rng: &mut ChaCha8Rng) -> BigRational {
    let pool: [(i64, i64); 6] = [(2, 1), (-3, 1), (1, 2), (3, 2), (-1, 3), (5, 1)];
    let (p, q) = pool[rng.random_range(0..pool.len())];
    BigRational::new(p.into(), q.into())
}
