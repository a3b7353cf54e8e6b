//! Symbolic center conditions for a fixed axis pattern.
//!
//! Fixing the pattern `(k_1, ..., k_l)` and treating the `l` letter
//! amplitudes as independent polynomial variables turns the return-map
//! coefficients into polynomials `c_i(a_1, ..., a_l)`. Their common zero
//! set — cut out by `c_1..c_{d+1}` alone — is the center variety, a finite
//! union of linear subspaces that word reduction describes exactly.
//!
//! Variables are indexed by letter position (`a{axis}_{position}`), so a
//! repeated axis gets independent coordinates.

use std::sync::Arc;

use num::rational::BigRational;
use num::traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::center::{certificate_bound, is_center, theorem2_bound};
use crate::error::Error;
use crate::poly::MPoly;
use crate::return_map::route_a;
use crate::scalar::{GaussianRational, Scalar};
use crate::word::Word;

#[derive(Clone, Debug)]
pub struct BautinSystem {
    pub axes: Vec<u32>,
    pub variables: Arc<Vec<String>>,
    /// `c_1` through `c_M`, graded-lex canonical form.
    pub polynomials: Vec<MPoly>,
    pub bound_d: u64,
}

impl BautinSystem {
    pub fn count(&self) -> usize {
        self.polynomials.len()
    }

    /// The concrete word at a point of the amplitude space.
    pub fn word_at(&self, point: &[GaussianRational]) -> Word<GaussianRational> {
        assert_eq!(point.len(), self.axes.len(), "point dimension mismatch");
        let pairs: Vec<(u32, GaussianRational)> = self
            .axes
            .iter()
            .zip(point)
            .map(|(&k, a)| (k, a.clone()))
            .collect();
        Word::from_pairs(self.count().max(2), &pairs)
    }
}

/// Variable names, one per letter position: `a{axis}_{position}`.
pub fn position_variables(axes: &[u32]) -> Arc<Vec<String>> {
    Arc::new(
        axes.iter()
            .enumerate()
            .map(|(pos, k)| format!("a{}_{}", k, pos + 1))
            .collect(),
    )
}

/// Generate the polynomials `c_1..c_M` for the axis pattern by running the
/// return map with symbolic amplitudes (route A; the cross-route tests
/// validate the result against route B/C independently).
pub fn bautin_system(axes: &[u32], count: usize) -> Result<BautinSystem, Error> {
    assert!(!axes.is_empty(), "the pattern needs at least one letter");
    assert!(count >= 1, "at least one coefficient");
    if count > 64 {
        return Err(Error::Resource(format!(
            "coefficient count {count} exceeds the symbolic cap 64"
        )));
    }
    // Symbolic runs beyond DEFAULT_POLY_TRUNCATION are allowed but get
    // expensive quickly; the cap above is the hard stop.
    let variables = position_variables(axes);
    let letters: Vec<(u32, MPoly)> = axes
        .iter()
        .enumerate()
        .map(|(pos, &k)| (k, MPoly::var(variables.clone(), pos)))
        .collect();
    let word = Word::from_pairs(count, &letters);
    let map = route_a(&word);
    // Identically-zero coefficients come back as bare constants; pin them to
    // the system's variable list so evaluation sees a uniform dimension.
    let anchor = MPoly::zero_with_vars(variables.clone());
    let polynomials = (1..=count).map(|i| map.coeff(i).add(&anchor)).collect();
    Ok(BautinSystem {
        axes: axes.to_vec(),
        variables,
        polynomials,
        bound_d: theorem2_bound(axes),
    })
}

/// Check the quasi-homogeneity identity `c_i(z^{k_1} a_1, ...) = z^i c_i(...)`
/// as an exact polynomial identity, for every stored coefficient.
pub fn quasi_homogeneity_check(sys: &BautinSystem, z: &BigRational) -> bool {
    assert!(!z.is_zero(), "the scaling factor must be nonzero");
    let factors: Vec<BigRational> = sys
        .axes
        .iter()
        .map(|&k| {
            let mut f = BigRational::from_integer(1.into());
            for _ in 0..k {
                f *= z;
            }
            f
        })
        .collect();
    let mut z_pow = BigRational::from_integer(1.into());
    for c in &sys.polynomials {
        z_pow *= z; // z^i for c_i
        let lhs = c.scale_vars(&factors);
        let rhs = c.mul(&MPoly::from_rat(&z_pow));
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Evaluate the determining coefficients at the point; membership in the
/// center variety is their simultaneous vanishing. The check runs through
/// the certificate bound of the pattern (or every stored polynomial if the
/// system holds fewer). Cross-asserted against word reduction of the
/// concrete word at the point.
pub fn variety_membership(
    sys: &BautinSystem,
    point: &[GaussianRational],
) -> Result<bool, Error> {
    let needed = (certificate_bound(&sys.axes) as usize + 1).min(sys.count());
    assert!(
        sys.count() > sys.bound_d as usize,
        "system stores fewer than d+1 coefficients"
    );
    let vanishes = sys.polynomials[..needed]
        .iter()
        .all(|c| c.eval(point).is_zero());
    let reduced_empty = is_center(&sys.word_at(point)).is_center;
    if vanishes != reduced_empty {
        return Err(Error::InternalConsistency(format!(
            "variety membership {vanishes} disagrees with word reduction {reduced_empty} \
             at a point of the pattern {:?}",
            sys.axes
        )));
    }
    Ok(vanishes)
}

/// A linear stratum of the center variety: a non-crossing partition of the
/// letter positions into same-axis blocks, each block constrained to sum to
/// zero. Singleton blocks force their amplitude to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub blocks: Vec<Vec<usize>>,
}

/// Enumerate all cancellation schemes of the pattern: the ways the word can
/// reduce to the empty word. Position `i` always cancels inside a same-axis
/// block whose gaps cancel recursively, which is exactly the non-crossing
/// structure of free-product reduction.
pub fn cancellation_strata(axes: &[u32]) -> Vec<Stratum> {
    type Block = Vec<usize>;
    type Scheme = Vec<Block>;

    // Schemes for the half-open position interval lo..hi; the empty
    // interval cancels trivially (one empty scheme).
    fn interval_schemes(axes: &[u32], lo: usize, hi: usize) -> Vec<Scheme> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        // Position `lo` belongs to a same-axis block lo = p_1 < ... < p_g;
        // the gaps between members and the tail after the last member must
        // each cancel on their own.
        fn extend_block(
            axes: &[u32],
            block: &mut Block,
            gaps: &mut Vec<Vec<Scheme>>,
            hi: usize,
            out: &mut Vec<Scheme>,
        ) {
            let last = *block.last().unwrap();
            for tail in interval_schemes(axes, last + 1, hi) {
                let mut combos: Vec<Scheme> = vec![Vec::new()];
                for gap_options in gaps.iter() {
                    let mut next = Vec::new();
                    for combo in &combos {
                        for option in gap_options {
                            let mut c = combo.clone();
                            c.extend(option.iter().cloned());
                            next.push(c);
                        }
                    }
                    combos = next;
                }
                for mut combo in combos {
                    combo.push(block.clone());
                    combo.extend(tail.iter().cloned());
                    out.push(combo);
                }
            }
            // Or grow the block with a later same-axis position.
            for next in (last + 1)..hi {
                if axes[next] == axes[block[0]] {
                    block.push(next);
                    gaps.push(interval_schemes(axes, last + 1, next));
                    extend_block(axes, block, gaps, hi, out);
                    gaps.pop();
                    block.pop();
                }
            }
        }
        let mut out = Vec::new();
        let mut block = vec![lo];
        let mut gaps: Vec<Vec<Scheme>> = Vec::new();
        extend_block(axes, &mut block, &mut gaps, hi, &mut out);
        out
    }

    let mut seen = std::collections::BTreeSet::new();
    let mut strata = Vec::new();
    for mut blocks in interval_schemes(axes, 0, axes.len()) {
        blocks.sort();
        if seen.insert(blocks.clone()) {
            strata.push(Stratum { blocks });
        }
    }
    strata
}

/// Draw a random rational point on a stratum: each block gets free values
/// on all but its last position, which absorbs the negated sum.
pub fn sample_stratum(stratum: &Stratum, dim: usize, rng: &mut ChaCha8Rng) -> Vec<GaussianRational> {
    let mut point = vec![GaussianRational::zero(); dim];
    for block in &stratum.blocks {
        let mut sum = GaussianRational::zero();
        for (idx, &pos) in block.iter().enumerate() {
            if idx + 1 == block.len() {
                point[pos] = sum.neg();
            } else {
                let v = random_nonzero_rational(rng);
                sum = sum.add(&v);
                point[pos] = v;
            }
        }
    }
    point
}

fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> GaussianRational {
    loop {
        let p = rng.random_range(-9i64..=9);
        let q = rng.random_range(1i64..=9);
        if p != 0 {
            return GaussianRational::ratio(p, q);
        }
    }
}

/// One line of the ideal probe report.
#[derive(Clone, Debug)]
pub struct ProbeLine {
    pub index: usize,
    pub vanishes_on_all_samples: bool,
    pub samples: usize,
}

/// Heuristic probe of the generation question: do the coefficients past
/// `c_{d+1}` vanish identically on the variety `{c_1 = ... = c_{d+1} = 0}`?
/// Evaluates `c_{d+1+k}` for `k = 1..=extra` on random points of every
/// cancellation stratum. Evidence only — says nothing about ideal
/// membership.
#[derive(Clone, Debug)]
pub struct IdealProbeReport {
    pub strata: usize,
    pub samples_per_stratum: usize,
    pub seed: u64,
    pub lines: Vec<ProbeLine>,
    pub note: &'static str,
}

pub fn ideal_probe(
    sys: &BautinSystem,
    extra: usize,
    samples_per_stratum: usize,
    seed: u64,
) -> Result<IdealProbeReport, Error> {
    use rand::SeedableRng;
    let needed = sys.bound_d as usize + 1 + extra;
    if sys.count() < needed {
        return Err(Error::Resource(format!(
            "probe needs {needed} coefficients but the system stores {}",
            sys.count()
        )));
    }
    let strata = cancellation_strata(&sys.axes);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = sys.axes.len();
    let mut lines = Vec::with_capacity(extra);
    for k in 1..=extra {
        // polynomials[i] holds c_{i+1}, so c_{d+1+k} sits at index d+k.
        let index = sys.bound_d as usize + k;
        let poly = &sys.polynomials[index];
        let mut all_vanish = true;
        let mut samples = 0usize;
        for stratum in &strata {
            for _ in 0..samples_per_stratum {
                let point = sample_stratum(stratum, dim, &mut rng);
                // Sampled points lie on the variety by construction; assert
                // the membership machinery agrees.
                if !variety_membership(sys, &point)? {
                    return Err(Error::InternalConsistency(
                        "stratum sample off the variety".into(),
                    ));
                }
                samples += 1;
                if !poly.eval(&point).is_zero() {
                    all_vanish = false;
                }
            }
        }
        lines.push(ProbeLine {
            index: index + 1,
            vanishes_on_all_samples: all_vanish,
            samples,
        });
    }
    Ok(IdealProbeReport {
        strata: strata.len(),
        samples_per_stratum,
        seed,
        lines,
        note: "heuristic point sampling; no claim about ideal membership or integral closure",
    })
}

/// Substitute concrete amplitudes into every polynomial of the system.
pub fn specialize(sys: &BautinSystem, point: &[GaussianRational]) -> Vec<GaussianRational> {
    sys.polynomials.iter().map(|c| c.eval(point)).collect()
}

/// Random rational point generator shared by the sampling-based checks.
pub fn random_point(dim: usize, rng: &mut ChaCha8Rng) -> Vec<GaussianRational> {
    (0..dim)
        .map(|_| {
            let p = rng.random_range(-9i64..=9);
            let q = rng.random_range(1i64..=9);
            GaussianRational::ratio(p, q)
        })
        .collect()
}

/// A catalogue entry used by randomized pattern sweeps.
pub fn random_pattern(max_len: usize, max_axis: u32, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let len = rng.random_range(1..=max_len);
    (0..len).map(|_| rng.random_range(1..=max_axis)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use std::collections::BTreeSet;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn system_one_two() {
        // c1 = a1, c2 = a1^2 + a2, c3 = a1^3 + 3 a1 a2, d = 1
        let sys = bautin_system(&[1, 2], 3).unwrap();
        assert_eq!(sys.bound_d, 1);
        let vars = sys.variables.clone();
        let a1 = MPoly::var(vars.clone(), 0);
        let a2 = MPoly::var(vars.clone(), 1);
        assert_eq!(sys.polynomials[0], a1);
        assert_eq!(sys.polynomials[1], a1.mul(&a1).add(&a2));
        let c3 = a1.mul(&a1).mul(&a1).add(&a1.mul(&a2).scale(&rat(3, 1)));
        assert_eq!(sys.polynomials[2], c3);
        assert_eq!(*sys.variables, vec!["a1_1".to_string(), "a2_2".to_string()]);
    }

    #[test]
    fn system_single_letter() {
        // pattern (k): c_{ks} are the only nonzero coefficients, powers of a1
        let sys = bautin_system(&[3], 7).unwrap();
        assert_eq!(sys.bound_d, 1);
        let a1 = MPoly::var(sys.variables.clone(), 0);
        assert_eq!(sys.polynomials[2], a1); // c_3 = a1
        assert!(sys.polynomials[0].is_zero());
        assert!(sys.polynomials[1].is_zero());
        assert!(sys.polynomials[3].is_zero());
        // c_6 = 2 a1^2 (prod (3(j-1)+1)/s! = 1*4/2)
        assert_eq!(sys.polynomials[5], a1.mul(&a1).scale(&rat(2, 1)));
    }

    #[test]
    fn system_repeated_axis_merges() {
        // pattern (1,1): c1 = a1+a2, c2 = (a1+a2)^2
        let sys = bautin_system(&[1, 1], 2).unwrap();
        let a1 = MPoly::var(sys.variables.clone(), 0);
        let a2 = MPoly::var(sys.variables.clone(), 1);
        let s = a1.add(&a2);
        assert_eq!(sys.polynomials[0], s);
        assert_eq!(sys.polynomials[1], s.mul(&s));
    }

    #[test]
    fn quasi_homogeneity_examples() {
        let sys = bautin_system(&[1, 2], 3).unwrap();
        assert!(quasi_homogeneity_check(&sys, &rat(1, 1)));
        assert!(quasi_homogeneity_check(&sys, &rat(2, 1)));
        assert!(quasi_homogeneity_check(&sys, &rat(-3, 1)));
        assert!(quasi_homogeneity_check(&sys, &rat(1, 2)));

        // negative control: corrupt one polynomial
        let mut bad = sys.clone();
        bad.polynomials[1] = bad.polynomials[1].add(&MPoly::var(bad.variables.clone(), 0));
        assert!(!quasi_homogeneity_check(&bad, &rat(2, 1)));
    }

    #[test]
    fn variety_examples() {
        // (1,1): the hyperplane a1 + a2 = 0
        let sys = bautin_system(&[1, 1], 2).unwrap();
        let a = GaussianRational::ratio(3, 7);
        assert!(variety_membership(&sys, &[a.clone(), a.neg()]).unwrap());
        assert!(!variety_membership(&sys, &[a.clone(), a.clone()]).unwrap());

        // (1,2): only the origin
        let sys = bautin_system(&[1, 2], 2).unwrap();
        let zero = GaussianRational::zero();
        assert!(variety_membership(&sys, &[zero.clone(), zero.clone()]).unwrap());
        assert!(!variety_membership(&sys, &[zero.clone(), GaussianRational::ratio(1, 2)]).unwrap());
        // a2 = -a1^2 kills c2 but not c1
        let a1 = GaussianRational::ratio(2, 3);
        let a2 = a1.mul(&a1).neg();
        assert!(!variety_membership(&sys, &[a1, a2]).unwrap());

        // (2,3): distinct axes, nonzero point is never a center
        let sys = bautin_system(&[2, 3], 7).unwrap();
        assert_eq!(sys.bound_d, 2);
        assert!(!variety_membership(
            &sys,
            &[GaussianRational::ratio(1, 2), GaussianRational::ratio(1, 3)]
        )
        .unwrap());
    }

    #[test]
    fn strata_enumeration() {
        // (1,1): the single block {0,1}, plus two singleton blocks
        let strata = cancellation_strata(&[1, 1]);
        let blocks: BTreeSet<_> = strata.iter().map(|s| s.blocks.clone()).collect();
        assert!(blocks.contains(&vec![vec![0, 1]]));
        assert!(blocks.contains(&vec![vec![0], vec![1]]));
        assert_eq!(strata.len(), 2);

        // (1,2,1): either everything zero, or a2 = 0 with a1+a3 = 0
        let strata = cancellation_strata(&[1, 2, 1]);
        let blocks: BTreeSet<_> = strata.iter().map(|s| s.blocks.clone()).collect();
        assert!(blocks.contains(&vec![vec![0, 2], vec![1]]));
        assert!(blocks.contains(&vec![vec![0], vec![1], vec![2]]));
        assert_eq!(strata.len(), 2);

        // (1,2): singletons only
        let strata = cancellation_strata(&[1, 2]);
        assert_eq!(strata.len(), 1);
        assert_eq!(strata[0].blocks, vec![vec![0], vec![1]]);
    }

    #[test]
    fn ideal_probe_reports_vanishing() {
        let sys = bautin_system(&[1, 2], 4).unwrap();
        let report = ideal_probe(&sys, 2, 5, 42).unwrap();
        assert_eq!(report.lines.len(), 2);
        assert!(report.lines.iter().all(|l| l.vanishes_on_all_samples));
        assert_eq!(report.lines[0].index, 3);
        assert_eq!(report.lines[1].index, 4);

        let sys = bautin_system(&[1, 1], 4).unwrap();
        let report = ideal_probe(&sys, 2, 5, 42).unwrap();
        assert!(report.lines.iter().all(|l| l.vanishes_on_all_samples));
    }

    #[test]
    fn specialization_matches_concrete_word() {
        let sys = bautin_system(&[1, 2, 1], 6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let point = random_point(3, &mut rng);
            let values = specialize(&sys, &point);
            let word = sys.word_at(&point).with_trunc(6);
            let map = route_a(&word);
            for (i, v) in values.iter().enumerate() {
                assert_eq!(v, map.coeff(i + 1), "c_{}", i + 1);
            }
        }
    }
}
