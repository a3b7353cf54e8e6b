//! Acceptance suite: every criterion prints one `PASS`/`FAIL` line.
//!
//! Run with `cargo test -p rectpath --test acceptance -- --nocapture` to see
//! the lines; each criterion is its own test and fails loudly on any
//! violation.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rectpath::algebra::{chen_series, compositions_of_weight, shuffle_pairs, StepCoefficients};
use rectpath::bautin::{bautin_system, quasi_homogeneity_check, random_point, variety_membership};
use rectpath::center::{certificate_bound, reduce_word, theorem2_bound};
use rectpath::oracle::{convergence_check, word_flow};
use rectpath::poly::MPoly;
use rectpath::return_map::{basic_return_map, route_a, route_b, route_c};
use rectpath::sample::{random_trivial_word, random_word, random_word_unit_amps};
use rectpath::scalar::{factorial, GaussianRational, Scalar};

type Q = GaussianRational;

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn verdict(criterion: usize, name: &str, pass: bool) {
    println!(
        "acceptance {criterion} ({name}): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "acceptance criterion {criterion} ({name}) failed");
}

#[test]
fn criterion_1_cross_route_exactness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC1);
    let mut pass = true;
    for trial in 0..200 {
        let w = random_word(&mut rng, 5, 4, 12);
        let a = route_a(&w);
        let b = route_b(&w).expect("weight 12 is under the cap");
        let c = route_c(&w);
        if a != b || a != c {
            eprintln!("trial {trial}: route disagreement on axes {:?}", w.axes());
            pass = false;
        }
    }
    verdict(1, "cross-route exactness, 200 words, N=12", pass);
}

#[test]
fn criterion_2_closed_form_anchors() {
    let mut pass = true;

    // Axis 1: c_i = a^i for i <= 16.
    for a in [Q::ratio(2, 3), Q::ratio(-7, 5), Q::one()] {
        let m = basic_return_map(1, &a, 16);
        let mut pow = Q::one();
        for i in 1..=16 {
            pow = pow.mul(&a);
            if m.coeff(i) != &pow {
                eprintln!("axis-1 anchor failed at i={i}");
                pass = false;
            }
        }
    }

    // Axis 2: c_{2s} = (2s-1)!! b^s / s! for s <= 8 (and odd ones vanish).
    for b in [Q::ratio(1, 2), Q::ratio(-3, 7)] {
        let m = basic_return_map(2, &b, 16);
        let mut b_pow = Q::one();
        for s in 1..=8usize {
            b_pow = b_pow.mul(&b);
            let mut dfac = BigRational::from_integer(1.into());
            let mut f = 1i64;
            while f < 2 * s as i64 {
                dfac *= BigRational::from_integer(f.into());
                f += 2;
            }
            let expect = b_pow.scale(&(dfac / factorial(s)));
            if m.coeff(2 * s) != &expect {
                eprintln!("axis-2 anchor failed at s={s}");
                pass = false;
            }
            if !m.coeff(2 * s - 1).is_zero() {
                eprintln!("axis-2 odd coefficient c_{} nonzero", 2 * s - 1);
                pass = false;
            }
        }
    }

    verdict(2, "closed-form anchors (axis 1 and axis 2)", pass);
}

#[test]
fn criterion_3_trivial_words_vanish() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC3);
    let mut pass = true;
    for trial in 0..100 {
        let w = random_trivial_word(&mut rng, 4, 4, 16);
        if !reduce_word(&w).is_empty() {
            eprintln!("trial {trial}: generator produced a non-trivial word");
            pass = false;
            continue;
        }
        let m = route_a(&w);
        if !m.is_identity() {
            eprintln!(
                "trial {trial}: trivial word with nonzero coefficients, axes {:?}",
                w.axes()
            );
            pass = false;
        }
    }
    verdict(3, "trivial words have all coefficients zero to N=16", pass);
}

#[test]
fn criterion_4_bound_exhibits_witness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC4);
    let mut pass = true;
    let mut accepted = 0usize;
    let mut attempts = 0usize;
    while accepted < 500 && attempts < 20000 {
        attempts += 1;
        let w = random_word(&mut rng, 5, 4, 4);
        let reduced = reduce_word(&w);
        if reduced.is_empty() {
            continue;
        }
        let d = certificate_bound(&reduced.axes());
        if d > 24 {
            continue;
        }
        accepted += 1;
        let degree = d as usize + 1;
        let m = route_a(&reduced.with_trunc(degree));
        let witness = (1..=degree).find(|&i| !m.coeff(i).is_zero());
        if witness.is_none() {
            eprintln!(
                "no nonzero coefficient within d+1={} for reduced axes {:?}",
                degree,
                reduced.axes()
            );
            pass = false;
        }
    }
    if accepted < 500 {
        eprintln!("only {accepted} admissible words generated");
        pass = false;
    }
    verdict(4, "500 reduced words show a witness within d+1", pass);
}

#[test]
fn criterion_5_bautin_system_one_two() {
    let mut pass = true;
    let sys = bautin_system(&[1, 2], 3).expect("small system");
    let vars = sys.variables.clone();
    let a1 = MPoly::var(vars.clone(), 0);
    let a2 = MPoly::var(vars.clone(), 1);
    let c3 = a1
        .mul(&a1)
        .mul(&a1)
        .add(&a1.mul(&a2).scale(&rat(3, 1)));
    if sys.polynomials[0] != a1 {
        eprintln!("c1 != a1");
        pass = false;
    }
    if sys.polynomials[1] != a1.mul(&a1).add(&a2) {
        eprintln!("c2 != a1^2 + a2");
        pass = false;
    }
    if sys.polynomials[2] != c3 {
        eprintln!("c3 != a1^3 + 3 a1 a2");
        pass = false;
    }
    if sys.bound_d != 1 {
        eprintln!("d != 1");
        pass = false;
    }

    // Variety membership vs word reduction on 200 random rational points
    // (the membership call cross-asserts reduction internally and errors on
    // any disagreement). Mix in on-variety and partially-zero points.
    let mut rng = ChaCha8Rng::seed_from_u64(0xC5);
    for trial in 0..200 {
        let mut point = random_point(2, &mut rng);
        match trial % 4 {
            1 => point[0] = Q::zero(),
            2 => point[1] = Q::zero(),
            3 => point = vec![Q::zero(), Q::zero()],
            _ => {}
        }
        match variety_membership(&sys, &point) {
            Ok(member) => {
                let expected = point.iter().all(Scalar::is_zero);
                if member != expected {
                    eprintln!("trial {trial}: membership {member}, expected {expected}");
                    pass = false;
                }
            }
            Err(e) => {
                eprintln!("trial {trial}: {e}");
                pass = false;
            }
        }
    }
    verdict(5, "Bautin system (1,2) and 200-point variety agreement", pass);
}

#[test]
fn criterion_6_quasi_homogeneity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC6);
    let mut pass = true;
    let scales = [rat(2, 1), rat(-3, 1), rat(1, 2)];
    for trial in 0..50 {
        let len = rng.random_range(1..=4usize);
        let axes: Vec<u32> = (0..len).map(|_| rng.random_range(1..=4u32)).collect();
        let count = 8;
        let sys = bautin_system(&axes, count).expect("small symbolic system");
        for z in &scales {
            if !quasi_homogeneity_check(&sys, z) {
                eprintln!("trial {trial}: quasi-homogeneity failed for axes {axes:?}, z={z}");
                pass = false;
            }
        }
    }
    verdict(6, "quasi-homogeneity for 50 systems, z in {2,-3,1/2}", pass);
}

fn random_steps(rng: &mut ChaCha8Rng) -> StepCoefficients<Q> {
    let segments = rng.random_range(1..=3usize);
    // Breakpoints on a grid of 12ths, strictly increasing 0 -> 1.
    let mut cuts: Vec<i64> = Vec::new();
    while cuts.len() < segments - 1 {
        let c = rng.random_range(1..=11i64);
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.sort_unstable();
    let mut breakpoints = vec![rat(0, 1)];
    breakpoints.extend(cuts.iter().map(|&c| rat(c, 12)));
    breakpoints.push(rat(1, 1));
    let values = (0..segments)
        .map(|_| {
            let mut seg = BTreeMap::new();
            for axis in 1..=3u32 {
                if rng.random_bool(0.6) {
                    let p = rng.random_range(-9i64..=9);
                    let q = rng.random_range(1i64..=9);
                    if p != 0 {
                        seg.insert(axis, Q::ratio(p, q));
                    }
                }
            }
            seg
        })
        .collect();
    StepCoefficients::new(breakpoints, values)
}

#[test]
fn criterion_7_shuffle_relations() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC7);
    let mut pass = true;
    for trial in 0..50 {
        let steps = random_steps(&mut rng);
        let e = chen_series(&steps, 6).expect("weight 6 is tiny");
        for wa in 1..=5u32 {
            for alpha in compositions_of_weight(wa).unwrap() {
                for wb in 1..=(6 - wa) {
                    for beta in compositions_of_weight(wb).unwrap() {
                        let lhs = e.coeff(&alpha).mul(&e.coeff(&beta));
                        let mut rhs = Q::zero();
                        for gamma in shuffle_pairs(&alpha, &beta) {
                            rhs = rhs.add(&e.coeff(&gamma));
                        }
                        if lhs != rhs {
                            eprintln!("trial {trial}: shuffle failed at {alpha} x {beta}");
                            pass = false;
                        }
                    }
                }
            }
        }
    }
    verdict(7, "shuffle identity on E-coefficients, weight <= 6", pass);
}

#[test]
fn criterion_8_oracle_order_and_involution() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC8);
    let mut pass = true;
    let radii = [1e-1, 1e-2, 1e-3, 1e-4];
    for trial in 0..20 {
        let w = random_word_unit_amps(&mut rng, 4, 3, 10);
        match convergence_check(&w, 10, &radii) {
            Ok(report) => {
                if !report.passed {
                    eprintln!(
                        "trial {trial}: convergence failed, slope {:?}, axes {:?}",
                        report.slope,
                        w.axes()
                    );
                    pass = false;
                }
                if let Some(slope) = report.slope {
                    if slope < report.required_slope {
                        eprintln!("trial {trial}: slope {slope} below {}", report.required_slope);
                        pass = false;
                    }
                }
            }
            Err(e) => {
                eprintln!("trial {trial}: {e}");
                pass = false;
            }
        }
    }

    // Cancelling words return r0 to within 1e-12 relative error.
    for trial in 0..20 {
        let half = random_word_unit_amps(&mut rng, 3, 3, 8);
        let w = half.concat(&half.reversed_negated());
        let r0 = Complex64::new(1e-2, 0.0);
        match word_flow(&w, r0) {
            Ok(res) => {
                let rel = (res.value - r0).norm() / r0.norm();
                if rel > 1e-12 {
                    eprintln!("trial {trial}: involution error {rel}");
                    pass = false;
                }
            }
            Err(e) => {
                eprintln!("trial {trial}: {e}");
                pass = false;
            }
        }
    }
    verdict(8, "oracle order at N=10 and 1e-12 involution", pass);
}

#[test]
fn criterion_9_bound_values() {
    let mut pass = theorem2_bound(&[2, 3, 2]) == 6;
    for k in 1..=6u32 {
        pass &= theorem2_bound(&[k]) == 1;
    }
    verdict(9, "theorem2_bound(2,3,2)=6 and theorem2_bound(k)=1", pass);
}
