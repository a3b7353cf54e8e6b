//! The signature series of a piecewise-constant path two ways: ordered
//! segment exponentials versus direct simplex integration, plus the shuffle
//! identity that makes the series group-like.
//!
//! ```bash
//! cargo run -p rectpath --example chen_series
//! ```

use std::collections::BTreeMap;

use num::rational::BigRational;
use rectpath::{
    chen_series, compositions_of_weight, iterated_integral_direct, shuffle_pairs,
    GaussianRational as Q, Scalar, StepCoefficients,
};

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn main() {
    // Three segments with overlapping axis activity.
    let path = StepCoefficients::new(
        vec![rat(0, 1), rat(1, 4), rat(2, 3), rat(1, 1)],
        vec![
            BTreeMap::from([(1u32, Q::ratio(2, 1))]),
            BTreeMap::from([(1u32, Q::ratio(-1, 2)), (2u32, Q::ratio(3, 5))]),
            BTreeMap::from([(3u32, Q::ratio(1, 3))]),
        ],
    );

    let trunc = 5;
    let e = chen_series(&path, trunc).expect("weight under the cap");
    println!("signature series coefficients up to weight {trunc}:");
    for (comp, value) in e.terms() {
        let direct = iterated_integral_direct(&path, comp);
        assert_eq!(value, &direct, "chen and direct integration disagree");
        println!("  I{comp} = {value}");
    }
    println!("every coefficient matches the direct simplex integral");

    // Shuffle identity: I(alpha) * I(beta) = sum over interleavings.
    let alpha = compositions_of_weight(2).unwrap()[0].clone();
    let beta = compositions_of_weight(3).unwrap()[1].clone();
    let lhs = e.coeff(&alpha).mul(&e.coeff(&beta));
    let mut rhs = Q::zero();
    for gamma in shuffle_pairs(&alpha, &beta) {
        rhs = rhs.add(&e.coeff(&gamma));
    }
    assert_eq!(lhs, rhs);
    println!("shuffle identity at {alpha} x {beta}: {lhs} both ways");
}
