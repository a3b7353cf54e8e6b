//! The composition group of truncated map series: products, inverses and
//! fractional powers with exact rational coefficients.
//!
//! ```bash
//! cargo run -p rectpath --example series_group
//! ```

use rectpath::series::binom_pow;
use rectpath::{GaussianRational as Q, MapSeries, PowerSeries, Scalar};

fn main() {
    // f = r + a r^2 and its compositional inverse.
    let a = Q::ratio(1, 2);
    let f = MapSeries::new(vec![a.clone(), Q::zero(), Q::zero(), Q::zero()]);
    let g = f.inverse();
    println!("f(r) = r + {a} r^2");
    print!("f^(-1)(r) = r");
    for i in 1..=g.trunc() {
        print!(" + ({}) r^{}", g.coeff(i), i + 1);
    }
    println!();
    assert!(f.compose(&g).is_identity());
    assert!(g.compose(&f).is_identity());
    println!("f o f^(-1) = f^(-1) o f = r (mod r^{})", g.trunc() + 2);

    // Fractional powers: (1 - 2 b r^2)^(-1/2) with exact coefficients.
    let b = Q::ratio(1, 3);
    // u = -2 b r^2
    let minus_two_b = b.scale(&num::rational::BigRational::from_integer((-2).into()));
    let u = PowerSeries::new(
        (0..=6)
            .map(|k| if k == 2 { minus_two_b.clone() } else { Q::zero() })
            .collect(),
    );
    let h = binom_pow(&u, -1, 2);
    println!("\n(1 - 2*{b} r^2)^(-1/2):");
    for k in 0..=6 {
        if !h.coeff(k).is_zero() {
            println!("  r^{k}: {}", h.coeff(k));
        }
    }
    // exponent addition law
    let lhs = binom_pow(&u, 1, 2).mul(&binom_pow(&u, -1, 2));
    assert_eq!(lhs, PowerSeries::one(6));
    println!("(1+u)^(1/2) * (1+u)^(-1/2) = 1 exactly");
}
