//! Compute the first-return map of a rectangular word by all three routes.
//!
//! ```bash
//! cargo run -p rectpath --example return_map
//! ```

use rectpath::return_map::{route_a, route_b, route_c};
use rectpath::{GaussianRational as Q, Scalar, Word};

fn main() {
    // Two segments: axis 1 with amplitude 1/2, then axis 2 with amplitude 1/3.
    let word = Word::from_pairs(8, &[(1, Q::ratio(1, 2)), (2, Q::ratio(1, 3))]);

    let a = route_a(&word);
    let b = route_b(&word).expect("degree 8 is under the weight cap");
    let c = route_c(&word);
    assert_eq!(a, b);
    assert_eq!(a, c);

    println!("word: axes {:?}, truncation {}", word.axes(), word.trunc());
    println!("P(r) = r + sum c_i r^(i+1), routes A = B = C:");
    for i in 1..=word.trunc() {
        println!("  c_{i} = {}", a.coeff(i));
    }

    // The closed-form composition is visible in the leading coefficients:
    // c_1 = a, c_2 = a^2 + b, c_3 = a^3 + 3ab.
    let (amp_a, amp_b) = (Q::ratio(1, 2), Q::ratio(1, 3));
    let c3 = amp_a
        .mul(&amp_a)
        .mul(&amp_a)
        .add(&amp_a.mul(&amp_b).scale(&num::rational::BigRational::from_integer(3.into())));
    assert_eq!(a.coeff(3), &c3);
    println!("closed-form check: c_3 = a^3 + 3ab = {c3}");
}
