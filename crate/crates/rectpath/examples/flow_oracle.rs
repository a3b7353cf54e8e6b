//! Float ground truth: flow a word through its exact per-letter solutions
//! and compare with the truncated series at shrinking radii.
//!
//! ```bash
//! cargo run -p rectpath --example flow_oracle
//! ```

use num::complex::Complex64;
use rectpath::oracle::convergence_check;
use rectpath::return_map::{return_map, Route};
use rectpath::{word_flow, GaussianRational as Q, Word};

fn main() {
    let word = Word::from_pairs(10, &[(1, Q::ratio(1, 2)), (2, Q::ratio(-1, 3))]);

    // One flow, one series evaluation.
    let r0 = Complex64::new(0.05, 0.0);
    let flow = word_flow(&word, r0).expect("well inside the branch-safe disc");
    let series = return_map(&word, Route::All).expect("routes agree");
    let predicted = series.eval(r0);
    println!("word axes {:?}", word.axes());
    println!("flow({})      = {}", r0.re, flow.value.re);
    println!("series({})    = {}", r0.re, predicted.re);
    println!("difference    = {:.3e}", (flow.value - predicted).norm());

    // Convergence order across radii.
    let report = convergence_check(&word, 10, &[1e-1, 1e-2, 1e-3, 1e-4]).unwrap();
    println!("\nconvergence check at N = {}:", report.trunc);
    for p in &report.points {
        println!(
            "  r = {:<7} residual = {:>10.3e}  noise floor = {:>9.3e}  {}",
            p.radius,
            p.residual,
            p.noise_floor,
            if p.informative { "informative" } else { "at rounding level" }
        );
    }
    match report.slope {
        Some(slope) => println!("fitted slope {slope:.2} (required {})", report.required_slope),
        None => println!("series matches the flow at machine precision"),
    }
    println!("passed: {}", report.passed);

    // A cancelling word flows back to its start exactly (up to rounding).
    let cancelling = word.concat(&word.reversed_negated());
    let back = word_flow(&cancelling, r0).unwrap();
    println!(
        "\ninvolution residual for w * w^-1: {:.3e}",
        (back.value - r0).norm() / r0.norm()
    );
}
