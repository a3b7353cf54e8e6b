//! Symbolic center conditions for an axis pattern: generate the Bautin
//! polynomials, verify quasi-homogeneity, test variety membership at
//! points, and probe the coefficients past the determining set.
//!
//! ```bash
//! cargo run -p rectpath --example bautin_polynomials
//! ```

use num::rational::BigRational;
use rectpath::bautin::ideal_probe;
use rectpath::{
    bautin_system, quasi_homogeneity_check, variety_membership, GaussianRational as Q, Scalar,
};

fn main() {
    // Pattern (1,2): letters on axis 1 then axis 2 with symbolic amplitudes.
    let sys = bautin_system(&[1, 2], 5).expect("small system");
    println!("pattern {:?}, reported d = {}", sys.axes, sys.bound_d);
    println!("variables {:?}", sys.variables);
    for (i, c) in sys.polynomials.iter().enumerate() {
        println!("  c_{} = {}", i + 1, c);
    }

    // Quasi-homogeneity: c_i(z^k1 a1, z^k2 a2) = z^i c_i, exactly.
    for z in [
        BigRational::from_integer(2.into()),
        BigRational::from_integer((-3).into()),
        BigRational::new(1.into(), 2.into()),
    ] {
        assert!(quasi_homogeneity_check(&sys, &z));
        println!("quasi-homogeneity holds for z = {z}");
    }

    // Variety membership at points, cross-asserted against word reduction.
    let origin = vec![Q::zero(), Q::zero()];
    let off = vec![Q::ratio(1, 3), Q::ratio(-1, 9)];
    println!(
        "origin in variety: {}",
        variety_membership(&sys, &origin).unwrap()
    );
    println!(
        "(1/3, -1/9) in variety: {}",
        variety_membership(&sys, &off).unwrap()
    );

    // Pattern (1,1): the variety is the hyperplane a1 + a2 = 0.
    let sys11 = bautin_system(&[1, 1], 4).expect("small system");
    let t = Q::ratio(5, 8);
    println!(
        "(t, -t) on the (1,1) variety: {}",
        variety_membership(&sys11, &[t.clone(), t.neg()]).unwrap()
    );

    // Heuristic probe: do the coefficients past the determining set vanish
    // on the variety? (Evidence only; nothing about ideal membership.)
    let probe = ideal_probe(&sys11, 2, 25, 7).unwrap();
    println!(
        "probe on (1,1): {} strata, {} samples each, seed {}",
        probe.strata, probe.samples_per_stratum, probe.seed
    );
    for line in &probe.lines {
        println!(
            "  c_{} vanishes on all samples: {} ({} samples)",
            line.index, line.vanishes_on_all_samples, line.samples
        );
    }
    println!("note: {}", probe.note);
}
