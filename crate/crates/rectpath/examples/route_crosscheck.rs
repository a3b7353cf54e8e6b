//! Seeded randomized sweep: route agreement and double-method center
//! certificates over many random words, the library's own consistency net.
//!
//! ```bash
//! cargo run -p rectpath --example route_crosscheck
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rectpath::center::certificate_bound;
use rectpath::return_map::{route_a, route_b, route_c};
use rectpath::sample::{random_trivial_word, random_word};
use rectpath::{certify_center, reduce_word};

fn main() {
    let seed = 7u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let trials = 60;
    let mut centers = 0usize;
    let mut witnesses = 0usize;
    for _ in 0..trials {
        let word = random_word(&mut rng, 5, 4, 10);

        // Three independent routes, one exact answer.
        let a = route_a(&word);
        assert_eq!(a, route_b(&word).unwrap());
        assert_eq!(a, route_c(&word));

        // Certificate: reduction and coefficients must agree.
        if certificate_bound(&reduce_word(&word).axes()) <= 24 {
            let verdict = certify_center(&word).unwrap();
            if verdict.is_center {
                centers += 1;
            } else {
                witnesses += 1;
            }
        }
    }
    println!("seed {seed}: {trials} random words");
    println!("  routes A, B, C agreed exactly on every word");
    println!("  certified centers: {centers}, non-centers with witness: {witnesses}");

    // Words built to cancel must certify as centers.
    let mut verified = 0usize;
    for _ in 0..20 {
        let word = random_trivial_word(&mut rng, 4, 3, 12);
        let verdict = certify_center(&word).unwrap();
        assert!(verdict.is_center);
        verified += 1;
    }
    println!("  {verified}/20 interleaved cancelling words certified as centers");
}
