//! Decide and certify centers: free-product word reduction cross-checked
//! against the vanishing of the determining return-map coefficients.
//!
//! ```bash
//! cargo run -p rectpath --example center_decision
//! ```

use rectpath::json::CenterVerdictJson;
use rectpath::{certify_center, GaussianRational as Q, Scalar, Word};

fn show(label: &str, word: &Word<Q>) {
    let verdict = certify_center(word).expect("certificate within caps");
    println!("{label}: axes {:?}", word.axes());
    println!(
        "  center: {} (reduced length {}, reported d = {}, {} coefficients checked)",
        verdict.is_center,
        verdict.reduced_word.len(),
        verdict.bound_d,
        verdict.coefficients_checked.len()
    );
    if let Some((i, c)) = verdict
        .coefficients_checked
        .iter()
        .find(|(_, c)| !c.is_zero())
    {
        println!("  witness: c_{i} = {c}");
    }
    let json = serde_json::to_string(&CenterVerdictJson::encode(&verdict)).unwrap();
    println!("  json: {json}");
}

fn main() {
    let a = Q::ratio(1, 2);
    let b = Q::ratio(2, 3);

    // A nested cancellation: (1,a)(2,b)(2,-b)(1,-a) collapses to nothing.
    let cancelling = Word::from_pairs(
        8,
        &[
            (1, a.clone()),
            (2, b.clone()),
            (2, b.neg()),
            (1, a.neg()),
        ],
    );
    show("nested cancellation", &cancelling);

    // Same letters, different order: no cancellation survives reduction.
    let tangled = Word::from_pairs(
        8,
        &[
            (1, a.clone()),
            (2, b.clone()),
            (1, a.neg()),
            (2, b.neg()),
        ],
    );
    show("tangled commutator", &tangled);

    // A single high-axis letter: the first witness appears only at c_3,
    // which is why the certificate looks past the reported bound d.
    let lone = Word::from_pairs(8, &[(3, Q::ratio(2, 7))]);
    show("single axis-3 letter", &lone);
}
