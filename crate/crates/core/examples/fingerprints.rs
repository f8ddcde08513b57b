//! The Sp map, the sign τ and the fingerprint of a few operators.

use rigid_invariants::fingerprint::{fingerprint_trace, Conventions};
use rigid_invariants::{OperatorPair, TheoryLabel};

fn main() {
    let cases = [
        (TheoryLabel::b(6), "[2^2,1^9];[]"),
        (TheoryLabel::b(2), "[1];[1^4]"),
        (TheoryLabel::c(2), "[2,1,1];[]"),
        (TheoryLabel::d(4), "[3,2,2,1];[]"),
    ];
    for (theory, text) in cases {
        let pair = match OperatorPair::parse(theory, text) {
            Ok(p) => p,
            Err(e) => {
                println!("{theory} {text}: {e}");
                continue;
            }
        };
        let t = fingerprint_trace(&pair, Conventions::default()).unwrap();
        println!("{theory} ({pair})");
        println!("  λ = {}  μ = {}  τ = {}", t.lambda, t.mu, t.tau);
        println!("  {}", t.fingerprint);
    }

    // the sorted-merge convention, for comparison
    let pair = OperatorPair::parse(TheoryLabel::b(2), "[1];[1^4]").unwrap();
    let t = fingerprint_trace(&pair, Conventions::merge_by_position()).unwrap();
    println!(
        "merge convention on ({pair}): λ = {}  μ = {}  {}",
        t.lambda, t.mu, t.fingerprint
    );
}
