//! The partition μ_r attached to a fingerprint and its symplectic symbol.

use rigid_invariants::catalog::build_catalog;
use rigid_invariants::represent::{mu_from_fingerprint, symbol_of_mu_r};
use rigid_invariants::TheoryLabel;

fn main() {
    let records = build_catalog(TheoryLabel::b(3)).unwrap();
    for r in &records {
        let fp = r.fingerprint();
        let rep = mu_from_fingerprint(&fp);
        println!(
            "{:<24} {:<22} λ′_r = {} λ″_r = {} μ_r = {} symbol {}  λ = μ: {}",
            r.pair_text(),
            fp.to_string(),
            rep.lambda1,
            rep.lambda2,
            rep.mu,
            symbol_of_mu_r(&fp).unwrap(),
            r.flags.lambda_equals_mu
        );
    }
}
