//! Catalog building, the implication check and B/C dual candidates.

use std::io;

use rigid_invariants::catalog::{
    build_catalog, find_dual_candidates, verify_implication, write_jsonl, ClassKey,
};
use rigid_invariants::{Family, TheoryLabel};

fn main() {
    let mut records = Vec::new();
    for family in Family::ALL {
        for rank in 1..=6 {
            records.extend(build_catalog(TheoryLabel::new(family, rank)).unwrap());
        }
    }
    let report = verify_implication(&records);
    for c in &report.corpus {
        println!(
            "{}: {} pairs, {} symbol classes",
            c.theory, c.records, c.symbol_classes
        );
    }
    println!("violations: {}", report.violations.len());

    let b = build_catalog(TheoryLabel::b(4)).unwrap();
    let c = build_catalog(TheoryLabel::c(4)).unwrap();
    let duals = find_dual_candidates(&b, &c, ClassKey::Symbol).unwrap();
    println!(
        "B4/C4: {} matched symbol classes, {} B-only",
        duals.matches.len(),
        duals.unmatched_left.len()
    );

    println!("first B2 catalog lines:");
    write_jsonl(&build_catalog(TheoryLabel::b(2)).unwrap(), io::stdout()).unwrap();
}
