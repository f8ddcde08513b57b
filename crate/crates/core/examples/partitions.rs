//! Rigid partitions of a theory, their transposes and the structure checks.

use rigid_invariants::rigidity::{check_structure, enumerate_rigid};
use rigid_invariants::{Partition, TheoryLabel};

fn main() {
    let p: Partition = "[2^2,1^9]".parse().unwrap();
    println!("{p} has size {} and transpose {}", p.size(), p.transpose());

    for theory in [TheoryLabel::b(4), TheoryLabel::c(4), TheoryLabel::d(4)] {
        println!("{theory}:");
        for p in enumerate_rigid(theory) {
            let report = check_structure(&p, theory.family);
            let verdict = if report.all_pass() { "ok" } else { "FAILED" };
            println!(
                "  {:<24} rows {:<16} {verdict}",
                p.to_string(),
                report.rows.to_string()
            );
        }
    }
}
