//! Rebuilding a rigid pair from its symbol.

use rigid_invariants::represent::{all_reconstructions, lines_of, reconstruct_from_symbol};
use rigid_invariants::rigidity::enumerate_pairs;
use rigid_invariants::symbol::symbol_of_pair;
use rigid_invariants::TheoryLabel;

fn main() {
    let theory = TheoryLabel::d(4);
    let mut seen = Vec::new();
    for pair in enumerate_pairs(theory) {
        let s = symbol_of_pair(&pair).unwrap();
        if seen.contains(&s) {
            continue;
        }
        seen.push(s.clone());
        let lines = lines_of(&s).unwrap();
        let r = reconstruct_from_symbol(&s, theory).unwrap();
        let class = all_reconstructions(&s, theory).unwrap();
        println!("{s}");
        println!("  lines top {:?} bottom {:?}", lines.top, lines.bottom);
        println!(
            "  representative {} ({:?}), class size {}",
            r.pair,
            r.method,
            class.len()
        );
        for l in &r.assignment.lines {
            println!(
                "    {:?} row {} ← {} ones on {:?}, column height {} ({:?})",
                l.owner, l.row, l.length, l.side, l.column_height, l.role
            );
        }
    }
}
