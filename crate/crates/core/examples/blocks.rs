//! Block decomposition of the merged row picture and the block-local μ.

use rigid_invariants::blocks::{
    decompose_blocks, fingerprint_of_representative, merge_with_provenance, mu_via_blocks,
};
use rigid_invariants::rigidity::enumerate_pairs;
use rigid_invariants::TheoryLabel;

fn main() {
    for pair in enumerate_pairs(TheoryLabel::b(4)) {
        let merged = merge_with_provenance(&pair);
        let blocks = decompose_blocks(&merged);
        let mu = mu_via_blocks(&merged, &blocks).unwrap();
        let names: Vec<String> = blocks
            .iter()
            .map(|b| format!("{:?}:{}[{}..{}]", b.kind, b.operator, b.start, b.end))
            .collect();
        let fp = fingerprint_of_representative(&pair).unwrap();
        println!("{:<28} rows {:?}", pair.to_string(), merged.row_lengths());
        println!("    {}  μ = {mu}  {}", names.join(" "), fp.fingerprint);
    }
}
