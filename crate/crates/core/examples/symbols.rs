//! Symbols of partitions and pairs, symbol addition and the row-by-row
//! construction.

use rigid_invariants::rigidity::enumerate_rigid;
use rigid_invariants::symbol::{symbol_of, symbol_of_pair};
use rigid_invariants::table::{constructive_symbol, contributions, cross_validate};
use rigid_invariants::{Family, OperatorPair, Partition, Symbol, TheoryLabel};

fn main() {
    let ones: Partition = "[1^5]".parse().unwrap();
    println!(
        "symbol of {ones} in B: {}",
        symbol_of(&ones, Family::B).unwrap()
    );
    for c in contributions(&ones, Family::B) {
        println!(
            "  column {} of height {}: {} ones on the {:?} row",
            c.row, c.height, c.length, c.side
        );
    }
    println!(
        "constructive: {}",
        constructive_symbol(&ones, Family::B).unwrap()
    );

    let a = Symbol::new(vec![0, 0, 0, 0, 0, 1, 1], vec![1, 1, 1, 1, 1, 2]);
    let b = Symbol::new(vec![0, 0, 0, 1, 1, 1], vec![1, 1, 1, 1, 1]);
    println!("{a}\n + {b}\n = {}", a.add(&b));

    let pair = OperatorPair::parse(TheoryLabel::b(2), "[1];[1^4]").unwrap();
    println!(
        "symbol of ({pair}) in B2: {}",
        symbol_of_pair(&pair).unwrap()
    );

    let corpus: Vec<(Family, Partition)> = Family::ALL
        .iter()
        .flat_map(|&f| {
            (1..=6)
                .flat_map(move |r| enumerate_rigid(TheoryLabel::new(f, r)))
                .map(move |p| (f, p))
        })
        .collect();
    let report = cross_validate(corpus.iter().map(|(f, p)| (*f, p))).unwrap();
    println!(
        "row construction agrees with the definition on {}/{} rigid partitions",
        report.agreed, report.checked
    );
}
