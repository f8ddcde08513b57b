//! Validity and rigidity predicates, structural checks on the transpose, and
//! exhaustive generators for rigid partitions and rigid operator pairs.

use crate::partition::Partition;
use crate::theory::{FactorKind, Family, OperatorPair, TheoryLabel};

/// How the "no gaps" rule treats the end of the partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GapRule {
    /// `λ_{l+1} = 0`, so a nonempty rigid partition ends in 1.
    #[default]
    TrailingZero,
    /// Only consecutive stored parts are compared.
    InteriorOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RigidityRules {
    pub gap: GapRule,
}

/// B/D: every even part has even multiplicity. C: every odd part has even multiplicity.
pub fn satisfies_multiplicity_rule(p: &Partition, family: Family) -> bool {
    p.multiplicities()
        .iter()
        .all(|(&v, &m)| v % 2 != family.restricted_parity() || m % 2 == 0)
}

pub fn is_valid(p: &Partition, theory: TheoryLabel) -> bool {
    p.size() == theory.total_boxes() && satisfies_multiplicity_rule(p, theory.family)
}

pub fn is_valid_kind(p: &Partition, kind: FactorKind) -> bool {
    kind.admits_size(p.size()) && satisfies_multiplicity_rule(p, kind.family())
}

fn has_no_gaps(p: &Partition, gap: GapRule) -> bool {
    let parts = p.parts();
    let interior = parts.windows(2).all(|w| w[0] - w[1] <= 1);
    match gap {
        GapRule::InteriorOnly => interior,
        GapRule::TrailingZero => interior && parts.last().is_none_or(|&l| l <= 1),
    }
}

/// The multiplicity-rule, no-gaps and "no forbidden part exactly twice"
/// conditions, independent of the box count.
fn rigid_shape(p: &Partition, family: Family, rules: RigidityRules) -> bool {
    // B/D forbid odd parts appearing exactly twice, C forbids even ones
    let forbidden = 1 - family.restricted_parity();
    satisfies_multiplicity_rule(p, family)
        && has_no_gaps(p, rules.gap)
        && p.multiplicities()
            .iter()
            .all(|(&v, &m)| v % 2 != forbidden || m != 2)
}

pub fn is_rigid(p: &Partition, theory: TheoryLabel) -> bool {
    is_rigid_with(p, theory, RigidityRules::default())
}

pub fn is_rigid_with(p: &Partition, theory: TheoryLabel, rules: RigidityRules) -> bool {
    p.size() == theory.total_boxes() && rigid_shape(p, theory.family, rules)
}

/// Rigidity of a pair factor. The empty partition is rigid for even kinds.
pub fn is_rigid_kind(p: &Partition, kind: FactorKind, rules: RigidityRules) -> bool {
    kind.admits_size(p.size()) && rigid_shape(p, kind.family(), rules)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub name: &'static str,
    pub passed: bool,
}

/// Per-clause outcome of the structure propositions, evaluated on the rows
/// of the transpose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub family: Family,
    pub rows: Partition,
    pub clauses: Vec<Clause>,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.passed)
    }
}

pub fn check_structure(p: &Partition, family: Family) -> StructureReport {
    let rows = p.transpose();
    let r = rows.parts();
    let m = r.len();
    let mut clauses = Vec::new();
    let mut clause = |name, passed| clauses.push(Clause { name, passed });
    let same_parity = |k: usize| r[k] % 2 == r[k + 1] % 2;
    let shortest_even = r.last().is_none_or(|&x| x % 2 == 0);

    match family {
        Family::B | Family::D => {
            let want = if family == Family::B { 1 } else { 0 };
            clause(
                "longest row parity",
                r.first().is_none_or(|&x| x % 2 == want),
            );
            clause(
                "rows after the first pair up by parity",
                (1..m.saturating_sub(1)).step_by(2).all(same_parity),
            );
            clause(
                "even row count has even shortest row",
                m % 2 == 1 || shortest_even,
            );
            if family == Family::B {
                clause(
                    "odd last row implies odd row count",
                    shortest_even || m % 2 == 1,
                );
            }
        }
        Family::C => {
            clause(
                "rows pair up by parity from the top",
                (0..m.saturating_sub(1)).step_by(2).all(same_parity),
            );
            clause(
                "odd row count has even shortest row",
                m.is_multiple_of(2) || shortest_even,
            );
        }
    }
    StructureReport {
        family,
        rows,
        clauses,
    }
}

pub fn enumerate_rigid(theory: TheoryLabel) -> Vec<Partition> {
    rigid_partitions(
        theory.family,
        theory.total_boxes(),
        RigidityRules::default(),
    )
}

/// Rigid partitions of `size` under the multiplicity rules of `family`,
/// in descending lexicographic order.
///
/// Built from multiplicities: a gap-free partition with smallest part `s`
/// uses every value `s..=top` at least once.
pub fn rigid_partitions(family: Family, size: u32, rules: RigidityRules) -> Vec<Partition> {
    fn allowed(v: u32, m: u32, family: Family) -> bool {
        let restricted = v % 2 == family.restricted_parity();
        if restricted {
            m.is_multiple_of(2)
        } else {
            m != 2
        }
    }
    fn extend(
        v: u32,
        rest: u32,
        family: Family,
        mults: &mut Vec<(u32, usize)>,
        out: &mut Vec<Partition>,
    ) {
        for m in 1..=rest / v {
            if !allowed(v, m, family) {
                continue;
            }
            mults.push((v, m as usize));
            let left = rest - m * v;
            if left == 0 {
                out.push(Partition::from_multiplicities(mults.iter().copied()));
            } else {
                extend(v + 1, left, family, mults, out);
            }
            mults.pop();
        }
    }

    let mut out = Vec::new();
    if size == 0 {
        out.push(Partition::empty());
        return out;
    }
    let smallest = match rules.gap {
        GapRule::TrailingZero => 1..=1,
        GapRule::InteriorOnly => 1..=size,
    };
    for s in smallest {
        extend(s, size, family, &mut Vec::new(), &mut out);
    }
    out.sort_by(|a, b| a.cmp_lex_desc(b));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairOptions {
    /// Admit D pairs whose factors both have an odd box count.
    pub include_odd_d: bool,
    pub rules: RigidityRules,
}

impl Default for PairOptions {
    fn default() -> Self {
        Self {
            include_odd_d: true,
            rules: RigidityRules::default(),
        }
    }
}

pub fn enumerate_pairs(theory: TheoryLabel) -> Vec<OperatorPair> {
    enumerate_pairs_with(theory, PairOptions::default())
}

/// All ordered rigid pairs, sorted descending on (|λ′|, λ′, λ″).
pub fn enumerate_pairs_with(theory: TheoryLabel, options: PairOptions) -> Vec<OperatorPair> {
    let total = theory.total_boxes();
    let mut out = Vec::new();
    for signature in theory.signatures(options.include_odd_d) {
        for size1 in (0..=total).filter(|&s| signature.first.admits_size(s)) {
            let size2 = total - size1;
            if !signature.second.admits_size(size2) {
                continue;
            }
            let firsts = rigid_partitions(signature.first.family(), size1, options.rules);
            let seconds = rigid_partitions(signature.second.family(), size2, options.rules);
            for a in &firsts {
                for b in &seconds {
                    out.push(OperatorPair::trusted(
                        theory,
                        a.clone(),
                        b.clone(),
                        signature,
                    ));
                }
            }
        }
    }
    out.sort_by(|x, y| {
        y.lambda1
            .size()
            .cmp(&x.lambda1.size())
            .then_with(|| x.lambda1.cmp_lex_desc(&y.lambda1))
            .then_with(|| x.lambda2.cmp_lex_desc(&y.lambda2))
    });
    out
}
