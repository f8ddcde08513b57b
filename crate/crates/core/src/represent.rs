//! Representatives of symbol and fingerprint classes.
//!
//! A symbol row is a sum of right-aligned strings of ones, and the lengths
//! of those strings are the conjugate of the row read as a partition. Each
//! string is one row contribution of one factor, and its length together
//! with the row index fixes the column height of that factor's diagram.
//! Reconstruction assigns the strings, longest first, to the two factors.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::blocks::Origin;
use crate::error::{Error, Result};
use crate::fingerprint::{combine, Combine, Fingerprint};
use crate::partition::Partition;
use crate::rigidity::{is_rigid_kind, satisfies_multiplicity_rule, RigidityRules};
use crate::symbol::{symbol_of, symbol_of_pair, Symbol};
use crate::table::{add_line, index_odd, Side};
use crate::theory::{FactorKind, Family, OperatorPair, PairSignature, TheoryLabel};

/// Multiset of string lengths per symbol row, longest first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineDiagram {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

fn conjugate_row(row: &[u32]) -> Result<Vec<u32>> {
    if !row.windows(2).all(|w| w[0] <= w[1]) {
        return Err(Error::NotAchievable { row: row.to_vec() });
    }
    let highest = row.last().copied().unwrap_or(0);
    Ok((1..=highest)
        .map(|level| row.iter().filter(|&&x| x >= level).count() as u32)
        .collect())
}

pub fn lines_of(s: &Symbol) -> Result<LineDiagram> {
    Ok(LineDiagram {
        top: conjugate_row(&s.top)?,
        bottom: conjugate_row(&s.bottom)?,
    })
}

impl LineDiagram {
    /// Adds every line into `frame`.
    pub fn assemble(&self, frame: &Symbol) -> Result<Symbol> {
        let mut s = frame.clone();
        for &l in &self.top {
            add_line(&mut s, Side::Top, l)?;
        }
        for &l in &self.bottom {
            add_line(&mut s, Side::Bottom, l)?;
        }
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Column height of row `row` of a factor in `family` that contributes a
/// line of `length` ones to `side`.
pub fn column_height(side: Side, length: u32, row: usize, family: Family) -> u32 {
    let odd_index = index_odd(row, family);
    match (side, odd_index) {
        (Side::Top, false) => (2 * length).saturating_sub(1),
        (Side::Top, true) => 2 * length,
        (Side::Bottom, false) => 2 * length,
        (Side::Bottom, true) => 2 * length + 1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RowRole {
    SingleFirst,
    PairFirst,
    PairSecond,
    NestedSingle,
}

/// One row of a reconstructed factor. Rows with `length == 0` carry no
/// visible line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssignedLine {
    pub length: u32,
    pub side: Side,
    pub owner: Origin,
    pub row: usize,
    pub column_height: u32,
    pub role: RowRole,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct RowAssignment {
    pub lines: Vec<AssignedLine>,
}

impl RowAssignment {
    pub fn rows_of(&self, owner: Origin) -> impl Iterator<Item = &AssignedLine> {
        self.lines.iter().filter(move |l| l.owner == owner)
    }

    /// Consecutive visible rows of one owner, past its first two rows, that
    /// sit on the same side with different line lengths.
    pub fn lemma_violations(&self) -> Vec<(Origin, usize)> {
        let mut out = Vec::new();
        for owner in [Origin::Lambda2, Origin::Lambda1] {
            let mut rows: Vec<&AssignedLine> =
                self.rows_of(owner).filter(|l| l.length > 0).collect();
            rows.sort_by_key(|l| l.row);
            for w in rows.windows(2) {
                let (a, b) = (w[0], w[1]);
                if a.row >= 2 && b.row == a.row + 1 && a.side == b.side && a.length != b.length {
                    out.push((owner, b.row));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    Greedy,
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reconstruction {
    #[serde(serialize_with = "crate::represent::serialize_pair")]
    pub pair: OperatorPair,
    pub assignment: RowAssignment,
    pub method: Method,
    /// The two longest lines have equal length.
    pub equal_lead_tie: bool,
    pub diagnostics: Vec<String>,
}

pub(crate) fn serialize_pair<S: serde::Serializer>(
    pair: &OperatorPair,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(pair)
}

pub const DEFAULT_NODE_LIMIT: usize = 1_000_000;

struct Search<'a> {
    theory: TheoryLabel,
    signature: PairSignature,
    target: &'a Symbol,
    /// Remaining line counts by (side, length).
    remaining: BTreeMap<(Side, u32), usize>,
    /// Column heights per owner, index 0 for λ′ and 1 for λ″.
    cols: [Vec<u32>; 2],
    steps: Vec<(Side, u32, usize)>,
    backtrack: bool,
    nodes: usize,
    limit: usize,
    found: Vec<(OperatorPair, RowAssignment)>,
    stop_at_first: bool,
}

fn owner_of(slot: usize) -> Origin {
    if slot == 0 {
        Origin::Lambda1
    } else {
        Origin::Lambda2
    }
}

impl Search<'_> {
    fn kind(&self, slot: usize) -> FactorKind {
        if slot == 0 {
            self.signature.first
        } else {
            self.signature.second
        }
    }

    fn done(&self) -> bool {
        self.stop_at_first && !self.found.is_empty()
    }

    /// Returns true when the branch produced at least one solution.
    fn dfs(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::SearchExhausted {
                symbol: self.target.to_string(),
                limit: self.limit,
            });
        }
        let longest = self
            .remaining
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&(_, l), _)| l)
            .max();
        let Some(length) = longest else {
            return Ok(self.finish());
        };
        let mut any = false;
        for side in [Side::Top, Side::Bottom] {
            if self.remaining.get(&(side, length)).copied().unwrap_or(0) == 0 {
                continue;
            }
            for slot in [1, 0] {
                let row = self.cols[slot].len() + 1;
                let h = column_height(side, length, row, self.kind(slot).family());
                if h == 0 || self.cols[slot].last().is_some_and(|&last| h >= last) {
                    continue;
                }
                self.cols[slot].push(h);
                *self.remaining.get_mut(&(side, length)).unwrap() -= 1;
                self.steps.push((side, length, slot));
                let hit = self.dfs();
                self.steps.pop();
                *self.remaining.get_mut(&(side, length)).unwrap() += 1;
                self.cols[slot].pop();
                let hit = hit?;
                any |= hit;
                if self.done() || !self.backtrack {
                    return Ok(any);
                }
            }
        }
        Ok(any)
    }

    fn finish(&mut self) -> bool {
        let options = |slot: usize| {
            let cols = &self.cols[slot];
            let row = cols.len() + 1;
            let mut v = vec![false];
            let can_end = cols.last().is_none_or(|&l| l > 1);
            if can_end && index_odd(row, self.kind(slot).family()) {
                v.push(true);
            }
            v
        };
        let (options1, options2) = (options(0), options(1));
        let mut any = false;
        for &extra2 in &options2 {
            for &extra1 in &options1 {
                let mut factors = [self.cols[0].clone(), self.cols[1].clone()];
                if extra1 {
                    factors[0].push(1);
                }
                if extra2 {
                    factors[1].push(1);
                }
                if let Some(pair) = self.accept(&factors) {
                    let assignment = self.assignment(&pair, [extra1, extra2]);
                    self.found.push((pair, assignment));
                    any = true;
                    if self.stop_at_first {
                        return true;
                    }
                }
            }
        }
        any
    }

    fn accept(&self, cols: &[Vec<u32>; 2]) -> Option<OperatorPair> {
        let l1 = Partition::from_unsorted(cols[0].clone()).transpose();
        let l2 = Partition::from_unsorted(cols[1].clone()).transpose();
        let rules = RigidityRules::default();
        if l1.size() + l2.size() != self.theory.total_boxes()
            || !is_rigid_kind(&l1, self.signature.first, rules)
            || !is_rigid_kind(&l2, self.signature.second, rules)
        {
            return None;
        }
        let pair = OperatorPair::with_signature(self.theory, l1, l2, self.signature, rules).ok()?;
        (symbol_of_pair(&pair).ok()? == *self.target).then_some(pair)
    }

    fn assignment(&self, pair: &OperatorPair, extra: [bool; 2]) -> RowAssignment {
        let mut lines = Vec::new();
        let mut rows = [0usize; 2];
        for &(side, length, slot) in &self.steps {
            rows[slot] += 1;
            lines.push((side, length, slot, rows[slot]));
        }
        for slot in [1, 0] {
            if extra[slot] {
                lines.push((Side::Bottom, 0, slot, self.cols[slot].len() + 1));
            }
        }
        let counts = [
            pair.lambda1.largest() as usize,
            pair.lambda2.largest() as usize,
        ];
        RowAssignment {
            lines: lines
                .into_iter()
                .map(|(side, length, slot, row)| AssignedLine {
                    length,
                    side,
                    owner: owner_of(slot),
                    row,
                    column_height: column_height(side, length, row, self.kind(slot).family())
                        .max(1),
                    role: role_of(row, counts[slot], self.kind(slot)),
                })
                .collect(),
        }
    }
}

/// Orthogonal rows are `1 | (2,3) | (4,5) | ...`, symplectic rows
/// `(1,2) | (3,4) | ...`; an unmatched last row is a nested single.
fn role_of(row: usize, count: usize, kind: FactorKind) -> RowRole {
    let orthogonal = kind != FactorKind::Symplectic;
    if orthogonal && row == 1 {
        return RowRole::SingleFirst;
    }
    let first_of_pair = if orthogonal {
        row.is_multiple_of(2)
    } else {
        row % 2 == 1
    };
    if first_of_pair && row == count {
        RowRole::NestedSingle
    } else if first_of_pair {
        RowRole::PairFirst
    } else {
        RowRole::PairSecond
    }
}

/// Signatures tried in order; D tries the even-orthogonal split first.
fn search_signatures(theory: TheoryLabel) -> Vec<PairSignature> {
    theory.signatures(true)
}

fn run_search(
    s: &Symbol,
    theory: TheoryLabel,
    backtrack: bool,
    stop_at_first: bool,
    limit: usize,
) -> Result<Vec<(OperatorPair, RowAssignment)>> {
    let target = s.canonicalize();
    let lines = lines_of(&target)?;
    let mut remaining = BTreeMap::new();
    for &l in &lines.top {
        *remaining.entry((Side::Top, l)).or_insert(0) += 1;
    }
    for &l in &lines.bottom {
        *remaining.entry((Side::Bottom, l)).or_insert(0) += 1;
    }
    let mut found = Vec::new();
    let mut nodes = 0;
    for signature in search_signatures(theory) {
        let mut search = Search {
            theory,
            signature,
            target: &target,
            remaining: remaining.clone(),
            cols: [Vec::new(), Vec::new()],
            steps: Vec::new(),
            backtrack,
            nodes,
            limit,
            found: Vec::new(),
            stop_at_first,
        };
        search.dfs()?;
        nodes = search.nodes;
        found.extend(search.found);
        if stop_at_first && !found.is_empty() {
            break;
        }
    }
    Ok(found)
}

fn nesting_diagnostics(a: &RowAssignment) -> Vec<String> {
    let mut out = Vec::new();
    let outer: Vec<&AssignedLine> = a.rows_of(Origin::Lambda2).collect();
    for pair in outer.windows(2) {
        let (hi, lo) = (pair[0], pair[1]);
        if hi.role != RowRole::PairFirst || lo.role != RowRole::PairSecond {
            continue;
        }
        for inner in a.rows_of(Origin::Lambda1) {
            if inner.length > 0 && inner.length < hi.length && inner.length > lo.length {
                out.push(format!(
                    "λ′ row {} (length {}) nested inside λ″ rows {}-{}",
                    inner.row, inner.length, hi.row, lo.row
                ));
            }
        }
    }
    out
}

/// A rigid pair of `theory` whose symbol is `s`. Tries the greedy pass
/// first and falls back to a backtracking search.
pub fn reconstruct_from_symbol(s: &Symbol, theory: TheoryLabel) -> Result<Reconstruction> {
    reconstruct_with_limit(s, theory, DEFAULT_NODE_LIMIT)
}

pub fn reconstruct_with_limit(
    s: &Symbol,
    theory: TheoryLabel,
    limit: usize,
) -> Result<Reconstruction> {
    let lines = lines_of(&s.canonicalize())?;
    let mut all: Vec<u32> = lines.top.iter().chain(&lines.bottom).copied().collect();
    all.sort_unstable_by(|a, b| b.cmp(a));
    let equal_lead_tie = all.len() >= 2 && all[0] == all[1];

    let (found, method) = match run_search(s, theory, false, true, limit)?.pop() {
        Some(hit) => (hit, Method::Greedy),
        None => match run_search(s, theory, true, true, limit)?.pop() {
            Some(hit) => (hit, Method::Exhaustive),
            None => {
                return Err(Error::NoConsistentAssignment {
                    theory,
                    symbol: s.to_string(),
                })
            }
        },
    };
    let (pair, assignment) = found;
    let diagnostics = nesting_diagnostics(&assignment);
    Ok(Reconstruction {
        pair,
        assignment,
        method,
        equal_lead_tie,
        diagnostics,
    })
}

/// Every rigid pair of `theory` with symbol `s`, in search order.
pub fn all_reconstructions(s: &Symbol, theory: TheoryLabel) -> Result<Vec<OperatorPair>> {
    let mut out: Vec<OperatorPair> = run_search(s, theory, true, false, DEFAULT_NODE_LIMIT)?
        .into_iter()
        .map(|(p, _)| p)
        .collect();
    let mut seen = std::collections::HashSet::new();
    out.retain(|p| seen.insert(p.clone()));
    Ok(out)
}

/// The representative `(λ′_r, λ″_r)` of a fingerprint class and the
/// partition `μ_r` it produces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuRepresentative {
    pub lambda1: Partition,
    pub lambda2: Partition,
    pub mu: Partition,
}

/// `λ′_r = {a, a : a ∈ α}`, `λ″_r = {2b : b ∈ β}` and `μ_r` their merge.
pub fn mu_from_fingerprint(fp: &Fingerprint) -> MuRepresentative {
    let lambda1 = Partition::from_unsorted(fp.alpha.parts().iter().flat_map(|&a| [a, a]).collect());
    let lambda2 = Partition::from_unsorted(fp.beta.parts().iter().map(|&b| 2 * b).collect());
    let mu = lambda1.merge(&lambda2);
    MuRepresentative {
        lambda1,
        lambda2,
        mu,
    }
}

/// Symbol of `μ_r` under the symplectic rule.
pub fn symbol_of_mu_r(fp: &Fingerprint) -> Result<Symbol> {
    let mu = mu_from_fingerprint(fp).mu;
    if !satisfies_multiplicity_rule(&mu, Family::C) {
        return Err(Error::NotAPartition(mu.into_parts()));
    }
    symbol_of(&mu, Family::C)
}

/// True when the combined partition of `pair` differs from the `μ_r` of
/// its own fingerprint.
pub fn lambda_differs_from_mu_r(pair: &OperatorPair) -> Result<bool> {
    let fp = crate::fingerprint::fingerprint(pair)?;
    let lambda = combine(pair, Combine::PartwiseSum).lambda;
    Ok(lambda != mu_from_fingerprint(&fp).mu)
}
