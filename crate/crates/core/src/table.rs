//! Row-by-row construction of the symbol. Each column of the Young diagram
//! (the i-th part of the transpose) contributes a right-aligned string of
//! `L` ones to one row of the symbol, chosen by the parity of the column
//! height and the parity of `i + t + 1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symbol::{symbol_of, Symbol};
use crate::theory::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Top,
    Bottom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SymbolContribution {
    pub side: Side,
    /// Number of ones, `L`.
    pub length: u32,
    /// 1-based row index `i`.
    pub row: usize,
    /// `Σ_{k=i}^{m} n_k` with `n_k` the multiplicity of part `k`.
    pub height: u32,
    pub height_odd: bool,
    pub index_odd: bool,
}

/// Table case for a row: side and the offset `δ` in `L = (height + δ) / 2`.
pub fn case(height_odd: bool, index_odd: bool) -> (Side, i64) {
    match (height_odd, index_odd) {
        (true, false) => (Side::Top, 1),
        (false, true) => (Side::Top, 0),
        (false, false) => (Side::Bottom, 0),
        (true, true) => (Side::Bottom, -1),
    }
}

/// Parity of `i + t + 1`.
pub fn index_odd(row: usize, family: Family) -> bool {
    (row as i64 + family.t() as i64 + 1).rem_euclid(2) == 1
}

pub fn contributions(p: &Partition, family: Family) -> Vec<SymbolContribution> {
    let mults = p.multiplicities();
    let m = p.largest();
    let mut height = 0u32;
    let mut out = Vec::with_capacity(m as usize);
    // accumulate Σ_{k=i}^{m} n_k from the top down
    for i in (1..=m).rev() {
        height += mults.get(&i).copied().unwrap_or(0) as u32;
        let row = i as usize;
        let height_odd = height % 2 == 1;
        let index_odd = index_odd(row, family);
        let (side, delta) = case(height_odd, index_odd);
        // δ matches the parity of the height, so the numerator is even
        let length = ((height as i64 + delta) / 2) as u32;
        out.push(SymbolContribution {
            side,
            length,
            row,
            height,
            height_odd,
            index_odd,
        });
    }
    out.reverse();
    out
}

/// Smallest zero frame, with one more top entry than bottom, that holds
/// every contribution.
pub fn frame_for(contribs: &[SymbolContribution]) -> Symbol {
    if contribs.is_empty() {
        return Symbol::empty();
    }
    let longest = |side| {
        contribs
            .iter()
            .filter(|c| c.side == side)
            .map(|c| c.length as usize)
            .max()
            .unwrap_or(0)
    };
    let bottom = longest(Side::Bottom).max(longest(Side::Top).saturating_sub(1));
    Symbol::zero_frame(bottom + 1, bottom)
}

/// Adds a right-aligned string of `length` ones to one row of `s`.
pub fn add_line(s: &mut Symbol, side: Side, length: u32) -> Result<()> {
    let row = match side {
        Side::Top => &mut s.top,
        Side::Bottom => &mut s.bottom,
    };
    let width = row.len();
    if length as usize > width {
        return Err(Error::FrameOverflow { length, width });
    }
    for v in &mut row[width - length as usize..] {
        *v += 1;
    }
    Ok(())
}

pub fn assemble(contribs: &[SymbolContribution], frame: &Symbol) -> Result<Symbol> {
    let mut s = frame.clone();
    for c in contribs {
        add_line(&mut s, c.side, c.length)?;
    }
    Ok(s)
}

/// Canonical symbol obtained from the per-row contributions.
pub fn constructive_symbol(p: &Partition, family: Family) -> Result<Symbol> {
    let contribs = contributions(p, family);
    Ok(assemble(&contribs, &frame_for(&contribs))?.canonicalize())
}

#[derive(Debug, Clone, Serialize)]
pub struct TableMismatch {
    pub family: Family,
    pub partition: Partition,
    pub definition: Symbol,
    pub constructive: Symbol,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct TableReport {
    pub checked: usize,
    pub agreed: usize,
    pub mismatches: Vec<TableMismatch>,
}

impl TableReport {
    pub fn agreement(&self) -> f64 {
        if self.checked == 0 {
            1.0
        } else {
            self.agreed as f64 / self.checked as f64
        }
    }
}

/// Compares the constructive path against the direct definition.
pub fn cross_validate<'a, I>(corpus: I) -> Result<TableReport>
where
    I: IntoIterator<Item = (Family, &'a Partition)>,
{
    let mut report = TableReport::default();
    for (family, p) in corpus {
        let definition = symbol_of(p, family)?.canonicalize();
        let constructive = constructive_symbol(p, family)?;
        report.checked += 1;
        if definition == constructive {
            report.agreed += 1;
        } else {
            report.mismatches.push(TableMismatch {
                family,
                partition: p.clone(),
                definition,
                constructive,
            });
        }
    }
    Ok(report)
}
