//! The symbol invariant: two rows of non-negative integers computed from a
//! partition, added entrywise (right aligned) for pairs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::theory::{Family, OperatorPair};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Symbol {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl Symbol {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Self {
        Self { top, bottom }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty() && self.bottom.is_empty()
    }

    /// All-zero symbol with the given row widths.
    pub fn zero_frame(top_width: usize, bottom_width: usize) -> Self {
        Self::new(vec![0; top_width], vec![0; bottom_width])
    }

    pub fn rows_increasing(&self) -> bool {
        let inc = |r: &[u32]| r.windows(2).all(|w| w[0] <= w[1]);
        inc(&self.top) && inc(&self.bottom)
    }

    /// Entrywise sum with both rows right aligned.
    pub fn add(&self, other: &Symbol) -> Symbol {
        Symbol::new(
            add_right_aligned(&self.top, &other.top),
            add_right_aligned(&self.bottom, &other.bottom),
        )
    }

    /// Strips leading columns whose top and bottom entries are both zero.
    pub fn canonicalize(&self) -> Symbol {
        let strip = self
            .top
            .iter()
            .zip(&self.bottom)
            .take_while(|(&t, &b)| t == 0 && b == 0)
            .count();
        Symbol::new(self.top[strip..].to_vec(), self.bottom[strip..].to_vec())
    }

    pub fn total(&self) -> u32 {
        self.top.iter().chain(&self.bottom).sum()
    }
}

fn add_right_aligned(a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let pad = |r: &[u32], j: usize| {
        let off = n - r.len();
        if j < off {
            0
        } else {
            r[j - off]
        }
    };
    (0..n).map(|j| pad(a, j) + pad(b, j)).collect()
}

pub fn add_symbols(a: &Symbol, b: &Symbol) -> Symbol {
    a.add(b)
}

pub fn canonicalize(s: &Symbol) -> Symbol {
    s.canonicalize()
}

fn write_row(f: &mut fmt::Formatter<'_>, row: &[u32]) -> fmt::Result {
    write!(f, "[")?;
    for (k, v) in row.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, "]")
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "top=")?;
        write_row(f, &self.top)?;
        write!(f, ";bottom=")?;
        write_row(f, &self.bottom)
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::ParseSymbol {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (mut top, mut bottom) = (None, None);
        for field in s.split(';') {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| fail("expected key=[...]"))?;
            let row = parse_row(value).ok_or_else(|| fail("malformed row"))?;
            match key.trim() {
                "top" => top = Some(row),
                "bottom" => bottom = Some(row),
                _ => return Err(fail("unknown key")),
            }
        }
        match (top, bottom) {
            (Some(top), Some(bottom)) => Ok(Symbol { top, bottom }),
            _ => Err(fail("both top and bottom are required")),
        }
    }
}

fn parse_row(s: &str) -> Option<Vec<u32>> {
    let body = s.trim().strip_prefix('[')?.strip_suffix(']')?.trim();
    if body.is_empty() {
        return Some(Vec::new());
    }
    body.split(',').map(|x| x.trim().parse().ok()).collect()
}

/// The odd-orthogonal computation on raw parts (zeros allowed).
fn b_rule(parts: &[u32]) -> Symbol {
    let l = parts.len() as u32;
    let shifted = parts
        .iter()
        .enumerate()
        .map(|(k, &p)| p + l - (k as u32 + 1));
    let (mut odd, mut even): (Vec<u32>, Vec<u32>) = shifted.partition(|a| a % 2 == 1);
    odd.sort_unstable();
    even.sort_unstable();
    // entries are distinct, so f_i ≥ i - 1 and g_i ≥ i - 1
    let top = odd
        .iter()
        .enumerate()
        .map(|(i, a)| (a - 1) / 2 - i as u32)
        .collect();
    let bottom = even
        .iter()
        .enumerate()
        .map(|(i, a)| a / 2 - i as u32)
        .collect();
    Symbol { top, bottom }
}

fn drop_leading_zeros(p: &Partition, mut s: Symbol, count: usize) -> Result<Symbol> {
    for position in 0..count {
        match s.bottom.first() {
            Some(0) => {
                s.bottom.remove(0);
            }
            found => {
                return Err(Error::MalformedSymbolInput {
                    partition: p.clone(),
                    position,
                    found: found.copied(),
                })
            }
        }
    }
    Ok(s)
}

/// Symbol of a partition under the rule of `family`; the empty partition
/// maps to the empty symbol.
pub fn symbol_of(p: &Partition, family: Family) -> Result<Symbol> {
    symbol_of_padded(p, family, 0)
}

/// As [`symbol_of`] after appending `extra_zeros` zero parts to the input.
pub fn symbol_of_padded(p: &Partition, family: Family, extra_zeros: usize) -> Result<Symbol> {
    if p.is_empty() {
        return Ok(Symbol::empty());
    }
    let mut parts = p.parts().to_vec();
    parts.extend(std::iter::repeat_n(0, extra_zeros));
    match family {
        Family::B => Ok(b_rule(&parts)),
        Family::C if parts.len().is_multiple_of(2) => {
            let mut s = b_rule(&parts);
            s.top.insert(0, 0);
            Ok(s)
        }
        Family::C => {
            parts.push(0);
            drop_leading_zeros(p, b_rule(&parts), 1)
        }
        Family::D => {
            parts.push(0);
            drop_leading_zeros(p, b_rule(&parts), 2)
        }
    }
}

/// Canonical symbol of a pair: each factor under its own family rule, summed.
pub fn symbol_of_pair(pair: &OperatorPair) -> Result<Symbol> {
    let first = symbol_of(&pair.lambda1, pair.signature.first.family())?;
    let second = symbol_of(&pair.lambda2, pair.signature.second.family())?;
    Ok(first.add(&second).canonicalize())
}
