//! Block decomposition of the merged row picture.
//!
//! The rows of both factors' diagrams are merged into one diagram whose
//! transpose is `λ′ + λ″`. Rows are grouped into cells `(1,2), (3,4), ...`
//! and the Sp map acts cell by cell: when row `x` is strictly longer than
//! row `x+1`, row `x` loses a box iff the rows from `x` down hold an odd
//! number of boxes, and row `x+1` gains one iff the rows below the cell do.
//! A block only needs the parity of what lies below it, so μ can be built
//! block by block.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fingerprint::{extract, sp_map, Fingerprint, TauAssignment, TauCondition};
use crate::partition::Partition;
use crate::theory::{Family, OperatorPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Lambda1,
    Lambda2,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Origin::Lambda1 => "λ′",
            Origin::Lambda2 => "λ″",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TaggedRow {
    pub length: u32,
    pub origin: Origin,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MergedOperator {
    pub family: Family,
    pub rows: Vec<TaggedRow>,
}

impl MergedOperator {
    pub fn row_lengths(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.length).collect()
    }

    /// Transpose of the merged rows, equal to `λ′ + λ″`.
    pub fn combined(&self) -> Partition {
        Partition::from_unsorted(self.row_lengths()).transpose()
    }

    fn first_row_of(&self, origin: Origin) -> Option<usize> {
        self.rows.iter().position(|r| r.origin == origin)
    }
}

/// Merges the rows of both factors; on equal lengths λ″ comes first.
pub fn merge_with_provenance(pair: &OperatorPair) -> MergedOperator {
    let mut rows: Vec<TaggedRow> = pair
        .lambda2
        .transpose()
        .parts()
        .iter()
        .map(|&length| TaggedRow {
            length,
            origin: Origin::Lambda2,
        })
        .chain(
            pair.lambda1
                .transpose()
                .parts()
                .iter()
                .map(|&length| TaggedRow {
                    length,
                    origin: Origin::Lambda1,
                }),
        )
        .collect();
    rows.sort_by_key(|r| std::cmp::Reverse(r.length));
    MergedOperator {
        family: pair.theory.family,
        rows,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockKind {
    /// Leading block of a B or D operator with both factors present.
    I,
    /// Cells whose rows all come from one factor.
    II,
    /// Cells mixing rows of both factors.
    III,
}

/// Rows `start..end` (0-based, half open) of the merged operator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub kind: BlockKind,
    pub start: usize,
    pub end: usize,
    pub operator: String,
}

fn parity_letter(x: u32) -> char {
    if x.is_multiple_of(2) {
        'e'
    } else {
        'o'
    }
}

/// Position (1 or 2) of a row inside its cell.
fn cell_position(row: usize) -> usize {
    row % 2 + 1
}

fn block_name(merged: &MergedOperator, kind: BlockKind, start: usize, end: usize) -> String {
    let rows = &merged.rows[start..end];
    let first1 = rows.iter().position(|r| r.origin == Origin::Lambda1);
    match (kind, first1) {
        (BlockKind::II, _) | (_, None) => format!("mu_{}", parity_letter(rows[0].length)),
        (BlockKind::I, Some(k)) => {
            format!(
                "mu_{}{}",
                parity_letter(rows[k].length),
                cell_position(start + k)
            )
        }
        (BlockKind::III, Some(k)) => {
            let last = rows
                .iter()
                .rposition(|r| r.origin == Origin::Lambda1)
                .unwrap_or(k);
            format!(
                "mu_{}{}{}",
                parity_letter(rows[k].length),
                cell_position(start + k),
                cell_position(start + last)
            )
        }
    }
}

/// Tiles the rows of `merged` with blocks on cell boundaries.
pub fn decompose_blocks(merged: &MergedOperator) -> Vec<Block> {
    let n = merged.rows.len();
    let cells = n.div_ceil(2);
    let mut blocks = Vec::new();
    let mut cell = 0;

    let lead = match (
        merged.family,
        merged.first_row_of(Origin::Lambda1),
        merged.first_row_of(Origin::Lambda2),
    ) {
        (Family::B | Family::D, Some(a), Some(b)) => Some(a.max(b) / 2 + 1),
        _ => None,
    };
    if let Some(end_cell) = lead {
        let end = (2 * end_cell).min(n);
        blocks.push(Block {
            kind: BlockKind::I,
            start: 0,
            end,
            operator: block_name(merged, BlockKind::I, 0, end),
        });
        cell = end_cell;
    }

    // None marks a mixed cell
    let cell_origin = |c: usize| {
        let rows = &merged.rows[2 * c..(2 * c + 2).min(n)];
        let o = rows[0].origin;
        rows.iter().all(|r| r.origin == o).then_some(o)
    };
    while cell < cells {
        let key = cell_origin(cell);
        let mut stop = cell + 1;
        while stop < cells && cell_origin(stop) == key {
            stop += 1;
        }
        let kind = if key.is_some() {
            BlockKind::II
        } else {
            BlockKind::III
        };
        let (start, end) = (2 * cell, (2 * stop).min(n));
        blocks.push(Block {
            kind,
            start,
            end,
            operator: block_name(merged, kind, start, end),
        });
        cell = stop;
    }
    blocks
}

/// Applies the cell rule to a run of rows, given the parity of the boxes
/// below the run. Returns the new row lengths.
fn apply_cells(rows: &[u32], below_odd: bool) -> Vec<u32> {
    let n = rows.len();
    let mut tail_odd = vec![below_odd; n + 1];
    for k in (0..n).rev() {
        tail_odd[k] = tail_odd[k + 1] ^ (rows[k] % 2 == 1);
    }
    let mut out = rows.to_vec();
    for x in (0..n).step_by(2) {
        let next = rows.get(x + 1).copied().unwrap_or(0);
        if rows[x] <= next {
            continue;
        }
        if tail_odd[x] {
            out[x] -= 1;
        }
        let after_cell = tail_odd[(x + 2).min(n)];
        // an unmatched last row only occurs at the bottom, where nothing is below
        if after_cell && x + 1 < n {
            out[x + 1] += 1;
        }
    }
    out
}

fn check_tiling(merged: &MergedOperator, blocks: &[Block]) -> Result<()> {
    let mut at = 0;
    for b in blocks {
        if b.start != at || b.end <= b.start || b.start % 2 == 1 {
            return Err(Error::BlockDecomposition(format!(
                "block {}..{} does not continue the tiling at row {at} on a cell boundary",
                b.start, b.end
            )));
        }
        if b.end % 2 == 1 && b.end != merged.rows.len() {
            return Err(Error::BlockDecomposition(format!(
                "block {}..{} splits a cell",
                b.start, b.end
            )));
        }
        at = b.end;
    }
    if at != merged.rows.len() {
        return Err(Error::BlockDecomposition(format!(
            "blocks cover {at} of {} rows",
            merged.rows.len()
        )));
    }
    Ok(())
}

/// Rows of μ computed block by block, bottom block first.
pub fn mu_rows_via_blocks(merged: &MergedOperator, blocks: &[Block]) -> Result<Vec<u32>> {
    check_tiling(merged, blocks)?;
    let rows = merged.row_lengths();
    let mut out = rows.clone();
    let mut below_odd = false;
    for b in blocks.iter().rev() {
        let local = &rows[b.start..b.end];
        out[b.start..b.end].copy_from_slice(&apply_cells(local, below_odd));
        below_odd ^= local.iter().sum::<u32>() % 2 == 1;
    }
    Ok(out)
}

/// μ assembled from the blocks and checked against the Sp map.
pub fn mu_via_blocks(merged: &MergedOperator, blocks: &[Block]) -> Result<Partition> {
    let rows = mu_rows_via_blocks(merged, blocks)?;
    let from_blocks = Partition::from_unsorted(rows).transpose();
    let direct = sp_map(&merged.combined());
    if from_blocks != direct {
        return Err(Error::BlockCrossCheck {
            blocks: from_blocks,
            direct,
        });
    }
    Ok(from_blocks)
}

fn column_heights(rows: &[u32], count: usize) -> Vec<u32> {
    (1..=count as u32)
        .map(|c| rows.iter().filter(|&&r| r >= c).count() as u32)
        .collect()
}

/// Fingerprint read off the row picture: condition (i) from the columns the
/// blocks change, condition (iii) from the column heights of λ′.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockFingerprint {
    pub fingerprint: Fingerprint,
    pub blocks: Vec<Block>,
    pub via_blocks: bool,
    pub diagnostic: Option<String>,
}

pub fn fingerprint_of_representative(pair: &OperatorPair) -> Result<BlockFingerprint> {
    let merged = merge_with_provenance(pair);
    let blocks = decompose_blocks(&merged);
    match block_route(&merged, &blocks) {
        Ok(fingerprint) => Ok(BlockFingerprint {
            fingerprint,
            blocks,
            via_blocks: true,
            diagnostic: None,
        }),
        Err(e) => Ok(BlockFingerprint {
            fingerprint: crate::fingerprint::fingerprint(pair)?,
            blocks,
            via_blocks: false,
            diagnostic: Some(e.to_string()),
        }),
    }
}

fn block_route(merged: &MergedOperator, blocks: &[Block]) -> Result<Fingerprint> {
    let before = merged.row_lengths();
    let after = mu_rows_via_blocks(merged, blocks)?;
    let width = before.first().copied().unwrap_or(0) as usize + 1;
    let lambda_cols = column_heights(&before, width);
    let mu_cols = column_heights(&after, width);
    let lambda1_rows: Vec<u32> = merged
        .rows
        .iter()
        .filter(|r| r.origin == Origin::Lambda1)
        .map(|r| r.length)
        .collect();
    let lambda1_cols = column_heights(&lambda1_rows, width);

    let mut tau = TauAssignment::default();
    for c in 0..width {
        let m = mu_cols[c];
        if m == 0 || m % 2 == 1 {
            continue;
        }
        let entry = tau.entries.entry(m).or_default();
        if m != lambda_cols[c] {
            entry.conditions.insert(TauCondition::ValueChanged);
        }
        let h = lambda1_cols[c];
        let parity_hit = match merged.family {
            Family::B | Family::D => h % 2 == 1,
            Family::C => h.is_multiple_of(2),
        };
        if parity_hit {
            entry.conditions.insert(TauCondition::Lambda1Parity);
        }
    }
    for e in tau.entries.values_mut() {
        e.sign = if e.conditions.is_empty() { 1 } else { -1 };
    }
    let mu = Partition::from_unsorted(after).transpose();
    extract(&mu, &tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingerprint::fingerprint;
    use crate::partition::partitions_of;
    use crate::rigidity::enumerate_pairs;
    use crate::theory::TheoryLabel;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn merge_examples() {
        let pair = OperatorPair::parse(TheoryLabel::b(2), "[1];[1^4]").unwrap();
        let m = merge_with_provenance(&pair);
        assert_eq!(m.row_lengths(), vec![4, 1]);
        assert_eq!(m.rows[0].origin, Origin::Lambda2);
        assert_eq!(m.combined(), p("[2,1,1,1]"));
    }

    #[test]
    fn cell_rule_matches_sp_on_all_small_partitions() {
        for n in 0..=12 {
            for lam in partitions_of(n) {
                let rows = lam.transpose().into_parts();
                let got = Partition::from_unsorted(apply_cells(&rows, false)).transpose();
                assert_eq!(got, sp_map(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn unipotent_is_one_block() {
        let pair = OperatorPair::parse(TheoryLabel::b(6), "[2^2,1^9];[]").unwrap();
        let m = merge_with_provenance(&pair);
        let blocks = decompose_blocks(&m);
        assert_eq!(blocks.len(), 1);
        assert_eq!(
            (blocks[0].kind, blocks[0].operator.as_str()),
            (BlockKind::II, "mu_o")
        );
        assert_eq!(mu_via_blocks(&m, &blocks).unwrap(), p("[2^2,1^8]"));
    }

    #[test]
    fn leading_block_names() {
        let pair = OperatorPair::parse(TheoryLabel::b(2), "[1];[1^4]").unwrap();
        let m = merge_with_provenance(&pair);
        let blocks = decompose_blocks(&m);
        assert_eq!(blocks.len(), 1);
        assert_eq!(
            (blocks[0].kind, blocks[0].operator.as_str()),
            (BlockKind::I, "mu_o2")
        );
    }

    #[test]
    fn bad_tiling_is_rejected() {
        let pair = OperatorPair::parse(TheoryLabel::b(6), "[2^2,1^9];[]").unwrap();
        let m = merge_with_provenance(&pair);
        let split = vec![
            Block {
                kind: BlockKind::II,
                start: 0,
                end: 1,
                operator: "mu_o".into(),
            },
            Block {
                kind: BlockKind::II,
                start: 1,
                end: 2,
                operator: "mu_e".into(),
            },
        ];
        assert!(matches!(
            mu_via_blocks(&m, &split),
            Err(Error::BlockDecomposition(_))
        ));
        assert!(matches!(
            mu_via_blocks(&m, &[]),
            Err(Error::BlockDecomposition(_))
        ));
    }

    #[test]
    fn block_route_agrees_with_direct_route() {
        for family in Family::ALL {
            for rank in 1..=5 {
                for pair in enumerate_pairs(TheoryLabel::new(family, rank)) {
                    let got = fingerprint_of_representative(&pair).unwrap();
                    assert!(got.via_blocks, "{pair}: {:?}", got.diagnostic);
                    assert_eq!(
                        got.fingerprint,
                        fingerprint(&pair).unwrap(),
                        "{family}{rank} {pair}"
                    );
                }
            }
        }
    }
}
