//! Catalogs of rigid operators with both invariants, class grouping, the
//! symbol-to-fingerprint implication check and dual matching.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::blocks::fingerprint_of_representative;
use crate::error::{Error, Result};
use crate::fingerprint::{
    combine, condition_ii_delta, fingerprint, Combine, Conventions, Fingerprint,
};
use crate::partition::Partition;
use crate::rigidity::enumerate_pairs;
use crate::symbol::{symbol_of_pair, Symbol};
use crate::theory::{Family, OperatorPair, TheoryLabel};

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RecordFlags {
    pub odd_d: bool,
    /// `ok`, `fallback: <reason>` or `mismatch`.
    pub blocks: String,
    pub condition_ii_delta: bool,
    pub lambda_equals_mu: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub theory: Family,
    pub rank: u32,
    pub lambda1: Partition,
    pub lambda2: Partition,
    pub symbol_top: Vec<u32>,
    pub symbol_bottom: Vec<u32>,
    pub alpha: Partition,
    pub beta: Partition,
    pub symbol_class: String,
    pub fingerprint_class: String,
    pub flags: RecordFlags,
}

impl CatalogRecord {
    pub fn label(&self) -> TheoryLabel {
        TheoryLabel::new(self.theory, self.rank)
    }

    pub fn symbol(&self) -> Symbol {
        Symbol::new(self.symbol_top.clone(), self.symbol_bottom.clone())
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint::new(self.alpha.clone(), self.beta.clone())
    }

    pub fn pair_text(&self) -> String {
        format!("{};{}", self.lambda1, self.lambda2)
    }
}

/// First 16 hex digits of the SHA-256 of the canonical text form.
pub fn class_id(canonical: &str) -> String {
    let digest = Sha256::digest(canonical.as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

pub fn record_for(pair: &OperatorPair) -> Result<CatalogRecord> {
    let symbol = symbol_of_pair(pair)?;
    let fp = fingerprint(pair)?;
    let blocks = match fingerprint_of_representative(pair) {
        Ok(b) if !b.via_blocks => format!("fallback: {}", b.diagnostic.unwrap_or_default()),
        Ok(b) if b.fingerprint != fp => "mismatch".to_string(),
        Ok(_) => "ok".to_string(),
        Err(e) => format!("fallback: {e}"),
    };
    let combined = combine(pair, Combine::PartwiseSum);
    let condition_ii = !condition_ii_delta(&combined, Conventions::default()).is_empty();
    let mu_r = crate::represent::mu_from_fingerprint(&fp).mu;
    Ok(CatalogRecord {
        theory: pair.theory.family,
        rank: pair.theory.rank,
        lambda1: pair.lambda1.clone(),
        lambda2: pair.lambda2.clone(),
        symbol_class: class_id(&symbol.to_string()),
        fingerprint_class: class_id(&fp.to_string()),
        symbol_top: symbol.top,
        symbol_bottom: symbol.bottom,
        alpha: fp.alpha,
        beta: fp.beta,
        flags: RecordFlags {
            odd_d: pair.signature.is_odd_d(),
            blocks,
            condition_ii_delta: condition_ii,
            lambda_equals_mu: combined.lambda == mu_r,
        },
    })
}

/// One record per rigid pair, in enumeration order.
pub fn build_catalog(theory: TheoryLabel) -> Result<Vec<CatalogRecord>> {
    enumerate_pairs(theory).par_iter().map(record_for).collect()
}

pub fn write_jsonl<W: Write>(records: &[CatalogRecord], mut out: W) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn read_jsonl<R: BufRead>(input: R) -> std::io::Result<Vec<CatalogRecord>> {
    input
        .lines()
        .filter(|l| l.as_ref().map_or(true, |l| !l.trim().is_empty()))
        .map(|l| serde_json::from_str(&l?).map_err(std::io::Error::other))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKey {
    Symbol,
    Fingerprint,
}

impl ClassKey {
    pub fn of(self, r: &CatalogRecord) -> String {
        match self {
            ClassKey::Symbol => r.symbol().to_string(),
            ClassKey::Fingerprint => r.fingerprint().to_string(),
        }
    }
}

/// Record indices grouped by (theory, canonical invariant text).
pub fn group_classes(
    records: &[CatalogRecord],
    key: ClassKey,
) -> BTreeMap<(TheoryLabel, String), Vec<usize>> {
    let mut out: BTreeMap<_, Vec<usize>> = BTreeMap::new();
    for (i, r) in records.iter().enumerate() {
        out.entry((r.label(), key.of(r))).or_default().push(i);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub theory: TheoryLabel,
    pub symbol: String,
    pub fingerprints: Vec<String>,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusCount {
    pub theory: TheoryLabel,
    pub records: usize,
    pub symbol_classes: usize,
    pub fingerprint_classes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Audits {
    /// Records with `|α| + |β| ≠ rank`.
    pub size_failures: Vec<String>,
    pub condition_ii_deltas: usize,
    pub block_checked: usize,
    pub block_ok: usize,
    pub block_mismatches: Vec<String>,
    pub lambda_equals_mu: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct VerificationReport {
    pub corpus: Vec<CorpusCount>,
    pub violations: Vec<Violation>,
    /// Fingerprint classes that split into several symbol classes.
    pub converse_failures: usize,
    pub audits: Audits,
}

impl VerificationReport {
    pub fn implication_holds(&self) -> bool {
        self.violations.is_empty()
    }

    /// The implication plus the size and block audits.
    pub fn strict_pass(&self) -> bool {
        self.implication_holds()
            && self.audits.size_failures.is_empty()
            && self.audits.block_mismatches.is_empty()
    }
}

/// Checks that equal symbols force equal fingerprints within each theory.
pub fn verify_implication(records: &[CatalogRecord]) -> VerificationReport {
    let mut report = VerificationReport::default();
    let by_symbol = group_classes(records, ClassKey::Symbol);
    let by_fp = group_classes(records, ClassKey::Fingerprint);

    let mut per_theory: BTreeMap<TheoryLabel, CorpusCount> = BTreeMap::new();
    for r in records {
        per_theory
            .entry(r.label())
            .or_insert(CorpusCount {
                theory: r.label(),
                records: 0,
                symbol_classes: 0,
                fingerprint_classes: 0,
            })
            .records += 1;
    }
    for (theory, _) in by_symbol.keys() {
        per_theory.get_mut(theory).unwrap().symbol_classes += 1;
    }
    for (theory, _) in by_fp.keys() {
        per_theory.get_mut(theory).unwrap().fingerprint_classes += 1;
    }
    report.corpus = per_theory.into_values().collect();

    for ((theory, symbol), members) in &by_symbol {
        let mut fps: Vec<String> = members
            .iter()
            .map(|&i| records[i].fingerprint().to_string())
            .collect();
        fps.sort();
        fps.dedup();
        if fps.len() > 1 {
            report.violations.push(Violation {
                theory: *theory,
                symbol: symbol.clone(),
                fingerprints: fps,
                members: members.iter().map(|&i| records[i].pair_text()).collect(),
            });
        }
    }
    for members in by_fp.values() {
        let mut syms: Vec<String> = members
            .iter()
            .map(|&i| records[i].symbol().to_string())
            .collect();
        syms.sort();
        syms.dedup();
        report.converse_failures += (syms.len() > 1) as usize;
    }

    let audits = &mut report.audits;
    for r in records {
        let name = format!("{} {}", r.label(), r.pair_text());
        if r.alpha.size() + r.beta.size() != r.rank {
            audits.size_failures.push(name.clone());
        }
        audits.condition_ii_deltas += r.flags.condition_ii_delta as usize;
        audits.lambda_equals_mu += r.flags.lambda_equals_mu as usize;
        audits.block_checked += 1;
        match r.flags.blocks.as_str() {
            "ok" => audits.block_ok += 1,
            "mismatch" => audits.block_mismatches.push(name),
            _ => {}
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualMatch {
    pub key: String,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct DualReport {
    pub key: Option<ClassKey>,
    pub left_classes: usize,
    pub right_classes: usize,
    pub matches: Vec<DualMatch>,
    pub unmatched_left: Vec<String>,
    pub unmatched_right: Vec<String>,
}

fn single_rank(records: &[CatalogRecord]) -> Result<Option<u32>> {
    let mut ranks = records.iter().map(|r| r.rank);
    let Some(first) = ranks.next() else {
        return Ok(None);
    };
    match ranks.find(|&r| r != first) {
        Some(other) => Err(Error::RankMismatch(first, other)),
        None => Ok(Some(first)),
    }
}

/// Pairs up classes of two catalogs of the same rank by invariant text.
pub fn find_dual_candidates(
    left: &[CatalogRecord],
    right: &[CatalogRecord],
    key: ClassKey,
) -> Result<DualReport> {
    if let (Some(a), Some(b)) = (single_rank(left)?, single_rank(right)?) {
        if a != b {
            return Err(Error::RankMismatch(a, b));
        }
    }
    let index = |records: &[CatalogRecord]| {
        let mut m: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for r in records {
            m.entry(key.of(r)).or_default().push(r.pair_text());
        }
        m
    };
    let (l, r) = (index(left), index(right));
    let mut report = DualReport {
        key: Some(key),
        left_classes: l.len(),
        right_classes: r.len(),
        ..Default::default()
    };
    for (k, members) in &l {
        match r.get(k) {
            Some(other) => report.matches.push(DualMatch {
                key: k.clone(),
                left: members.clone(),
                right: other.clone(),
            }),
            None => report.unmatched_left.push(k.clone()),
        }
    }
    report.unmatched_right = r.keys().filter(|k| !l.contains_key(*k)).cloned().collect();
    Ok(report)
}
