//! The fingerprint invariant `[α; β]`.
//!
//! The factors are added part by part, `λ_i = λ′_i + λ″_i`, and mapped to
//! `μ = Sp(λ)`:
//!
//! ```text
//! μ_i = λ_i + p(i)   if λ_i is odd and λ_i ≠ λ_{i - p(i)}
//! μ_i = λ_i          otherwise
//! ```
//!
//! with `p(i) = (-1)^(λ_1 + ... + λ_i)`. Even values of μ receive a sign τ;
//! parts with τ = -1 are halved into β, the rest pair up into α.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::theory::{Family, OperatorPair};

/// Sign `p(i)` used by the Sp map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum SignConvention {
    /// `(-1)^(λ_1 + ... + λ_i)`
    #[default]
    PartialSum,
    /// `(-1)^i`
    Position,
    /// `(-1)^(i+1)`
    PositionShifted,
}

/// How the two factors are combined into the partition fed to the Sp map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Combine {
    /// `λ_i = λ′_i + λ″_i`; condition (iii) reads `λ′_i` by position.
    #[default]
    PartwiseSum,
    /// Sorted union of parts, equal parts of λ″ placed first; condition
    /// (iii) fires only on parts that came from λ′.
    Merge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Conventions {
    pub combine: Combine,
    pub sign: SignConvention,
    /// Condition (iii) in the C family counts `λ′_i = 0` (past the end of λ′) as even.
    pub symplectic_counts_padding: bool,
    pub use_condition_ii: bool,
}

impl Default for Conventions {
    fn default() -> Self {
        Self {
            combine: Combine::PartwiseSum,
            sign: SignConvention::PartialSum,
            symplectic_counts_padding: true,
            use_condition_ii: true,
        }
    }
}

impl Conventions {
    /// Sorted merge with `p(i) = (-1)^i`, kept for comparison runs.
    pub fn merge_by_position() -> Self {
        Self {
            combine: Combine::Merge,
            sign: SignConvention::Position,
            symplectic_counts_padding: false,
            use_condition_ii: true,
        }
    }
}

fn sign_at(sign: SignConvention, i: usize, partial_sum: u64) -> i64 {
    let exponent = match sign {
        SignConvention::PartialSum => partial_sum,
        SignConvention::Position => i as u64,
        SignConvention::PositionShifted => i as u64 + 1,
    };
    if exponent % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Positional image of the Sp map: same length as `lambda`, zeros kept.
pub fn sp_image(lambda: &Partition, sign: SignConvention) -> Vec<u32> {
    let mut partial = 0u64;
    (1..=lambda.len())
        .map(|i| {
            let x = lambda.part(i);
            partial += x as u64;
            let p = sign_at(sign, i, partial);
            let neighbour = (i as i64 - p) as usize;
            if x % 2 == 1 && x != lambda.part(neighbour) {
                (x as i64 + p) as u32
            } else {
                x
            }
        })
        .collect()
}

fn image_to_partition(image: &[u32]) -> Partition {
    // equal neighbours never move and distinct ones move by at most one box
    // in opposite directions, so the image stays weakly decreasing
    assert!(
        image.windows(2).all(|w| w[0] >= w[1]),
        "Sp image {image:?} is not weakly decreasing"
    );
    Partition::from_unsorted(image.to_vec())
}

pub fn sp_map(lambda: &Partition) -> Partition {
    sp_map_with(lambda, SignConvention::default())
}

pub fn sp_map_with(lambda: &Partition, sign: SignConvention) -> Partition {
    image_to_partition(&sp_image(lambda, sign))
}

/// λ together with, for every position, the λ′ value that condition (iii)
/// inspects there (`None` where the position does not belong to λ′).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Combined {
    pub family: Family,
    pub lambda: Partition,
    pub lambda1_at: Vec<Option<u32>>,
}

pub fn combine(pair: &OperatorPair, combine: Combine) -> Combined {
    let family = pair.theory.family;
    match combine {
        Combine::PartwiseSum => {
            let lambda = pair.lambda1.partwise_sum(&pair.lambda2);
            let lambda1_at = (1..=lambda.len())
                .map(|i| Some(pair.lambda1.part(i)))
                .collect();
            Combined {
                family,
                lambda,
                lambda1_at,
            }
        }
        Combine::Merge => {
            let mut tagged: Vec<(u32, bool)> = pair
                .lambda2
                .parts()
                .iter()
                .map(|&x| (x, false))
                .chain(pair.lambda1.parts().iter().map(|&x| (x, true)))
                .collect();
            // stable: λ″ parts precede equal λ′ parts
            tagged.sort_by_key(|t| std::cmp::Reverse(t.0));
            Combined {
                family,
                lambda: Partition::from_unsorted(tagged.iter().map(|t| t.0).collect()),
                lambda1_at: tagged
                    .iter()
                    .map(|&(x, from1)| from1.then_some(x))
                    .collect(),
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TauCondition {
    /// μ_i ≠ λ_i
    #[serde(rename = "i")]
    ValueChanged,
    /// Σ_{k≤i} μ_k ≠ Σ_{k≤i} λ_k
    #[serde(rename = "ii")]
    PartialSumChanged,
    /// λ′_i odd (orthogonal) or even (symplectic)
    #[serde(rename = "iii")]
    Lambda1Parity,
}

impl TauCondition {
    pub fn letters(self) -> &'static str {
        match self {
            TauCondition::ValueChanged => "i",
            TauCondition::PartialSumChanged => "ii",
            TauCondition::Lambda1Parity => "iii",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TauEntry {
    pub sign: i8,
    pub conditions: BTreeSet<TauCondition>,
}

/// τ on the even values occurring in μ.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TauAssignment {
    pub entries: BTreeMap<u32, TauEntry>,
}

impl TauAssignment {
    pub fn sign(&self, m: u32) -> Option<i8> {
        self.entries.get(&m).map(|e| e.sign)
    }

    pub fn signs(&self) -> BTreeMap<u32, i8> {
        self.entries.iter().map(|(&m, e)| (m, e.sign)).collect()
    }
}

impl fmt::Display for TauAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (m, e)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let sign = if e.sign < 0 { '-' } else { '+' };
            write!(f, "{m}:{sign}")?;
            if !e.conditions.is_empty() {
                let letters: Vec<_> = e.conditions.iter().map(|c| c.letters()).collect();
                write!(f, "({})", letters.join(","))?;
            }
        }
        write!(f, "}}")
    }
}

fn triggers_iii(family: Family, value: Option<u32>, counts_padding: bool) -> bool {
    match (family, value) {
        (_, None) => false,
        (Family::B | Family::D, Some(v)) => v % 2 == 1,
        (Family::C, Some(v)) => v % 2 == 0 && (v > 0 || counts_padding),
    }
}

/// τ for `combined` and its positional Sp image `image`.
pub fn tau(combined: &Combined, image: &[u32], conventions: Conventions) -> TauAssignment {
    let mut out = TauAssignment::default();
    let (mut sum_lambda, mut sum_mu) = (0u64, 0u64);
    for (k, &mu) in image.iter().enumerate() {
        let lambda = combined.lambda.part(k + 1);
        sum_lambda += lambda as u64;
        sum_mu += mu as u64;
        if mu == 0 || mu % 2 == 1 {
            continue;
        }
        let entry = out.entries.entry(mu).or_default();
        if mu != lambda {
            entry.conditions.insert(TauCondition::ValueChanged);
        }
        if conventions.use_condition_ii && sum_lambda != sum_mu {
            entry.conditions.insert(TauCondition::PartialSumChanged);
        }
        let at = combined.lambda1_at.get(k).copied().flatten();
        if triggers_iii(combined.family, at, conventions.symplectic_counts_padding) {
            entry.conditions.insert(TauCondition::Lambda1Parity);
        }
    }
    for entry in out.entries.values_mut() {
        entry.sign = if entry.conditions.is_empty() { 1 } else { -1 };
    }
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub alpha: Partition,
    pub beta: Partition,
}

impl Fingerprint {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        Self { alpha, beta }
    }

    pub fn size(&self) -> u32 {
        self.alpha.size() + self.beta.size()
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={};beta={}", self.alpha, self.beta)
    }
}

impl FromStr for Fingerprint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::ParseFingerprint {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (mut alpha, mut beta) = (None, None);
        for field in s.split(';') {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| fail("expected key=[...]"))?;
            let p: Partition = value.parse().map_err(|_| fail("malformed partition"))?;
            match key.trim() {
                "alpha" => alpha = Some(p),
                "beta" => beta = Some(p),
                _ => return Err(fail("unknown key")),
            }
        }
        match (alpha, beta) {
            (Some(alpha), Some(beta)) => Ok(Fingerprint { alpha, beta }),
            _ => Err(fail("both alpha and beta are required")),
        }
    }
}

/// Routes τ = -1 parts of μ to β (halved) and pairs the rest into α.
pub fn extract(mu: &Partition, tau: &TauAssignment) -> Result<Fingerprint> {
    let mut beta = Vec::new();
    let mut rest: BTreeMap<u32, usize> = BTreeMap::new();
    for &m in mu.parts() {
        if m % 2 == 0 && tau.sign(m) == Some(-1) {
            beta.push(m / 2);
        } else {
            *rest.entry(m).or_insert(0) += 1;
        }
    }
    let mut alpha = Vec::new();
    for (part, count) in rest {
        if count % 2 == 1 {
            return Err(Error::UnpairedPart {
                mu: mu.clone(),
                part,
            });
        }
        alpha.extend(std::iter::repeat_n(part, count / 2));
    }
    Ok(Fingerprint {
        alpha: Partition::from_unsorted(alpha),
        beta: Partition::from_unsorted(beta),
    })
}

/// Every intermediate of the fingerprint computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FingerprintTrace {
    pub lambda: Partition,
    pub mu: Partition,
    pub tau: TauAssignment,
    pub fingerprint: Fingerprint,
}

pub fn fingerprint(pair: &OperatorPair) -> Result<Fingerprint> {
    Ok(fingerprint_trace(pair, Conventions::default())?.fingerprint)
}

pub fn fingerprint_trace(
    pair: &OperatorPair,
    conventions: Conventions,
) -> Result<FingerprintTrace> {
    let combined = combine(pair, conventions.combine);
    let image = sp_image(&combined.lambda, conventions.sign);
    let mu = image_to_partition(&image);
    let tau = tau(&combined, &image, conventions);
    let fingerprint = extract(&mu, &tau)?;
    Ok(FingerprintTrace {
        lambda: combined.lambda,
        mu,
        tau,
        fingerprint,
    })
}

/// Even values whose τ sign depends on condition (ii).
pub fn condition_ii_delta(combined: &Combined, conventions: Conventions) -> Vec<u32> {
    let image = sp_image(&combined.lambda, conventions.sign);
    let with = tau(
        combined,
        &image,
        Conventions {
            use_condition_ii: true,
            ..conventions
        },
    );
    let without = tau(
        combined,
        &image,
        Conventions {
            use_condition_ii: false,
            ..conventions
        },
    );
    with.entries
        .iter()
        .filter(|(m, e)| without.sign(**m) != Some(e.sign))
        .map(|(&m, _)| m)
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionIiDelta {
    pub pair: String,
    pub lambda: Partition,
    pub values: Vec<u32>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ConditionIiReport {
    pub checked: usize,
    /// Pairs whose combined λ has no gaps (`λ_i - λ_{i+1} ≤ 1`, `λ_{l+1} = 0`).
    pub gap_free: usize,
    pub differences: Vec<ConditionIiDelta>,
    pub gap_free_differences: usize,
}

pub fn is_gap_free(lambda: &Partition) -> bool {
    let parts = lambda.parts();
    parts.windows(2).all(|w| w[0] - w[1] <= 1) && parts.last().is_none_or(|&l| l <= 1)
}

/// τ with and without condition (ii) over a corpus of pairs.
pub fn condition_ii_report(corpus: &[OperatorPair]) -> ConditionIiReport {
    let mut report = ConditionIiReport::default();
    for pair in corpus {
        let combined = combine(pair, Combine::PartwiseSum);
        let gap_free = is_gap_free(&combined.lambda);
        report.checked += 1;
        report.gap_free += gap_free as usize;
        let values = condition_ii_delta(&combined, Conventions::default());
        if !values.is_empty() {
            report.gap_free_differences += gap_free as usize;
            report.differences.push(ConditionIiDelta {
                pair: pair.to_string(),
                lambda: combined.lambda,
                values,
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theory::TheoryLabel;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn sp_examples() {
        assert_eq!(sp_map(&p("[2^2,1^9]")), p("[2^2,1^8]"));
        assert_eq!(sp_map(&p("[1^5]")), p("[1^4]"));
        assert_eq!(sp_map(&p("[3,3]")), p("[3,3]"));
        // 3 is preceded by an empty sum, so p(1) = -1 and it loses a box;
        // the 1 then sits after an odd sum 4 → p = +1, compared with 3
        assert_eq!(sp_map(&p("[3,1]")), p("[2,2]"));
        assert_eq!(sp_map(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn sign_conventions_differ() {
        let lam = p("[2,1,1,1]");
        assert_eq!(sp_map_with(&lam, SignConvention::PartialSum), p("[2,1,1]"));
        assert_eq!(sp_map_with(&lam, SignConvention::Position), p("[2,2,1,1]"));
    }

    #[test]
    fn b6_unipotent() {
        let pair = OperatorPair::parse(TheoryLabel::b(6), "[2^2,1^9];[]").unwrap();
        let t = fingerprint_trace(&pair, Conventions::default()).unwrap();
        assert_eq!(t.mu, p("[2^2,1^8]"));
        assert_eq!(t.tau.sign(2), Some(1));
        assert!(t.tau.entries[&2].conditions.is_empty());
        assert_eq!(
            t.fingerprint,
            Fingerprint::new(p("[2,1,1,1,1]"), Partition::empty())
        );
    }

    #[test]
    fn b2_semisimple() {
        let pair = OperatorPair::parse(TheoryLabel::b(2), "[1];[1^4]").unwrap();
        let t = fingerprint_trace(&pair, Conventions::default()).unwrap();
        assert_eq!(t.lambda, p("[2,1,1,1]"));
        assert_eq!(t.mu, p("[2,1,1]"));
        // λ′_1 = 1 is odd at the position of μ_1 = 2
        let e = &t.tau.entries[&2];
        assert_eq!(e.sign, -1);
        assert_eq!(e.conditions, BTreeSet::from([TauCondition::Lambda1Parity]));
        assert_eq!(t.fingerprint, Fingerprint::new(p("[1]"), p("[1]")));
    }

    #[test]
    fn c2_unipotent() {
        let pair = OperatorPair::parse(TheoryLabel::c(2), "[2,1,1];[]").unwrap();
        let t = fingerprint_trace(&pair, Conventions::default()).unwrap();
        assert_eq!(t.mu, p("[2,1,1]"));
        assert_eq!(t.tau.sign(2), Some(-1));
        assert_eq!(t.fingerprint, Fingerprint::new(p("[1]"), p("[1]")));
    }

    #[test]
    fn no_even_parts_means_empty_tau() {
        let pair = OperatorPair::parse(TheoryLabel::b(2), "[1^5];[]").unwrap();
        let t = fingerprint_trace(&pair, Conventions::default()).unwrap();
        assert_eq!(t.mu, p("[1^4]"));
        assert!(t.tau.entries.is_empty());
        assert_eq!(
            t.fingerprint,
            Fingerprint::new(p("[1,1]"), Partition::empty())
        );
    }

    #[test]
    fn merge_convention_is_available() {
        let pair = OperatorPair::parse(TheoryLabel::b(2), "[1];[1^4]").unwrap();
        let t = fingerprint_trace(&pair, Conventions::merge_by_position()).unwrap();
        assert_eq!(t.lambda, p("[1^5]"));
        assert_eq!(t.mu, p("[1^4]"));
        assert_eq!(
            t.fingerprint,
            Fingerprint::new(p("[1,1]"), Partition::empty())
        );
    }

    #[test]
    fn unpaired_part_is_an_error() {
        let tau = TauAssignment::default();
        let err = extract(&p("[3,1]"), &tau).unwrap_err();
        assert!(matches!(err, Error::UnpairedPart { part: 1, .. }));
    }

    #[test]
    fn gapped_pattern_needs_condition_ii() {
        // heights 4 and 2 drop by two; μ = (4,4,2) and the 2 differs from λ
        // only through the running sum
        let combined = Combined {
            family: Family::B,
            lambda: p("[5,4,2]"),
            lambda1_at: vec![Some(0); 3],
        };
        assert_eq!(sp_map(&combined.lambda), p("[4,4,2]"));
        assert_eq!(
            condition_ii_delta(&combined, Conventions::default()),
            vec![2]
        );
        assert!(!is_gap_free(&combined.lambda));
    }

    #[test]
    fn text_forms() {
        let fp = Fingerprint::new(p("[2,1]"), p("[1]"));
        assert_eq!(fp.to_string(), "alpha=[2,1];beta=[1]");
        assert_eq!(fp.to_string().parse::<Fingerprint>().unwrap(), fp);
        assert!("alpha=[1]".parse::<Fingerprint>().is_err());
        let pair = OperatorPair::parse(TheoryLabel::b(2), "[1];[1^4]").unwrap();
        let t = fingerprint_trace(&pair, Conventions::default()).unwrap();
        assert_eq!(t.tau.to_string(), "{2:-(iii)}");
        assert_eq!(
            serde_json::to_string(&t.tau).unwrap(),
            r#"{"2":{"sign":-1,"conditions":["iii"]}}"#
        );
    }
}
