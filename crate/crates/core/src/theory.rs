//! Theory labels (B_n, C_n, D_n), factor kinds and operator pairs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rigidity::{is_rigid_kind, RigidityRules};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    B,
    C,
    D,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::B, Family::C, Family::D];

    /// The parameter t of the per-row symbol contribution table.
    pub fn t(self) -> i32 {
        match self {
            Family::B => -1,
            Family::C => 0,
            Family::D => 1,
        }
    }

    /// Orthogonal families forbid odd multiplicity of even parts, the
    /// symplectic family forbids odd multiplicity of odd parts.
    pub fn restricted_parity(self) -> u32 {
        match self {
            Family::B | Family::D => 0,
            Family::C => 1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TheoryLabel {
    pub family: Family,
    pub rank: u32,
}

impl TheoryLabel {
    pub fn new(family: Family, rank: u32) -> Self {
        Self { family, rank }
    }

    pub fn b(rank: u32) -> Self {
        Self::new(Family::B, rank)
    }

    pub fn c(rank: u32) -> Self {
        Self::new(Family::C, rank)
    }

    pub fn d(rank: u32) -> Self {
        Self::new(Family::D, rank)
    }

    /// 2n+1 for B, 2n for C and D.
    pub fn total_boxes(self) -> u32 {
        match self.family {
            Family::B => 2 * self.rank + 1,
            Family::C | Family::D => 2 * self.rank,
        }
    }

    /// The allowed factor signatures of semisimple pairs.
    pub fn signatures(self, include_odd_d: bool) -> Vec<PairSignature> {
        use FactorKind::*;
        match self.family {
            Family::B => vec![PairSignature::new(OddOrthogonal, EvenOrthogonal)],
            Family::C => vec![PairSignature::new(Symplectic, Symplectic)],
            Family::D if include_odd_d => vec![
                PairSignature::new(EvenOrthogonal, EvenOrthogonal),
                PairSignature::new(OddOrthogonal, OddOrthogonal),
            ],
            Family::D => vec![PairSignature::new(EvenOrthogonal, EvenOrthogonal)],
        }
    }
}

impl fmt::Display for TheoryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for TheoryLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => return Err(Error::ParseTheory(s.to_string())),
        };
        let rank = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::ParseTheory(s.to_string()))?;
        Ok(TheoryLabel { family, rank })
    }
}

impl Serialize for TheoryLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TheoryLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Type of one factor of a semisimple pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorKind {
    OddOrthogonal,
    EvenOrthogonal,
    Symplectic,
}

impl FactorKind {
    /// The family whose multiplicity rule and symbol rule apply to this factor.
    pub fn family(self) -> Family {
        match self {
            FactorKind::OddOrthogonal => Family::B,
            FactorKind::EvenOrthogonal => Family::D,
            FactorKind::Symplectic => Family::C,
        }
    }

    pub fn size_is_odd(self) -> bool {
        matches!(self, FactorKind::OddOrthogonal)
    }

    pub fn admits_size(self, size: u32) -> bool {
        (size % 2 == 1) == self.size_is_odd()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PairSignature {
    pub first: FactorKind,
    pub second: FactorKind,
}

impl PairSignature {
    pub fn new(first: FactorKind, second: FactorKind) -> Self {
        Self { first, second }
    }

    /// D pairs built from two odd-orthogonal factors.
    pub fn is_odd_d(self) -> bool {
        self.first == FactorKind::OddOrthogonal && self.second == FactorKind::OddOrthogonal
    }
}

/// A rigid semisimple operator `(λ′, λ″)`; unipotent when one factor is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperatorPair {
    pub theory: TheoryLabel,
    pub lambda1: Partition,
    pub lambda2: Partition,
    pub signature: PairSignature,
}

impl OperatorPair {
    /// Validates box counts and rigidity of both factors, inferring the
    /// signature from the size parity of `lambda1`.
    pub fn new(theory: TheoryLabel, lambda1: Partition, lambda2: Partition) -> Result<Self> {
        let odd_first = lambda1.size() % 2 == 1;
        let signature = theory
            .signatures(true)
            .into_iter()
            .find(|sig| sig.first.size_is_odd() == odd_first)
            .ok_or_else(|| Error::InvalidPair {
                theory,
                pair: pair_text(&lambda1, &lambda2),
                reason: "no factor signature matches the box count of λ′".into(),
            })?;
        Self::with_signature(
            theory,
            lambda1,
            lambda2,
            signature,
            RigidityRules::default(),
        )
    }

    pub fn with_signature(
        theory: TheoryLabel,
        lambda1: Partition,
        lambda2: Partition,
        signature: PairSignature,
        rules: RigidityRules,
    ) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidPair {
            theory,
            pair: pair_text(&lambda1, &lambda2),
            reason,
        };
        if !theory.signatures(true).contains(&signature) {
            return Err(invalid(format!("signature {signature:?} is not allowed")));
        }
        if lambda1.size() + lambda2.size() != theory.total_boxes() {
            return Err(invalid(format!(
                "factors hold {} boxes, expected {}",
                lambda1.size() + lambda2.size(),
                theory.total_boxes()
            )));
        }
        for (name, p, kind) in [
            ("λ′", &lambda1, signature.first),
            ("λ″", &lambda2, signature.second),
        ] {
            if !is_rigid_kind(p, kind, rules) {
                return Err(invalid(format!(
                    "{name} = {p} is not a rigid {kind:?} partition"
                )));
            }
        }
        Ok(Self {
            theory,
            lambda1,
            lambda2,
            signature,
        })
    }

    /// Constructor for pairs whose validity is already established.
    pub(crate) fn trusted(
        theory: TheoryLabel,
        lambda1: Partition,
        lambda2: Partition,
        signature: PairSignature,
    ) -> Self {
        Self {
            theory,
            lambda1,
            lambda2,
            signature,
        }
    }

    pub fn is_unipotent(&self) -> bool {
        self.lambda1.is_empty() || self.lambda2.is_empty()
    }

    /// Parses `'[2^2,1^9];[]'`.
    pub fn parse(theory: TheoryLabel, s: &str) -> Result<Self> {
        let (a, b) = s.split_once(';').ok_or_else(|| Error::ParsePartition {
            input: s.to_string(),
            reason: "expected two partitions separated by ';'".into(),
        })?;
        Self::new(theory, a.parse()?, b.parse()?)
    }
}

impl fmt::Display for OperatorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", pair_text(&self.lambda1, &self.lambda2))
    }
}

fn pair_text(a: &Partition, b: &Partition) -> String {
    format!("{a};{b}")
}
