//! Integer partitions stored as weakly decreasing positive parts.
//!
//! Text syntax is a bracketed, comma separated list. Exponent shorthand is
//! accepted on input (`[2^2,1^9]`), output is always fully expanded.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Checked constructor: parts must be positive and weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Self { parts })
    }

    /// Sorts the values and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// `[p^m, ...]` from (part, multiplicity) pairs in any order.
    pub fn from_multiplicities<I: IntoIterator<Item = (u32, usize)>>(mults: I) -> Self {
        let mut parts = Vec::new();
        for (part, m) in mults {
            parts.extend(std::iter::repeat_n(part, m));
        }
        Self::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// 1-based part access, reading past the end as 0.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for &p in &self.parts {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    /// Conjugate partition: the i-th part counts the parts that are at least i.
    pub fn transpose(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `result_i = self_i + other_i`, the shorter one padded with zeros.
    pub fn partwise_sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let parts = (1..=n).map(|i| self.part(i) + other.part(i)).collect();
        Partition { parts }
    }

    /// Multiset union of the parts, sorted.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.parts.iter().peekable(), other.parts.iter().peekable());
        loop {
            let next = match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) if x >= y => a.next(),
                (Some(_), Some(_)) => b.next(),
                (Some(_), None) => a.next(),
                (None, Some(_)) => b.next(),
                (None, None) => break,
            };
            parts.extend(next.copied());
        }
        Partition { parts }
    }

    /// Descending lexicographic order on parts, used for deterministic listings.
    pub fn cmp_lex_desc(&self, other: &Partition) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::ParsePartition {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| fail("expected brackets"))?
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for item in body.split(',') {
            let item = item.trim();
            let (value, count) = match item.split_once('^') {
                Some((v, e)) => (v.trim(), e.trim()),
                None => (item, "1"),
            };
            let value: u32 = value.parse().map_err(|_| fail("part is not an integer"))?;
            let count: usize = count
                .parse()
                .map_err(|_| fail("exponent is not an integer"))?;
            if value == 0 {
                return Err(fail("zero parts are not allowed"));
            }
            parts.extend(std::iter::repeat_n(value, count));
        }
        Partition::new(parts).map_err(|_| fail("parts must be weakly decreasing"))
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            prefix.push(k);
            rec(rest - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("[2,2,1]").transpose(), p("[3,2]"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p("[2^2,1^9]").transpose(), p("[11,2]"));
    }

    #[test]
    fn partwise_sum_examples() {
        assert_eq!(p("[2,1]").partwise_sum(&p("[1,1]")), p("[3,2]"));
        assert_eq!(p("[4,1]").partwise_sum(&Partition::empty()), p("[4,1]"));
        assert_eq!(p("[1]").partwise_sum(&p("[1,1,1,1]")), p("[2,1,1,1]"));
    }

    #[test]
    fn merge_examples() {
        assert_eq!(p("[1]").merge(&p("[1^4]")), p("[1^5]"));
        assert_eq!(p("[3,1]").merge(&Partition::empty()), p("[3,1]"));
        assert_eq!(p("[2,2,1]").merge(&p("[2,1,1]")), p("[2,2,2,1,1,1]"));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("[2^2,1^9]").to_string(), "[2,2,1,1,1,1,1,1,1,1,1]");
        assert_eq!(p("[]"), Partition::empty());
        assert_eq!(p(" [ 3 , 1 ] ").parts(), &[3, 1]);
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[0]".parse::<Partition>().is_err());
        assert!("2,1".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
    }

    #[test]
    fn serde_rejects_increasing_parts() {
        let ok: Partition = serde_json::from_str("[3,1,1]").unwrap();
        assert_eq!(ok, p("[3,1,1]"));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(partitions_of(3), vec![p("[3]"), p("[2,1]"), p("[1,1,1]")]);
    }
}
