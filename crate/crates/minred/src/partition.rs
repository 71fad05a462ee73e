//! Partitions and strictly increasing sequences.
//!
//! Parts are stored weakly decreasing with no zeros. The increasing
//! notation only shows up through [`Partition::to_incseq`] and
//! [`IncSeq::to_partition`], where the padding length is explicit.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition {
    parts: Vec<u32>,
}

/// Result of comparing two partitions in the dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    LessOrEqual,
    Greater,
    Incomparable,
}

impl Partition {
    /// Builds a partition from parts in any order; zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts equal to `v`.
    pub fn multiplicity(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// Distinct parts with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let top = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=top)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// n(λ) = Σ (i−1) λ_i with parts in decreasing order.
    pub fn n_weight(&self) -> u64 {
        self.parts.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    /// Pads with zeros to length `len`, sorts increasingly and adds the
    /// staircase 0, 1, …, len−1.
    pub fn to_incseq(&self, len: usize) -> Result<IncSeq> {
        if len < self.parts.len() {
            return Err(Error::PaddingTooShort {
                len,
                parts: self.parts.len(),
            });
        }
        let pad = len - self.parts.len();
        let entries = (0..len)
            .map(|i| {
                let part = if i < pad { 0 } else { self.parts[len - 1 - i] };
                part + i as u32
            })
            .collect();
        Ok(IncSeq { entries })
    }

    /// Dominance comparison via prefix sums. Equal partitions compare as
    /// `LessOrEqual`.
    pub fn dominance(&self, other: &Partition) -> Result<Dominance> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        let (mut le, mut ge) = (true, true);
        for i in 0..len {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Less => ge = false,
                Ordering::Greater => le = false,
                Ordering::Equal => {}
            }
        }
        Ok(if le {
            Dominance::LessOrEqual
        } else if ge {
            Dominance::Greater
        } else {
            Dominance::Incomparable
        })
    }

    /// Componentwise sum, largest part to largest part.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        let parts = (0..len)
            .map(|i| self.parts.get(i).copied().unwrap_or(0) + other.parts.get(i).copied().unwrap_or(0))
            .collect();
        Partition { parts }
    }

    /// Exponent notation with increasing parts, e.g. `1^3 2^2 9^1`.
    pub fn exponent_form(&self) -> String {
        let mut m = self.multiplicities();
        m.reverse();
        m.iter().map(|(v, k)| format!("{v}^{k}")).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Accepts `9,2,2,1,1,1`, `1^3 2^2 9^1`, `(2, 1^4)` and mixtures.
/// Part order does not matter. An empty string or `()` is the empty
/// partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut body = s.trim();
        if body.starts_with('(') && body.ends_with(')') {
            body = body[1..body.len() - 1].trim();
        }
        let mut parts = Vec::new();
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let (v, m) = match tok.split_once('^') {
                Some((v, m)) => (v, m),
                None => (tok, "1"),
            };
            let v: u32 = v
                .parse()
                .map_err(|_| parse_err("partition", s, format!("bad part {tok:?}")))?;
            let m: usize = m
                .parse()
                .map_err(|_| parse_err("partition", s, format!("bad exponent {tok:?}")))?;
            if v == 0 {
                return Err(parse_err("partition", s, "parts must be positive"));
            }
            parts.extend(std::iter::repeat_n(v, m));
        }
        Ok(Partition::new(parts))
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

impl<const N: usize> From<[u32; N]> for Partition {
    fn from(parts: [u32; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// A strictly increasing sequence of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncSeq {
    entries: Vec<u32>,
}

impl IncSeq {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing(entries));
        }
        Ok(IncSeq { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Subtracts the staircase and drops zeros.
    pub fn to_partition(&self) -> Partition {
        Partition::new(self.entries.iter().enumerate().map(|(i, &x)| x - i as u32).collect())
    }

    /// The same class one step longer: {0} ∪ (s + 1).
    pub fn shift(&self) -> IncSeq {
        let mut entries = Vec::with_capacity(self.entries.len() + 1);
        entries.push(0);
        entries.extend(self.entries.iter().map(|x| x + 1));
        IncSeq { entries }
    }
}

pub fn from_incseq(s: &IncSeq) -> Partition {
    s.to_partition()
}

/// All partitions of `n` in reverse lexicographic order, so `(n)` comes
/// first and `(1^n)` last.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
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

    fn columns_by_brute_force(l: &Partition) -> Partition {
        let mut cols = Vec::new();
        for &len in l.parts() {
            for c in 0..len as usize {
                if cols.len() <= c {
                    cols.push(0);
                }
                cols[c] += 1;
            }
        }
        Partition::new(cols)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("4,2").conjugate(), p("2,2,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("5,4,4,3").conjugate(), p("4,4,4,3,1"));
        assert_eq!(p("5,4,4,3").conjugate(), columns_by_brute_force(&p("5,4,4,3")));
    }

    #[test]
    fn n_weight_examples() {
        assert_eq!(p("7").n_weight(), 0);
        assert_eq!(p("1,1,1,1").n_weight(), 6);
        assert_eq!(p("2,2,1").n_weight(), 4);
    }

    #[test]
    fn incseq_examples() {
        assert_eq!(p("2,1").to_incseq(2).unwrap().entries(), &[1, 3]);
        assert_eq!(Partition::empty().to_incseq(3).unwrap().entries(), &[0, 1, 2]);
        assert_eq!(p("2,2,1").to_incseq(3).unwrap().entries(), &[1, 3, 4]);
        assert!(p("2,2,1").to_incseq(2).is_err());
        for (s, want) in [(vec![1, 3], "2,1"), (vec![0, 1, 2], ""), (vec![1, 3, 4], "2,2,1")] {
            assert_eq!(from_incseq(&IncSeq::new(s).unwrap()), p(want));
        }
        assert!(IncSeq::new(vec![1, 1]).is_err());
    }

    #[test]
    fn dominance_examples() {
        use Dominance::*;
        assert_eq!(p("4,4,4,4").dominance(&p("5,4,4,3")).unwrap(), LessOrEqual);
        assert_eq!(p("5,4,4,3").dominance(&p("4,4,4,4")).unwrap(), Greater);
        assert_eq!(p("1,1,1,1,1,1").dominance(&p("6")).unwrap(), LessOrEqual);
        assert_eq!(p("3,3").dominance(&p("4,1,1")).unwrap(), Incomparable);
        assert!(p("3").dominance(&p("2")).is_err());
    }

    #[test]
    fn parsing_forms() {
        assert_eq!(p("1^3 2^2 9^1"), p("9,2,2,1,1,1"));
        assert_eq!(p("(2, 1^4)"), p("2,1,1,1,1"));
        assert_eq!(p("()"), Partition::empty());
        assert_eq!(p("2^2 1^5"), p("2,2,1,1,1,1,1"));
        assert!("2,x".parse::<Partition>().is_err());
        assert!("0,1".parse::<Partition>().is_err());
        assert_eq!(p("9,2,2,1,1,1").exponent_form(), "1^3 2^2 9^1");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(3), vec![p("3"), p("2,1"), p("1,1,1")]);
    }

    #[test]
    fn add_aligns_largest_parts() {
        assert_eq!(p("3,1").add(&p("2,2,1")), p("5,3,1"));
        assert_eq!(Partition::empty().add(&p("2")), p("2"));
    }
}
