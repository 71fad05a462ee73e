//! Nilpotent orbits of classical groups, given by Jordan types.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};
use crate::partition::{partitions, Dominance, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(c)
    }
}

impl Family {
    /// Parity rule on Jordan types: B/D pair up even parts, C pairs up
    /// odd parts, A has no condition.
    pub fn admits(self, p: &Partition) -> bool {
        let paired_parity = match self {
            Family::A => return true,
            Family::B | Family::D => 0,
            Family::C => 1,
        };
        p.multiplicities()
            .iter()
            .all(|&(v, m)| v % 2 != paired_parity || m % 2 == 0)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            _ => Err(parse_err("family", s, "expected one of A, B, C, D")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupType {
    pub family: Family,
    pub rank: u32,
}

impl GroupType {
    pub fn new(family: Family, rank: u32) -> Self {
        GroupType { family, rank }
    }

    /// Size of the partitions labelling orbits: n+1, 2n+1, 2n, 2n.
    pub fn partition_size(&self) -> u32 {
        match self.family {
            Family::A => self.rank + 1,
            Family::B => 2 * self.rank + 1,
            Family::C | Family::D => 2 * self.rank,
        }
    }

    /// Dimension of the group. Type A is taken as GL_N.
    pub fn dim(&self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            Family::A => (n + 1) * (n + 1),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
        }
    }

    /// Rank of the group the dimension refers to (N for GL_N).
    pub fn group_rank(&self) -> u64 {
        match self.family {
            Family::A => self.rank as u64 + 1,
            _ => self.rank as u64,
        }
    }

    pub fn positive_roots(&self) -> u64 {
        (self.dim() - self.group_rank()) / 2
    }

    /// Whether `p` is a Jordan type for this family (size not checked).
    pub fn admits(&self, p: &Partition) -> bool {
        self.family.admits(p)
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for GroupType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (fam, rank) = s.split_at(s.chars().next().map_or(0, |c| c.len_utf8()));
        let family: Family = fam.parse()?;
        let rank: u32 = rank
            .parse()
            .map_err(|_| parse_err("group", s, "expected e.g. C3 or D8"))?;
        if rank == 0 {
            return Err(parse_err("group", s, "rank must be positive"));
        }
        Ok(GroupType { family, rank })
    }
}

/// Which of the two orbits sharing a very even partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    I,
    II,
}

impl Label {
    pub fn suffix(self) -> &'static str {
        match self {
            Label::I => "+",
            Label::II => "-",
        }
    }

    pub(crate) fn from_suffix(s: &str) -> (&str, Option<Label>) {
        if let Some(rest) = s.strip_suffix('+') {
            (rest, Some(Label::I))
        } else if let Some(rest) = s.strip_suffix('-') {
            (rest, Some(Label::II))
        } else {
            (s, None)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orbit {
    group: GroupType,
    partition: Partition,
    label: Option<Label>,
}

/// A type D partition whose parts are all even.
pub fn is_very_even(family: Family, p: &Partition) -> bool {
    family == Family::D && !p.is_empty() && p.parts().iter().all(|x| x % 2 == 0)
}

impl Orbit {
    pub fn new(group: GroupType, partition: Partition, label: Option<Label>) -> Result<Orbit> {
        let expected = group.partition_size();
        if partition.size() != expected {
            return Err(Error::OrbitSize {
                group,
                expected,
                got: partition.size(),
            });
        }
        if !group.admits(&partition) {
            return Err(Error::Parity {
                group,
                partition: partition.to_string(),
            });
        }
        let very_even = is_very_even(group.family, &partition);
        match (very_even, label) {
            (true, None) => {
                return Err(Error::MissingLabel {
                    partition: partition.to_string(),
                })
            }
            (false, Some(_)) => {
                return Err(Error::UnexpectedLabel {
                    partition: partition.to_string(),
                })
            }
            _ => {}
        }
        debug_assert!(match group.family {
            Family::D => partition.len().is_multiple_of(2),
            Family::B => partition.len() % 2 == 1,
            _ => true,
        });
        Ok(Orbit {
            group,
            partition,
            label,
        })
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn family(&self) -> Family {
        self.group.family
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn label(&self) -> Option<Label> {
        self.label
    }

    pub fn is_very_even(&self) -> bool {
        self.label.is_some()
    }

    pub fn springer_dim(&self) -> u64 {
        match self.family() {
            Family::A => self.partition.n_weight(),
            Family::B => self.springer_dim_via_centralizer(),
            Family::C | Family::D => self.springer_dim_formula().expect("C/D formula"),
        }
    }

    /// The closed formula in λ*, available for C and D.
    pub fn springer_dim_formula(&self) -> Option<u64> {
        let mut c: Vec<i64> = self.partition.conjugate().parts().iter().map(|&x| x as i64).collect();
        if c.len() % 2 == 1 {
            c.push(0);
        }
        let sum: i64 = match self.family() {
            Family::D => c.chunks(2).map(|w| w[0] * (w[0] - 2) + w[1] * w[1]).sum(),
            Family::C => c.chunks(2).map(|w| w[0] * w[0] + w[1] * (w[1] - 2)).sum(),
            _ => return None,
        };
        debug_assert!(sum >= 0 && sum % 4 == 0);
        Some((sum / 4) as u64)
    }

    pub fn centralizer_dim(&self) -> u64 {
        let sq: u64 = self
            .partition
            .conjugate()
            .parts()
            .iter()
            .map(|&x| (x as u64) * (x as u64))
            .sum();
        let odd = self.partition.parts().iter().filter(|&&x| x % 2 == 1).count() as u64;
        match self.family() {
            Family::A => sq,
            Family::B | Family::D => (sq - odd) / 2,
            Family::C => (sq + odd) / 2,
        }
    }

    /// (dim 𝒩 − dim O)/2 with dim O = dim G − centralizer_dim.
    pub fn springer_dim_via_centralizer(&self) -> u64 {
        (self.centralizer_dim() - self.group.group_rank()) / 2
    }

    pub fn orbit_dim(&self) -> u64 {
        self.group.dim() - self.centralizer_dim()
    }

    pub fn is_special(&self) -> bool {
        let t = self.partition.conjugate();
        match self.family() {
            Family::A => true,
            Family::B => Family::B.admits(&t),
            Family::C | Family::D => Family::C.admits(&t),
        }
    }

    pub fn closure_leq(&self, other: &Orbit) -> Result<Dominance> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(self.group, other.group));
        }
        if self.partition == other.partition && self.label != other.label {
            return Ok(Dominance::Incomparable);
        }
        self.partition.dominance(&other.partition)
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}{}",
            self.group,
            self.partition,
            self.label.map_or("", Label::suffix)
        )
    }
}

/// `D8:4,4,4,4+`, `C3:4,1,1`, `B4:1^5 2^2`.
impl FromStr for Orbit {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (g, rest) = s
            .split_once(':')
            .ok_or_else(|| parse_err("orbit", s, "expected <group>:<partition>"))?;
        let group: GroupType = g.parse()?;
        let (body, label) = Label::from_suffix(rest.trim());
        Orbit::new(group, body.parse()?, label)
    }
}

/// All orbits, larger partitions first; very even partitions appear twice,
/// label I first.
pub fn list_orbits(group: GroupType) -> Vec<Orbit> {
    let mut out = Vec::new();
    for p in partitions(group.partition_size()) {
        if !group.admits(&p) {
            continue;
        }
        if is_very_even(group.family, &p) {
            for l in [Label::I, Label::II] {
                out.push(Orbit::new(group, p.clone(), Some(l)).unwrap());
            }
        } else {
            out.push(Orbit::new(group, p, None).unwrap());
        }
    }
    out
}
