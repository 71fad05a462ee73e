//! j-induction from W(X_k) × W(X_{n−k}) to W(X_n) for X = C, D.

use std::fmt;

use crate::error::{Error, Result};
use crate::orbit::{Family, GroupType, Orbit};
use crate::partition::{IncSeq, Partition};
use crate::springer::{springer_char, springer_char_inverse, WChar};

pub use crate::springer::is_springer_value;

/// A maximal parahoric of type C or D, indexed by its split point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeviIndex {
    family: Family,
    n: u32,
    k: u32,
}

impl LeviIndex {
    pub fn new(family: Family, n: u32, k: u32) -> Result<LeviIndex> {
        if !matches!(family, Family::C | Family::D) {
            return Err(Error::UnsupportedFamily(family));
        }
        if k > n || n == 0 {
            return Err(Error::InvalidSplit { family, n, k });
        }
        Ok(LeviIndex { family, n, k })
    }

    /// Like `new`, but rejects hyperspecial splits.
    pub fn interior(family: Family, n: u32, k: u32) -> Result<LeviIndex> {
        let l = LeviIndex::new(family, n, k)?;
        if l.is_hyperspecial() {
            return Err(Error::NotInterior { family, n, k });
        }
        Ok(l)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// C: k ∈ {0, n}. D: k ∈ {0, 1, n−1, n}.
    pub fn is_hyperspecial(&self) -> bool {
        match self.family {
            Family::D => self.k <= 1 || self.k + 1 >= self.n,
            _ => self.k == 0 || self.k == self.n,
        }
    }

    /// Ranks of the two factors; a hyperspecial split has one factor of
    /// rank 0 and the full group on the other side.
    pub fn factor_ranks(&self) -> (u32, u32) {
        if self.family == Family::D && self.is_hyperspecial() {
            if self.k <= 1 {
                (0, self.n)
            } else {
                (self.n, 0)
            }
        } else {
            (self.k, self.n - self.k)
        }
    }

    pub fn factor_groups(&self) -> (GroupType, GroupType) {
        let (a, b) = self.factor_ranks();
        (GroupType::new(self.family, a), GroupType::new(self.family, b))
    }

    pub fn group(&self) -> GroupType {
        GroupType::new(self.family, self.n)
    }

    /// Interior splits: 1..n−1 for C, 2..n−2 for D.
    pub fn interior_splits(family: Family, n: u32) -> Vec<u32> {
        (0..=n).filter(|&k| LeviIndex::interior(family, n, k).is_ok()).collect()
    }
}

impl fmt::Display for LeviIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.factor_ranks();
        write!(f, "{}{}x{}{}", self.family, a, self.family, b)
    }
}

fn check_factor(levi: &LeviIndex, c: &WChar, rank: u32) -> Result<()> {
    if c.family() != levi.family {
        return Err(Error::FamilyMismatch {
            expected: levi.family,
            got: c.family(),
        });
    }
    if c.size() != rank {
        return Err(Error::RankMismatch {
            expected: rank,
            got: c.size(),
        });
    }
    Ok(())
}

/// Adds two partitions through their increasing sequences of common
/// length `len`: s_i = a_i + b_i − i.
fn add_halves(a: &Partition, b: &Partition, len: usize) -> Partition {
    let sa = a.to_incseq(len).expect("len covers all halves");
    let sb = b.to_incseq(len).expect("len covers all halves");
    let sum: Vec<u32> = sa
        .entries()
        .iter()
        .zip(sb.entries())
        .enumerate()
        .map(|(i, (x, y))| x + y - i as u32)
        .collect();
    IncSeq::new(sum)
        .expect("sum of increasing sequences minus the staircase stays increasing")
        .to_partition()
}

pub fn j_induce(levi: &LeviIndex, left: &WChar, right: &WChar) -> Result<WChar> {
    let (rl, rr) = levi.factor_ranks();
    check_factor(levi, left, rl)?;
    check_factor(levi, right, rr)?;
    if levi.is_hyperspecial() {
        return Ok(if rl == 0 { right.clone() } else { left.clone() });
    }
    let len = [left.zeta(), left.eta(), right.zeta(), right.eta()]
        .iter()
        .map(|p| p.len())
        .max()
        .unwrap_or(0);
    let zeta = add_halves(left.zeta(), right.zeta(), len);
    let eta = add_halves(left.eta(), right.eta(), len);
    let label = left.label().or(right.label());
    Ok(WChar::new(levi.family, zeta, eta, label))
}

/// j-induction of the Springer characters of a pair of orbits.
pub fn j_of_orbits(levi: &LeviIndex, o1: &Orbit, o2: &Orbit) -> Result<WChar> {
    j_induce(levi, &springer_char(o1), &springer_char(o2))
}

/// Lusztig–Spaltenstein induction read through the Springer
/// correspondence; `None` when the j-value is not a Springer character.
pub fn ls_induce_orbit(levi: &LeviIndex, o1: &Orbit, o2: &Orbit) -> Result<Option<Orbit>> {
    let j = j_of_orbits(levi, o1, o2)?;
    springer_char_inverse(levi.group(), &j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(f: Family, s: &str) -> WChar {
        WChar::parse(f, s).unwrap()
    }

    fn o(s: &str) -> Orbit {
        s.parse().unwrap()
    }

    #[test]
    fn levi_rules() {
        assert!(LeviIndex::new(Family::C, 6, 3).unwrap().k() == 3);
        assert!(LeviIndex::new(Family::B, 6, 3).is_err());
        assert!(LeviIndex::new(Family::C, 6, 7).is_err());
        assert!(LeviIndex::interior(Family::D, 6, 1).is_err());
        assert_eq!(LeviIndex::interior_splits(Family::D, 6), vec![2, 3, 4]);
        assert_eq!(LeviIndex::interior_splits(Family::C, 3), vec![1, 2]);
        assert_eq!(LeviIndex::new(Family::D, 6, 5).unwrap().factor_ranks(), (6, 0));
        assert_eq!(LeviIndex::new(Family::D, 6, 1).unwrap().factor_ranks(), (0, 6));
    }

    #[test]
    fn pair_from_the_symplectic_example() {
        let levi = LeviIndex::new(Family::C, 6, 3).unwrap();
        let a = j_of_orbits(&levi, &o("C3:4,2"), &o("C3:4,2")).unwrap();
        let b = j_of_orbits(&levi, &o("C3:3,3"), &o("C3:6")).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, ch(Family::C, "((4),(2))"));
        assert_eq!(
            ls_induce_orbit(&levi, &o("C3:4,2"), &o("C3:4,2")).unwrap(),
            Some(o("C6:8,4"))
        );
        assert_eq!(
            ls_induce_orbit(&levi, &o("C3:3,3"), &o("C3:6")).unwrap(),
            Some(o("C6:8,4"))
        );
    }

    #[test]
    fn small_cases() {
        let levi = LeviIndex::new(Family::C, 3, 1).unwrap();
        let j = j_induce(&levi, &ch(Family::C, "((1),())"), &ch(Family::C, "((1),(1))")).unwrap();
        assert_eq!(j, ch(Family::C, "((2),(1))"));
        for n in 2..7 {
            for k in 1..n {
                let levi = LeviIndex::new(Family::C, n, k).unwrap();
                let t = j_induce(&levi, &WChar::trivial(Family::C, k), &WChar::trivial(Family::C, n - k)).unwrap();
                assert_eq!(t, WChar::trivial(Family::C, n));
            }
        }
    }

    #[test]
    fn hyperspecial_is_identity() {
        let levi = LeviIndex::new(Family::D, 5, 4).unwrap();
        let c = ch(Family::D, "((3),(1,1))");
        let empty = WChar::new(Family::D, Partition::empty(), Partition::empty(), None);
        assert_eq!(j_induce(&levi, &c, &empty).unwrap(), c);
        assert!(j_induce(&levi, &empty, &c).is_err());
    }

    #[test]
    fn factor_checks() {
        let levi = LeviIndex::new(Family::C, 3, 1).unwrap();
        let bad = j_induce(&levi, &ch(Family::C, "((2),())"), &ch(Family::C, "((2),())"));
        assert!(matches!(bad, Err(Error::RankMismatch { .. })));
        let bad = j_induce(&levi, &ch(Family::D, "((1),())"), &ch(Family::C, "((2),())"));
        assert!(matches!(bad, Err(Error::FamilyMismatch { .. })));
    }

    #[test]
    fn regular_induces_to_regular() {
        let levi = LeviIndex::new(Family::D, 7, 3).unwrap();
        let got = ls_induce_orbit(&levi, &o("D3:5,1"), &o("D4:7,1")).unwrap();
        assert_eq!(got, Some(o("D7:13,1")));
    }
}
