//! Elliptic conjugacy classes of W(C_n) and W(D_n) and their minimal
//! reduction types.

use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::orbit::{Family, GroupType, Orbit};
use crate::partition::{partitions, IncSeq, Partition};
use crate::springer::WChar;

/// A class of totally negative cycles, given by the cycle lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EllipticClass {
    family: Family,
    cycle_type: Partition,
}

impl EllipticClass {
    pub fn new(family: Family, cycle_type: Partition) -> Result<EllipticClass> {
        let ok = match family {
            Family::C => !cycle_type.is_empty(),
            Family::D => !cycle_type.is_empty() && cycle_type.len().is_multiple_of(2),
            _ => return Err(Error::UnsupportedFamily(family)),
        };
        if !ok {
            return Err(Error::InvalidClass(format!("{family}:[w]={cycle_type}")));
        }
        Ok(EllipticClass { family, cycle_type })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.cycle_type.size()
    }

    pub fn group(&self) -> GroupType {
        GroupType::new(self.family, self.n())
    }

    pub fn cycle_type(&self) -> &Partition {
        &self.cycle_type
    }

    /// Minimal reduction type. C: (2n_i). D: (2n_i + ε_i).
    pub fn rt_min(&self) -> Orbit {
        let c = self.cycle_type.parts();
        let parts: Vec<u32> = match self.family {
            Family::C => c.iter().map(|x| 2 * x).collect(),
            _ => {
                let r = c.len();
                (0..r)
                    .map(|i| {
                        let ni = c[i];
                        let prev = if i == 0 { u32::MAX } else { c[i - 1] };
                        let next = if i + 1 == r { 0 } else { c[i + 1] };
                        // i is 0-based, so "odd index" means even i here
                        if i % 2 == 0 && ni < prev {
                            2 * ni + 1
                        } else if i % 2 == 1 && ni > next {
                            2 * ni - 1
                        } else {
                            2 * ni
                        }
                    })
                    .collect()
            }
        };
        // the first part always gets ε = +1 in type D, so never very even
        Orbit::new(self.group(), Partition::new(parts), None).expect("minimal reduction type is a valid orbit")
    }

    pub fn delta(&self) -> u64 {
        self.rt_min().springer_dim()
    }

    /// Closed formula for the Springer character of the minimal reduction
    /// type, computed from the cycle type directly.
    pub fn rtmin_char(&self) -> WChar {
        let mut inc: Vec<u32> = self.cycle_type.parts().iter().rev().copied().collect();
        match self.family {
            Family::C => {
                if inc.len() % 2 == 1 {
                    inc.insert(0, 0);
                }
                let r = inc.len() / 2;
                // 1-based n_{2i} is inc[2i-1], n_{2i-1} is inc[2i-2]
                let zeta: Vec<u32> = (0..r).map(|i| inc[2 * i + 1] + i as u32).collect();
                let eta: Vec<u32> = (0..r).map(|i| inc[2 * i] + i as u32).collect();
                WChar::new(Family::C, from_seq(zeta), from_seq(eta), None)
            }
            _ => {
                let r = inc.len();
                let mut zeta = Vec::new();
                let mut eta = Vec::new();
                for idx in 1..=r {
                    let ni = inc[idx - 1];
                    let half = (idx / 2) as u32;
                    let prev = if idx == 1 { 0 } else { inc[idx - 2] };
                    let next = if idx == r { u32::MAX } else { inc[idx] };
                    if idx % 2 == 1 {
                        if ni > prev {
                            zeta.push(ni - 1 + half);
                        } else {
                            eta.push(ni + half);
                        }
                    } else if ni == next {
                        zeta.push(ni - 1 + half);
                    } else {
                        eta.push(ni + half);
                    }
                }
                WChar::new(Family::D, from_seq(zeta), from_seq(eta), None)
            }
        }
    }
}

fn from_seq(s: Vec<u32>) -> Partition {
    IncSeq::new(s)
        .expect("formula yields an increasing sequence")
        .to_partition()
}

impl fmt::Display for EllipticClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}:[w]={}", self.family, self.n(), self.cycle_type)
    }
}

/// `C6:[w]=4,2`; the `[w]=` prefix and the rank are optional, but a
/// given rank must match.
impl FromStr for EllipticClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| parse_err("class", s, "expected <family><n>:[w]=<partition>"))?;
        let head = head.trim();
        let family: Family = head.get(..1).unwrap_or("").parse()?;
        let body = body.trim();
        let body = body.strip_prefix("[w]=").unwrap_or(body);
        let cls = EllipticClass::new(family, body.parse()?)?;
        let rank = &head[1..];
        if !rank.is_empty() && rank.parse::<u32>().ok() != Some(cls.n()) {
            return Err(parse_err("class", s, "rank does not match the cycle type"));
        }
        Ok(cls)
    }
}

/// All elliptic classes of W(X_n): every partition of n for C, those
/// with an even number of parts for D.
pub fn elliptic_classes(family: Family, n: u32) -> Vec<EllipticClass> {
    partitions(n)
        .into_iter()
        .filter_map(|p| EllipticClass::new(family, p).ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::springer::springer_char;

    fn cls(s: &str) -> EllipticClass {
        s.parse().unwrap()
    }

    fn o(s: &str) -> Orbit {
        s.parse().unwrap()
    }

    #[test]
    fn classes() {
        let c3: Vec<String> = elliptic_classes(Family::C, 3)
            .iter()
            .map(|c| c.cycle_type().to_string())
            .collect();
        assert_eq!(c3, vec!["3", "2,1", "1,1,1"]);
        let d4: Vec<String> = elliptic_classes(Family::D, 4)
            .iter()
            .map(|c| c.cycle_type().to_string())
            .collect();
        assert_eq!(d4, vec!["3,1", "2,2", "1,1,1,1"]);
        assert_eq!(elliptic_classes(Family::C, 1).len(), 1);
        assert!("D3:[w]=3".parse::<EllipticClass>().is_err());
        assert!("C4:[w]=2,1".parse::<EllipticClass>().is_err());
        assert_eq!(cls("C6:[w]=4,2").to_string(), "C6:[w]=4,2");
    }

    #[test]
    fn minimal_types() {
        assert_eq!(cls("C3:[w]=2,1").rt_min(), o("C3:4,2"));
        assert_eq!(cls("D4:[w]=3,1").rt_min(), o("D4:7,1"));
        assert_eq!(cls("D4:[w]=2,2").rt_min(), o("D4:5,3"));
        assert_eq!(cls("C5:[w]=5").delta(), 0);
        assert_eq!(cls("C3:[w]=2,1").delta(), 1);
        assert_eq!(cls("D4:[w]=2,2").delta(), 1);
    }

    #[test]
    fn character_formula() {
        let c = |s: &str| WChar::parse(Family::C, s).unwrap();
        assert_eq!(cls("C3:[w]=2,1").rtmin_char(), c("((2),(1))"));
        assert_eq!(cls("C6:[w]=4,2").rtmin_char(), c("((4),(2))"));
        assert_eq!(
            cls("D4:[w]=2,2").rtmin_char(),
            WChar::parse(Family::D, "((1),(3))").unwrap()
        );
        for s in ["C3:[w]=2,1", "C6:[w]=4,2", "D4:[w]=2,2", "D8:[w]=3,3,1,1"] {
            let k = cls(s);
            assert_eq!(k.rtmin_char(), springer_char(&k.rt_min()).without_label(), "{s}");
        }
    }
}
