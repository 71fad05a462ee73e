//! Springer correspondence for classical groups (trivial local systems)
//! and b-invariants of Weyl group characters.

use std::fmt;

use serde::Serialize;

use crate::error::{parse_err, Error, Result};
use crate::orbit::{list_orbits, Family, GroupType, Label, Orbit};
use crate::partition::{IncSeq, Partition};

/// An irreducible character of a classical Weyl group.
///
/// Type A uses `zeta` alone. B/C are ordered pairs. D pairs are
/// unordered and stored with the lexicographically larger half first;
/// a label may be attached only when the halves coincide.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WChar {
    family: Family,
    zeta: Partition,
    eta: Partition,
    label: Option<Label>,
}

impl WChar {
    pub fn type_a(lambda: Partition) -> WChar {
        WChar {
            family: Family::A,
            zeta: lambda,
            eta: Partition::empty(),
            label: None,
        }
    }

    /// For D the pair is put in canonical order; a label on a
    /// non-degenerate D pair, or on any other family, is dropped.
    pub fn new(family: Family, zeta: Partition, eta: Partition, label: Option<Label>) -> WChar {
        match family {
            Family::A => {
                assert!(eta.is_empty(), "type A characters have a single partition");
                WChar::type_a(zeta)
            }
            Family::B | Family::C => WChar {
                family,
                zeta,
                eta,
                label: None,
            },
            Family::D => {
                let (zeta, eta) = if zeta >= eta { (zeta, eta) } else { (eta, zeta) };
                let label = if zeta == eta { label } else { None };
                WChar {
                    family,
                    zeta,
                    eta,
                    label,
                }
            }
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn zeta(&self) -> &Partition {
        &self.zeta
    }

    pub fn eta(&self) -> &Partition {
        &self.eta
    }

    pub fn label(&self) -> Option<Label> {
        self.label
    }

    pub fn is_degenerate(&self) -> bool {
        self.family == Family::D && self.zeta == self.eta
    }

    /// |ζ| + |η|, which is the rank for B/C/D and N for type A.
    pub fn size(&self) -> u32 {
        self.zeta.size() + self.eta.size()
    }

    pub fn without_label(&self) -> WChar {
        WChar {
            label: None,
            ..self.clone()
        }
    }

    pub fn b_invariant(&self) -> u64 {
        let base = 2 * self.zeta.n_weight() + 2 * self.eta.n_weight();
        match self.family {
            Family::A => self.zeta.n_weight(),
            Family::B | Family::C => base + self.eta.size() as u64,
            Family::D => base + self.zeta.size().min(self.eta.size()) as u64,
        }
    }

    /// The trivial character of W(X_n).
    pub fn trivial(family: Family, n: u32) -> WChar {
        match family {
            Family::A => WChar::type_a(Partition::new(vec![n])),
            _ => WChar::new(family, Partition::new(vec![n]), Partition::empty(), None),
        }
    }

    /// Parses `((ζ),(η))` with an optional `+`/`-` suffix, or `(λ)` for A.
    pub fn parse(family: Family, s: &str) -> Result<WChar> {
        let t = s.trim();
        let (body, label) = Label::from_suffix(t);
        if family == Family::A {
            return Ok(WChar::type_a(body.parse()?));
        }
        let (z, e) = split_pair(body).ok_or_else(|| parse_err("character", s, "expected ((ζ),(η))"))?;
        Ok(WChar::new(family, z.parse()?, e.parse()?, label))
    }
}

/// Splits `((a),(b))` into `a` and `b`.
pub(crate) fn split_pair(s: &str) -> Option<(&str, &str)> {
    let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?.trim();
    let first = inner.strip_prefix('(')?;
    let close = first.find(')')?;
    let z = &first[..close];
    let rest = first[close + 1..].trim().strip_prefix(',')?.trim();
    let e = rest.strip_prefix('(')?.strip_suffix(')')?;
    if e.contains('(') || e.contains(')') {
        return None;
    }
    Some((z, e))
}

impl fmt::Display for WChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "({})", self.zeta),
            _ => write!(
                f,
                "(({}),({})){}",
                self.zeta,
                self.eta,
                self.label.map_or("", Label::suffix)
            ),
        }
    }
}

impl Serialize for WChar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl WChar {
    /// Family-tagged text form, e.g. `C:((2),(1))`.
    pub fn tagged(&self) -> String {
        format!("{}:{}", self.family, self)
    }

    pub fn from_tagged(s: &str) -> Result<WChar> {
        let (fam, body) = s
            .split_once(':')
            .ok_or_else(|| parse_err("character", s, "expected <family>:<character>"))?;
        WChar::parse(fam.parse()?, body)
    }
}

/// Springer character of an orbit (trivial local system).
pub fn springer_char(o: &Orbit) -> WChar {
    let family = o.family();
    if family == Family::A {
        return WChar::type_a(o.partition().clone());
    }
    let mut inc: Vec<u32> = o.partition().parts().iter().rev().copied().collect();
    let want_odd_len = family == Family::B;
    if (inc.len() % 2 == 1) != want_odd_len {
        inc.insert(0, 0);
    }
    let mut odds = Vec::new();
    let mut evens = Vec::new();
    for (i, x) in inc.iter().enumerate() {
        let s = x + i as u32;
        if s % 2 == 1 {
            odds.push((s - 1) / 2);
        } else {
            evens.push(s / 2);
        }
    }
    let expected_extra = usize::from(family == Family::B);
    assert_eq!(
        odds.len(),
        evens.len() + expected_extra,
        "parity count broken for {o}: an invalid orbit slipped through"
    );
    let zeta = IncSeq::new(odds).expect("odd entries increase").to_partition();
    let eta = IncSeq::new(evens).expect("even entries increase").to_partition();
    WChar::new(family, zeta, eta, o.label())
}

/// The orbit whose Springer character is `c`, if any. An unlabelled
/// degenerate D character matches the label I orbit.
pub fn springer_char_inverse(group: GroupType, c: &WChar) -> Result<Option<Orbit>> {
    if c.family() != group.family {
        return Err(Error::FamilyMismatch {
            expected: group.family,
            got: c.family(),
        });
    }
    let expected = match group.family {
        Family::A => group.partition_size(),
        _ => group.rank,
    };
    if c.size() != expected {
        return Err(Error::RankMismatch {
            expected,
            got: c.size(),
        });
    }
    Ok(list_orbits(group).into_iter().find(|o| {
        let s = springer_char(o);
        if c.label().is_some() {
            s == *c
        } else {
            s.without_label() == *c
        }
    }))
}

pub fn is_springer_value(group: GroupType, c: &WChar) -> bool {
    matches!(springer_char_inverse(group, c), Ok(Some(_)))
}

/// All ordered bipartitions (ζ, η) with |ζ|+|η| = n.
pub fn bipartitions(n: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for z in crate::partition::partitions(a) {
            for e in crate::partition::partitions(n - a) {
                out.push((z.clone(), e));
            }
        }
    }
    out
}
