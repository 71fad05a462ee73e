//! 2-special characters, Kazhdan–Lusztig fibers and stratum labels, all
//! read off j-values of Springer characters over maximal parahorics.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::jinduction::{j_of_orbits, LeviIndex};
use crate::orbit::{list_orbits, Family, Orbit};
use crate::springer::{bipartitions, WChar};

/// One point of the domain: a split and an orbit pair of its Levi.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiberEntry {
    pub k: u32,
    pub left: Orbit,
    pub right: Orbit,
}

/// Every (k, O_1, O_2) for k = 0..=n, hyperspecial splits included.
pub fn parahoric_domain(family: Family, n: u32) -> Result<Vec<FiberEntry>> {
    let mut out = Vec::new();
    for k in 0..=n {
        let levi = LeviIndex::new(family, n, k)?;
        let (gl, gr) = levi.factor_groups();
        let rights = list_orbits(gr);
        for left in list_orbits(gl) {
            for right in &rights {
                out.push(FiberEntry {
                    k,
                    left: left.clone(),
                    right: right.clone(),
                });
            }
        }
    }
    Ok(out)
}

fn j_value(family: Family, n: u32, e: &FiberEntry) -> Result<WChar> {
    j_of_orbits(&LeviIndex::new(family, n, e.k)?, &e.left, &e.right)
}

/// Groups the domain by j-value. Entries share a fiber exactly when their
/// parahoric Kazhdan–Lusztig images agree.
pub fn kl_fibers(family: Family, n: u32) -> Result<BTreeMap<WChar, Vec<FiberEntry>>> {
    let mut fibers: BTreeMap<WChar, Vec<FiberEntry>> = BTreeMap::new();
    for e in parahoric_domain(family, n)? {
        fibers.entry(j_value(family, n, &e)?).or_default().push(e);
    }
    Ok(fibers)
}

pub fn two_special_set(family: Family, n: u32) -> Result<BTreeSet<WChar>> {
    Ok(kl_fibers(family, n)?.into_keys().collect())
}

/// Characters of W(X_n) that are not 2-special (B/C only, where every
/// ordered bipartition is a character).
pub fn missing_two_special(family: Family, n: u32) -> Result<Vec<WChar>> {
    count_irreducibles(family, n)?;
    let set = two_special_set(family, n)?;
    Ok(bipartitions(n)
        .into_iter()
        .map(|(z, e)| WChar::new(family, z, e, None))
        .filter(|c| !set.contains(c))
        .collect())
}

/// σ-label of g = su with centralizer of s of type X_k × X_{n−k} and u
/// of Jordan type (o1, o2).
pub fn stratum_label(family: Family, n: u32, k: u32, o1: &Orbit, o2: &Orbit) -> Result<WChar> {
    let levi = LeviIndex::new(family, n, k)?;
    let (gl, gr) = levi.factor_groups();
    if o1.group() != gl {
        return Err(Error::GroupMismatch(o1.group(), gl));
    }
    if o2.group() != gr {
        return Err(Error::GroupMismatch(o2.group(), gr));
    }
    j_of_orbits(&levi, o1, o2)
}

/// Number of ordered bipartitions of n.
pub fn count_irreducibles(family: Family, n: u32) -> Result<u64> {
    match family {
        Family::B | Family::C => Ok(bipartitions(n).len() as u64),
        f => Err(Error::UnsupportedFamily(f)),
    }
}
