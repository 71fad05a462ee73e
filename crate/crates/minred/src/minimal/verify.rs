//! Uniqueness check of the j-induced character per (class, k) cell.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::elliptic::{elliptic_classes, EllipticClass};
use crate::error::Result;
use crate::jinduction::{j_of_orbits, LeviIndex};
use crate::orbit::Family;
use crate::partition::Partition;

use super::grammar::block_candidates_with;
use super::skeleton::ARange;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub left: String,
    pub right: String,
    pub d_left: u64,
    pub d_right: u64,
    pub j_value: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub family: String,
    pub n: u32,
    pub class: String,
    pub k: u32,
    pub delta: u64,
    pub rtmin_orbit: String,
    pub rtmin_char: String,
    pub candidates: Vec<CandidateReport>,
    pub pass: bool,
}

impl VerifyReport {
    /// A cell where no grammar pair reaches δ, i.e. the parahoric is not
    /// relevant for the class.
    pub fn is_vacuous(&self) -> bool {
        self.candidates.is_empty()
    }
}

pub fn verify_class_with(cls: &EllipticClass, k: u32, range: ARange) -> Result<VerifyReport> {
    let levi = LeviIndex::interior(cls.family(), cls.n(), k)?;
    let delta = cls.delta();
    let target = cls.rtmin_char();
    let mut candidates = Vec::new();
    for c in block_candidates_with(cls, k, range)? {
        let j = j_of_orbits(&levi, &c.left, &c.right)?;
        let (dl, dr) = (c.left.springer_dim(), c.right.springer_dim());
        let pass = j.without_label() == target && dl + dr == delta;
        candidates.push(CandidateReport {
            left: c.left.to_string(),
            right: c.right.to_string(),
            d_left: dl,
            d_right: dr,
            j_value: j.to_string(),
            pass,
        });
    }
    let pass = candidates.iter().all(|c| c.pass);
    Ok(VerifyReport {
        family: cls.family().to_string(),
        n: cls.n(),
        class: cls.cycle_type().to_string(),
        k,
        delta,
        rtmin_orbit: cls.rt_min().to_string(),
        rtmin_char: target.to_string(),
        candidates,
        pass,
    })
}

pub fn verify_class(cls: &EllipticClass, k: u32) -> Result<VerifyReport> {
    verify_class_with(cls, k, ARange::Strict)
}

/// Which cells a sweep covers.
#[derive(Debug, Clone, Default)]
pub struct SweepFilter {
    pub k: Option<u32>,
    pub class: Option<Partition>,
    pub range: ARange,
    /// Run on the current thread only.
    pub sequential: bool,
}

/// Verifies every (class, interior k) cell with 1 ≤ n ≤ `max_n`.
/// Reports come back ordered by (n, class, k).
pub fn sweep(family: Family, max_n: u32, filter: &SweepFilter) -> Vec<VerifyReport> {
    let mut cells = Vec::new();
    for n in 1..=max_n {
        for cls in elliptic_classes(family, n) {
            if filter.class.as_ref().is_some_and(|c| c != cls.cycle_type()) {
                continue;
            }
            for k in LeviIndex::interior_splits(family, n) {
                if filter.k.is_some_and(|want| want != k) {
                    continue;
                }
                cells.push((cls.clone(), k));
            }
        }
    }
    let run = |(cls, k): &(EllipticClass, u32)| {
        verify_class_with(cls, *k, filter.range).expect("interior split by construction")
    };
    if filter.sequential {
        cells.iter().map(run).collect()
    } else {
        cells.par_iter().map(run).collect()
    }
}
