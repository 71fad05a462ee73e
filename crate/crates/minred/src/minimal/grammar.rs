//! Block grammar for the orbit pairs of maximal d at a split k.
//!
//! In terms of the per-index shapes (δ_i, δ'_i) a configuration splits
//! into consecutive blocks:
//!
//! * `Single`: one index with (0,2) or (2,0), so λ_i = 2n_i;
//! * `LeftOpen`: (2,1), then (1,1) m times, then (1,0) for odd m or
//!   (0,1) for even m;
//! * `RightOpen`: the mirror, (1,2), (1,1)^m, then (0,1) for odd m or
//!   (1,0) for even m.
//!
//! Odd m gives blocks of length 2l+1 with λ = 2n+1, 2n, …, 2n, 2n−1.
//! Even m gives the even-length blocks that some maximal pairs need,
//! e.g. (3,3) × (6) for the class (4,2) at k = 3 in C6.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::elliptic::EllipticClass;
use crate::error::Result;
use crate::jinduction::LeviIndex;

use super::skeleton::{config_from, pairs_of, search, ARange, CandidatePair, Provenance, SkeletonConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BlockKind {
    Single,
    LeftOpen,
    RightOpen,
}

impl BlockKind {
    /// Numbering used when printing blocks: (1), (2), (3).
    pub fn number(self) -> u8 {
        match self {
            BlockKind::Single => 1,
            BlockKind::LeftOpen => 2,
            BlockKind::RightOpen => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Block {
    pub kind: BlockKind,
    pub start: usize,
    pub len: usize,
}

/// Parser state between indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum GState {
    Closed,
    Open { kind: BlockKind, middle: usize },
}

pub(crate) fn grammar_step(s: GState, shape: (u8, u8)) -> Option<GState> {
    match s {
        GState::Closed => match shape {
            (0, 2) | (2, 0) => Some(GState::Closed),
            (2, 1) => Some(GState::Open {
                kind: BlockKind::LeftOpen,
                middle: 0,
            }),
            (1, 2) => Some(GState::Open {
                kind: BlockKind::RightOpen,
                middle: 0,
            }),
            _ => None,
        },
        GState::Open { kind, middle } => {
            if shape == (1, 1) {
                return Some(GState::Open {
                    kind,
                    middle: middle + 1,
                });
            }
            let odd = middle % 2 == 1;
            let end = match (kind, odd) {
                (BlockKind::LeftOpen, true) | (BlockKind::RightOpen, false) => (1, 0),
                _ => (0, 1),
            };
            (shape == end).then_some(GState::Closed)
        }
    }
}

/// Splits a configuration into grammar blocks, or `None` if it does not
/// parse.
pub fn parse_blocks(cfg: &SkeletonConfig) -> Option<Vec<Block>> {
    let mut state = GState::Closed;
    let mut blocks = Vec::new();
    let mut start = 0;
    for (i, e) in cfg.entries().iter().enumerate() {
        let next = grammar_step(state, e.shape())?;
        if next == GState::Closed {
            let kind = match state {
                GState::Closed => BlockKind::Single,
                GState::Open { kind, .. } => kind,
            };
            blocks.push(Block {
                kind,
                start,
                len: i + 1 - start,
            });
            start = i + 1;
        }
        state = next;
    }
    (state == GState::Closed).then_some(blocks)
}

/// Every grammar-shaped configuration with valid orbit pairs, regardless
/// of its d-sum.
pub fn grammar_configs(
    cls: &EllipticClass,
    k: u32,
    range: ARange,
) -> Result<Vec<(SkeletonConfig, Vec<CandidatePair>)>> {
    let levi = LeviIndex::interior(cls.family(), cls.n(), k)?;
    let family = cls.family();
    let mut out = Vec::new();
    search(
        family,
        cls.cycle_type().parts(),
        k,
        range,
        GState::Closed,
        &grammar_step,
        &|s| s == GState::Closed,
        &mut |choices| {
            let cfg = config_from(family, choices);
            let blocks = parse_blocks(&cfg).expect("search only follows grammar transitions");
            let pairs = pairs_of(levi.factor_groups(), &cfg, Provenance::BlockGrammar, Some(blocks));
            if !pairs.is_empty() {
                out.push((cfg, pairs));
            }
        },
    );
    Ok(out)
}

/// Grammar pairs attaining d(left) + d(right) = δ_[w], deduplicated by
/// orbit pair (the first block decomposition found is kept).
pub fn block_candidates_with(cls: &EllipticClass, k: u32, range: ARange) -> Result<Vec<CandidatePair>> {
    let delta = cls.delta();
    let mut seen = BTreeMap::new();
    for (_, pairs) in grammar_configs(cls, k, range)? {
        for p in pairs {
            if p.d_sum() == delta {
                seen.entry(p.key()).or_insert(p);
            }
        }
    }
    Ok(seen.into_values().collect())
}

pub fn block_candidates(cls: &EllipticClass, k: u32) -> Result<Vec<CandidatePair>> {
    block_candidates_with(cls, k, ARange::Strict)
}
