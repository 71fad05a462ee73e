//! Per-index skeleton configurations and their depth-first enumeration.

use std::fmt;

use serde::Serialize;

use crate::elliptic::EllipticClass;
use crate::error::Result;
use crate::jinduction::LeviIndex;
use crate::orbit::{is_very_even, Family, GroupType, Label, Orbit};
use crate::partition::Partition;

use super::grammar::Block;

/// Range allowed for each a_i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ARange {
    /// −n_i < a_i < 0 for n_i > 1 and a_i ∈ {0, −1} for n_i = 1.
    #[default]
    Strict,
    /// a_i ∈ [−n_i, 0], the full lattice-chain range.
    Chain,
}

impl ARange {
    fn values(self, n: u32) -> Vec<i32> {
        let n = n as i32;
        match self {
            ARange::Strict if n > 1 => (-(n - 1)..0).collect(),
            ARange::Strict => vec![0, -1],
            ARange::Chain => (-n..=0).collect(),
        }
    }
}

/// The choice made at one index of the cycle type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct IndexChoice {
    pub n: u32,
    pub a: i32,
    pub delta: u8,
    pub delta_prime: u8,
}

impl IndexChoice {
    fn parts(family: Family, n: u32, a: i32, d: u8, dp: u8) -> Option<(u32, u32)> {
        let (n, d, dp) = (n as i64, d as i64, dp as i64);
        let a = a as i64;
        let (p, q) = match family {
            Family::C => (-2 * a + d, 2 * n - 2 + 2 * a + dp),
            _ => (-2 * a - 1 + d, 2 * n - 1 + 2 * a + dp),
        };
        (p >= 0 && q >= 0).then_some((p as u32, q as u32))
    }

    pub fn p(&self, family: Family) -> u32 {
        Self::parts(family, self.n, self.a, self.delta, self.delta_prime)
            .unwrap()
            .0
    }

    pub fn q(&self, family: Family) -> u32 {
        Self::parts(family, self.n, self.a, self.delta, self.delta_prime)
            .unwrap()
            .1
    }

    /// λ_i − 2n_i = δ_i + δ'_i − 2.
    pub fn excess(&self) -> i32 {
        self.delta as i32 + self.delta_prime as i32 - 2
    }

    pub fn shape(&self) -> (u8, u8) {
        (self.delta, self.delta_prime)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkeletonConfig {
    family: Family,
    entries: Vec<IndexChoice>,
}

impl SkeletonConfig {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn entries(&self) -> &[IndexChoice] {
        &self.entries
    }

    pub fn p_parts(&self) -> Partition {
        Partition::new(self.entries.iter().map(|e| e.p(self.family)).collect())
    }

    pub fn q_parts(&self) -> Partition {
        Partition::new(self.entries.iter().map(|e| e.q(self.family)).collect())
    }
}

impl fmt::Display for SkeletonConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("a={} d=({},{})", e.a, e.delta, e.delta_prime))
            .collect();
        write!(f, "[{}]", s.join("; "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Provenance {
    BlockGrammar,
    SkeletonEnumerator,
}

/// An orbit pair for the Levi X_k × X_{n−k}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CandidatePair {
    pub left: Orbit,
    pub right: Orbit,
    pub provenance: Provenance,
    pub blocks: Option<Vec<Block>>,
}

impl CandidatePair {
    pub fn d_sum(&self) -> u64 {
        self.left.springer_dim() + self.right.springer_dim()
    }

    pub fn key(&self) -> (Orbit, Orbit) {
        (self.left.clone(), self.right.clone())
    }
}

/// All orbits with Jordan type `p`: two for a very even D partition.
pub(crate) fn orbits_with_parts(levi_side: GroupType, p: Partition) -> Vec<Orbit> {
    if !levi_side.admits(&p) || p.size() != levi_side.partition_size() {
        return Vec::new();
    }
    if is_very_even(levi_side.family, &p) {
        [Label::I, Label::II]
            .into_iter()
            .map(|l| Orbit::new(levi_side, p.clone(), Some(l)).unwrap())
            .collect()
    } else {
        vec![Orbit::new(levi_side, p, None).unwrap()]
    }
}

/// Depth-first search over per-index choices.
///
/// `step` advances a filter state by one index shape (δ, δ') and
/// returns `None` to reject; `accept` says whether a final state is
/// complete. Every complete configuration with Σp = 2k and Σq = 2(n−k)
/// and the normalization of the a_i is handed to `emit`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn search<S: Copy>(
    family: Family,
    cycle: &[u32],
    k: u32,
    range: ARange,
    init: S,
    step: &dyn Fn(S, (u8, u8)) -> Option<S>,
    accept: &dyn Fn(S) -> bool,
    emit: &mut dyn FnMut(&[IndexChoice]),
) {
    let n: u32 = cycle.iter().sum();
    let options: Vec<Vec<IndexChoice>> = cycle
        .iter()
        .map(|&ni| {
            let mut v = Vec::new();
            for a in range.values(ni) {
                for d in 0..3u8 {
                    for dp in 0..3u8 {
                        if IndexChoice::parts(family, ni, a, d, dp).is_some() {
                            v.push(IndexChoice {
                                n: ni,
                                a,
                                delta: d,
                                delta_prime: dp,
                            });
                        }
                    }
                }
            }
            v
        })
        .collect();
    // suffix bounds on Σp and Σq for pruning
    let len = cycle.len();
    let mut min_p = vec![0u32; len + 1];
    let mut max_p = vec![0u32; len + 1];
    let mut min_q = vec![0u32; len + 1];
    let mut max_q = vec![0u32; len + 1];
    for i in (0..len).rev() {
        let ps = options[i].iter().map(|c| c.p(family));
        let qs = options[i].iter().map(|c| c.q(family));
        min_p[i] = min_p[i + 1] + ps.clone().min().unwrap_or(0);
        max_p[i] = max_p[i + 1] + ps.max().unwrap_or(0);
        min_q[i] = min_q[i + 1] + qs.clone().min().unwrap_or(0);
        max_q[i] = max_q[i + 1] + qs.max().unwrap_or(0);
    }
    let target_p = 2 * k;
    let target_q = 2 * (n - k);

    struct Ctx<'a, S> {
        family: Family,
        options: &'a [Vec<IndexChoice>],
        bounds: [&'a [u32]; 4],
        targets: (u32, u32),
        step: &'a dyn Fn(S, (u8, u8)) -> Option<S>,
        accept: &'a dyn Fn(S) -> bool,
    }

    fn rec<S: Copy>(
        ctx: &Ctx<'_, S>,
        i: usize,
        sp: u32,
        sq: u32,
        state: S,
        cur: &mut Vec<IndexChoice>,
        emit: &mut dyn FnMut(&[IndexChoice]),
    ) {
        let [min_p, max_p, min_q, max_q] = ctx.bounds;
        let (tp, tq) = ctx.targets;
        if sp + min_p[i] > tp || sp + max_p[i] < tp || sq + min_q[i] > tq || sq + max_q[i] < tq {
            return;
        }
        if i == ctx.options.len() {
            if (ctx.accept)(state) {
                emit(cur);
            }
            return;
        }
        for c in &ctx.options[i] {
            if let Some(prev) = cur.last() {
                // −a non-increasing and n + a non-increasing
                if -prev.a < -c.a || prev.n as i32 + prev.a < c.n as i32 + c.a {
                    continue;
                }
            }
            let Some(next) = (ctx.step)(state, c.shape()) else {
                continue;
            };
            cur.push(*c);
            rec(ctx, i + 1, sp + c.p(ctx.family), sq + c.q(ctx.family), next, cur, emit);
            cur.pop();
        }
    }

    let ctx = Ctx {
        family,
        options: &options,
        bounds: [&min_p, &max_p, &min_q, &max_q],
        targets: (target_p, target_q),
        step,
        accept,
    };
    rec(&ctx, 0, 0, 0, init, &mut Vec::new(), emit);
}

/// Running excess filter: prefix sums of λ_j − 2n_j stay non-negative,
/// and an index with (δ, δ') = (1, 1) needs a positive running excess
/// before it.
pub(crate) fn skeleton_step(s: i32, shape: (u8, u8)) -> Option<i32> {
    if shape == (1, 1) && s <= 0 {
        return None;
    }
    let next = s + shape.0 as i32 + shape.1 as i32 - 2;
    (next >= 0).then_some(next)
}

/// Builds the orbit pairs of a configuration for factors `gl` × `gr`;
/// empty when either side is not a Jordan type of its factor.
pub(crate) fn pairs_of(
    (gl, gr): (GroupType, GroupType),
    cfg: &SkeletonConfig,
    provenance: Provenance,
    blocks: Option<Vec<Block>>,
) -> Vec<CandidatePair> {
    let mut out = Vec::new();
    for left in orbits_with_parts(gl, cfg.p_parts()) {
        for right in orbits_with_parts(gr, cfg.q_parts()) {
            out.push(CandidatePair {
                left: left.clone(),
                right,
                provenance,
                blocks: blocks.clone(),
            });
        }
    }
    out
}

fn enumerate_for(
    cls: &EllipticClass,
    factors: (GroupType, GroupType),
    range: ARange,
) -> Vec<(SkeletonConfig, Vec<CandidatePair>)> {
    let family = cls.family();
    let mut out = Vec::new();
    search(
        family,
        cls.cycle_type().parts(),
        factors.0.rank,
        range,
        0i32,
        &skeleton_step,
        &|_| true,
        &mut |choices| {
            let cfg = config_from(family, choices);
            let pairs = pairs_of(factors, &cfg, Provenance::SkeletonEnumerator, None);
            if !pairs.is_empty() {
                out.push((cfg, pairs));
            }
        },
    );
    out
}

/// All skeleton configurations for (class, k) passing the normalization,
/// size, validity and prefix filters, each with its orbit pairs.
/// `k` must be interior.
pub fn enumerate_skeleton_with(
    cls: &EllipticClass,
    k: u32,
    range: ARange,
) -> Result<Vec<(SkeletonConfig, Vec<CandidatePair>)>> {
    let levi = LeviIndex::interior(cls.family(), cls.n(), k)?;
    Ok(enumerate_for(cls, levi.factor_groups(), range))
}

pub fn enumerate_skeleton(cls: &EllipticClass, k: u32) -> Result<Vec<(SkeletonConfig, Vec<CandidatePair>)>> {
    enumerate_skeleton_with(cls, k, ARange::Strict)
}

/// The same enumeration with the split placed at an end (k = 0 or
/// k = n), so one factor is trivial and the other is the whole group.
pub fn enumerate_skeleton_at_end(
    cls: &EllipticClass,
    at_top: bool,
    range: ARange,
) -> Vec<(SkeletonConfig, Vec<CandidatePair>)> {
    let (f, n) = (cls.family(), cls.n());
    let factors = if at_top {
        (GroupType::new(f, n), GroupType::new(f, 0))
    } else {
        (GroupType::new(f, 0), GroupType::new(f, n))
    };
    enumerate_for(cls, factors, range)
}

pub(crate) fn config_from(family: Family, choices: &[IndexChoice]) -> SkeletonConfig {
    SkeletonConfig {
        family,
        entries: choices.to_vec(),
    }
}
