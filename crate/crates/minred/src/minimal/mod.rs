//! Minimal reduction types at maximal parahorics: skeleton enumeration,
//! the block grammar, the verifier and the j-value fibers built on them.

pub mod grammar;
pub mod skeleton;
pub mod special;
pub mod verify;

pub use grammar::{block_candidates, block_candidates_with, grammar_configs, parse_blocks, Block, BlockKind};
pub use skeleton::{
    enumerate_skeleton, enumerate_skeleton_at_end, enumerate_skeleton_with, ARange, CandidatePair, IndexChoice,
    Provenance, SkeletonConfig,
};
pub use special::{
    count_irreducibles, kl_fibers, missing_two_special, parahoric_domain, stratum_label, two_special_set, FiberEntry,
};
pub use verify::{sweep, verify_class, verify_class_with, CandidateReport, SweepFilter, VerifyReport};
