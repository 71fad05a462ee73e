//! Both maximal orbit pairs for the class (4,2) of C6 at k = 3, their
//! block decompositions, and the common j-value.

use minred::elliptic::EllipticClass;
use minred::jinduction::{j_of_orbits, LeviIndex};
use minred::minimal::block_candidates;

fn main() {
    let cls: EllipticClass = "C6:[w]=4,2".parse().unwrap();
    let levi = LeviIndex::interior(cls.family(), cls.n(), 3).unwrap();
    println!(
        "{cls}: rt_min {} delta {} character {}",
        cls.rt_min(),
        cls.delta(),
        cls.rtmin_char()
    );
    for pair in block_candidates(&cls, 3).unwrap() {
        let blocks: Vec<String> = pair
            .blocks
            .iter()
            .flatten()
            .map(|b| format!("({}) at {} len {}", b.kind.number(), b.start, b.len))
            .collect();
        println!(
            "  {} × {}  d = {}  j = {}  blocks {}",
            pair.left,
            pair.right,
            pair.d_sum(),
            j_of_orbits(&levi, &pair.left, &pair.right).unwrap(),
            blocks.join(", ")
        );
    }
}
