//! Induces orbits from a Levi C_k × C_{n-k} through j-induction and
//! reports which j-values are not Springer characters.
//!
//!     cargo run --example induced_orbits -- 6 2

use minred::jinduction::{j_of_orbits, ls_induce_orbit, LeviIndex};
use minred::orbit::list_orbits;
use minred::Family;

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u32>().expect("integer"));
    let n = args.next().unwrap_or(4);
    let k = args.next().unwrap_or(2);
    let levi = LeviIndex::interior(Family::C, n, k).unwrap();
    let (gl, gr) = levi.factor_groups();
    for a in list_orbits(gl) {
        for b in list_orbits(gr) {
            let j = j_of_orbits(&levi, &a, &b).unwrap();
            match ls_induce_orbit(&levi, &a, &b).unwrap() {
                Some(o) => println!("{a} × {b} -> {o}"),
                None => println!("{a} × {b} -> {j} (not Springer)"),
            }
        }
    }
}
