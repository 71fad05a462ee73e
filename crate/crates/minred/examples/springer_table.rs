//! Prints every orbit of a group with d_O, specialness and Springer
//! character.
//!
//!     cargo run --example springer_table -- D5

use minred::orbit::list_orbits;
use minred::springer::springer_char;
use minred::GroupType;

fn main() {
    let group: GroupType = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "C3".into())
        .parse()
        .expect("group such as C3, B4 or D5");
    println!("{:<24} {:>4}  {:<8} character", "orbit", "d_O", "special");
    for o in list_orbits(group) {
        let spr = springer_char(&o);
        assert_eq!(spr.b_invariant(), o.springer_dim());
        println!(
            "{:<24} {:>4}  {:<8} {}",
            o.to_string(),
            o.springer_dim(),
            if o.is_special() { "yes" } else { "no" },
            spr
        );
    }
}
