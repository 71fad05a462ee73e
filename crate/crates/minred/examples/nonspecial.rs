//! Lists the non-special orbits of a classical group.
//!
//!     cargo run --example nonspecial -- D6

use minred::orbit::list_orbits;
use minred::springer::springer_char;
use minred::GroupType;

fn main() {
    let group: GroupType = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "C3".into())
        .parse()
        .expect("group such as C3 or D6");
    for o in list_orbits(group) {
        if !o.is_special() {
            println!("{o}  d = {}  {}", o.springer_dim(), springer_char(&o));
        }
    }
}
