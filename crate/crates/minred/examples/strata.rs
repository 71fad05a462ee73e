//! Stratum labels for group elements su of Sp(12) whose semisimple part
//! has centralizer Sp(6) × Sp(6).

use minred::minimal::stratum_label;
use minred::orbit::list_orbits;
use minred::{Family, GroupType};

fn main() {
    let g = GroupType::new(Family::C, 3);
    let orbits = list_orbits(g);
    for a in &orbits {
        for b in &orbits {
            let s = stratum_label(Family::C, 6, 3, a, b).unwrap();
            println!("{} × {} -> {s}", a.partition(), b.partition());
        }
    }
}
