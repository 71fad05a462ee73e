//! Counts 2-special characters of W(C_n) and lists those that are not.

use minred::minimal::{count_irreducibles, missing_two_special, two_special_set};
use minred::Family;

fn main() {
    for n in 1..=7 {
        let have = two_special_set(Family::C, n).unwrap().len();
        let all = count_irreducibles(Family::C, n).unwrap();
        let missing: Vec<String> = missing_two_special(Family::C, n)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("C{n}: {have} of {all}; missing {}", missing.join(" "));
    }
}
