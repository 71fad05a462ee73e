//! Minimal reduction types and δ for every elliptic class of C_n and D_n.
//!
//!     cargo run --example rtmin -- 6

use minred::elliptic::elliptic_classes;
use minred::Family;

fn main() {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    for family in [Family::C, Family::D] {
        for cls in elliptic_classes(family, n) {
            println!(
                "{:<20} rt_min {:<24} delta {:>3}  {}",
                cls.to_string(),
                cls.rt_min().to_string(),
                cls.delta(),
                cls.rtmin_char()
            );
        }
    }
}
