//! Checks every elliptic class of C_n and D_n at every interior split:
//! all maximal block pairs must j-induce to the minimal reduction type's
//! character.
//!
//!     cargo run --release --example uniqueness_sweep -- 9

use std::time::Instant;

use minred::minimal::{sweep, SweepFilter};
use minred::Family;

fn main() {
    let max_n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for family in [Family::C, Family::D] {
        let t = Instant::now();
        let reports = sweep(family, max_n, &SweepFilter::default());
        let cells = reports.len();
        let vacuous = reports.iter().filter(|r| r.is_vacuous()).count();
        let pairs: usize = reports.iter().map(|r| r.candidates.len()).sum();
        let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
        println!(
            "{family}, n <= {max_n}: {cells} cells, {pairs} maximal pairs, {vacuous} cells with none, {} failures ({:.2?})",
            failed.len(),
            t.elapsed()
        );
        for r in failed.iter().take(10) {
            println!("  FAIL {}{} [w]={} k={}", r.family, r.n, r.class, r.k);
        }
    }
}
