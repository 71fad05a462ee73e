//! Groups parahoric orbit pairs by j-value and prints the fibers with
//! more than one split.
//!
//!     cargo run --example kl_fibers -- C 6

use std::collections::BTreeSet;

use minred::minimal::kl_fibers;
use minred::Family;

fn main() {
    let mut args = std::env::args().skip(1);
    let family: Family = args.next().unwrap_or_else(|| "C".into()).parse().expect("family");
    let n: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let fibers = kl_fibers(family, n).unwrap();
    println!("{family}{n}: {} fibers", fibers.len());
    for (c, entries) in &fibers {
        let ks: BTreeSet<u32> = entries.iter().map(|e| e.k).collect();
        if ks.len() < 2 {
            continue;
        }
        println!("{c} (splits {ks:?})");
        for e in entries {
            println!("    k={} {} × {}", e.k, e.left, e.right);
        }
    }
}
