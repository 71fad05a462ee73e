//! Recomputes the classical cells of the embedded tables and prints the
//! mismatches.

use minred::tables::{check_tables, embedded};

fn main() {
    for t in embedded().unwrap() {
        println!("table {:>2}: {:<60} {} rows", t.id, t.title, t.records.len());
    }
    let report = check_tables().unwrap();
    for c in report.mismatches() {
        println!(
            "table {} line {} {} [{}]: printed {} recomputed {}",
            c.table, c.line, c.row, c.column, c.printed, c.recomputed
        );
    }
    println!("{} cells, pass = {}", report.cells.len(), report.pass);
}
