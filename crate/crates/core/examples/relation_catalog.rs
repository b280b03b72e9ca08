//! Runs the Heisenberg relation catalog and prints one line per relation.

use heisenberg_spans::verifier::run_relation_catalog;

fn main() {
    let max_card = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    for c in run_relation_catalog(max_card) {
        println!("{:<30} {:?} (histories from sets of size ≤ {})", c.name, c.status, c.window);
        println!("    {}", c.witness);
    }
}
