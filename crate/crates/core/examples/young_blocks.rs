//! Dimension blocks of the 2-linearized creation operator on Young's
//! lattice, and the number operator as tensoring with the permutation
//! representation.

use heisenberg_spans::linearize::{number_block, path_block, regular_equivalence_check};
use heisenberg_spans::young::young_lattice;

fn main() -> heisenberg_spans::Result<()> {
    for (i, j) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 4), (3, 6)] {
        println!("M_{{{i},{j}}}\n{}", path_block(i, j)?);
    }
    println!("N_4\n{}", number_block(4));
    for n in 1..=5 {
        println!("N_{n} equals tensoring with C^{n}: {}", regular_equivalence_check(n)?.passed);
    }
    let l = young_lattice(4);
    println!("Young's lattice to 4 boxes: {} nodes, {} edges", l.nodes.len(), l.edges.len());
    Ok(())
}
