//! The apex of A∘A† over each cardinality: two classes, "remove the element
//! just added" and "remove a different one".

use heisenberg_spans::span::{annihilation_span, compose, creation_span};

fn main() -> heisenberg_spans::Result<()> {
    let m = 6;
    let s = compose(&annihilation_span(m), &creation_span(m))?;
    for n in 0..m {
        let orders: Vec<usize> = (0..s.apex.len())
            .filter(|&x| s.source().cardinality_of(s.right.object(x)) == n)
            .map(|x| s.apex.aut(x).order())
            .collect();
        println!("n = {n}: {} classes, stabilizer orders {orders:?}", orders.len());
    }
    if let Some(pb) = &s.pullback {
        println!("{} double-coset classes in the weak pullback", pb.classes.len());
    }
    Ok(())
}
