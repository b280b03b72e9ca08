//! Degroupoidification sends A and A† to the ladder matrices of the Fock
//! space, and the categorified commutation relation to [a, a†] = 1.

use heisenberg_spans::linearize::{degroupoidify_span, ladder_matrices};
use heisenberg_spans::matrix::QMatrix;
use heisenberg_spans::span::{word_span, Letter};

fn main() -> heisenberg_spans::Result<()> {
    let m = 7;
    let (a, ad) = ladder_matrices(m)?;
    println!("D(A) =\n{a}");
    println!("D(A†) =\n{ad}");
    let comm = &(&a * &ad) - &(&ad * &a);
    println!("[D(A), D(A†)] is the identity below the cutoff: {}", comm.top_left(m, m) == QMatrix::identity(m));
    let d = degroupoidify_span(&*word_span(&[Letter::Lower, Letter::Lower, Letter::Raise], m)?)?;
    println!("D(A∘A∘A†) =\n{}", d.matrix);
    Ok(())
}
