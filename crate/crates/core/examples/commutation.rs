//! A∘A† ≅ A†∘A ⊕ id as spans of groupoids, with the witness. The
//! truncation is exact for sources of size below the cutoff.

use heisenberg_spans::span::{
    annihilation_span, compose, creation_span, direct_sum, fs_shared, identity_span, restrict_to_source,
    spans_isomorphic, tameness_report,
};

fn main() -> heisenberg_spans::Result<()> {
    let m = 6;
    let (a, ad) = (annihilation_span(m), creation_span(m));
    let lhs = restrict_to_source(&compose(&a, &ad)?, m - 1);
    let rhs = restrict_to_source(&direct_sum(&compose(&ad, &a)?, &identity_span(&fs_shared(m, 1), m))?, m - 1);
    match spans_isomorphic(&lhs, &rhs) {
        Some(w) => {
            println!("isomorphic; apex classes matched as {:?}", w.component_map);
            println!("witness checks out: {}", w.verify(&lhs, &rhs));
        }
        None => println!("not isomorphic"),
    }
    let t = tameness_report(&lhs);
    println!("{}", serde_json::to_string_pretty(&t).expect("serializable"));
    Ok(())
}
