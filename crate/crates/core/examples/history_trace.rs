//! Lists which histories a 2-cell relates, starting from a two-element set.

use heisenberg_spans::two_cell::Generator;
use heisenberg_spans::verifier::{trace_histories, TwoCellTerm};

fn main() -> heisenberg_spans::Result<()> {
    for g in [Generator::IId, Generator::IAdagA, Generator::EpsL] {
        let t = trace_histories(&TwoCellTerm::generator(g), 2, 4)?;
        print!("{}", t.to_text());
    }
    Ok(())
}
