//! Module-level blocks, the S_k action on multiplicity spaces, symmetrized
//! blocks, and the Khovanov isomorphism at dimension level.

use heisenberg_spans::linearize::{
    antisymmetrized_block, explicit_mu_action, khovanov_iso_check, module_block, resolve_convention, symmetrized_block,
};
use heisenberg_spans::young::part;

fn main() -> heisenberg_spans::Result<()> {
    let mb = module_block(3, 3)?;
    let chi = mb.character(&part(&[2, 1]), &part(&[3, 2, 1])).expect("entry exists");
    println!("character of the (2,1) -> (3,2,1) entry: {chi}");
    let action = explicit_mu_action(3, &part(&[2, 1]), &part(&[3, 2, 1]))?;
    println!("decomposition: {}", action.decomposition);
    let r = resolve_convention()?;
    println!("transposition acts on (2) -> (2,1,1) by {}; using {:?}", r.scalar, r.convention);
    println!("symmetrized M_{{2,4}}\n{}", symmetrized_block(2, 2, r.convention)?);
    println!("antisymmetrized M_{{2,4}}\n{}", antisymmetrized_block(2, 2, r.convention)?);
    for (n, m) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let k = khovanov_iso_check(n, m, 6)?;
        println!("Khovanov (n={n}, m={m}) through stage 6: {}", k.passed);
    }
    Ok(())
}
