//! Stuff types over finite sets, their generating functions, and vacuum
//! moments of the field a + a†.

use heisenberg_spans::linearize::{
    act_on_stuff_type, identity_stuff_type, pointed_set_stuff_type, stuff_type_gf, vacuum_moment,
};
use heisenberg_spans::report::rational_string;
use heisenberg_spans::span::creation_span;

fn show(name: &str, coeffs: &[num_rational::BigRational]) {
    let s: Vec<String> = coeffs.iter().map(rational_string).collect();
    println!("{name:<12} {}", s.join(", "));
}

fn main() -> heisenberg_spans::Result<()> {
    let m = 8;
    let sets = identity_stuff_type(m);
    show("e^z", &stuff_type_gf(&sets, m)?);
    show("z e^z", &stuff_type_gf(&pointed_set_stuff_type(m)?, m)?);
    show("A† e^z", &stuff_type_gf(&act_on_stuff_type(&creation_span(m), &sets)?, m)?);
    for k in 0..=6 {
        println!("<0|(a + a†)^{k}|0> = {}", rational_string(&vacuum_moment(k, m)?));
    }
    Ok(())
}
