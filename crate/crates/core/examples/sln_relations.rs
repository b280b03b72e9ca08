//! Checks the EF, EN and FN relations of U(sl_3) on coloured finite sets,
//! then compares the linearized generators with differential operators.

use heisenberg_spans::sln::{crosscheck_degroupoidification, run_sln_catalog, RelationForm};

fn main() -> heisenberg_spans::Result<()> {
    let (n, window) = (3, 5);
    for form in [RelationForm::Derived, RelationForm::Literal] {
        println!("{form:?} coefficients");
        for c in run_sln_catalog(n, window, form) {
            println!("  {:<26} {:?}  {} ≅ {}", c.name, c.status, c.lhs, c.rhs);
        }
    }
    for i in 1..=n {
        let r = crosscheck_degroupoidification(i, n, 3)?;
        println!("generators at colour {i}: E {} F {} N {}", r.e_equal, r.f_equal, r.n_equal);
    }
    Ok(())
}
