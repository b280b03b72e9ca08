//! Linearization of spans: degroupoidification to rational matrices, and
//! the dimension and module blocks of 2-linearization over Young's lattice.

mod blocks;
mod mu_action;
mod stuff;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::report::rational_string;
use crate::span::{annihilation_span, creation_span, Span};

pub use blocks::{
    antisymmetrized_block, khovanov_iso_check, module_block, number_block, path_block, regular_equivalence_check,
    strip_block, symmetrized_block, DimBlock, KhovanovReport, KhovanovStage, ModuleBlock, RegularEquivalenceReport,
    SymConvention,
};
pub use mu_action::{explicit_mu_action, resolve_convention, ConventionResolution, MuAction};
pub use stuff::{
    act_on_stuff_type, empty_stuff_type, identity_stuff_type, pointed_set_stuff_type, stuff_type_gf,
    stuff_type_profile_weights, vacuum_moment, StuffType,
};

/// A rational matrix with boundary classes (cardinality profiles) as labels.
#[derive(Clone, Debug, PartialEq)]
pub struct Degroupoidified {
    pub rows: Vec<Vec<usize>>,
    pub cols: Vec<Vec<usize>>,
    pub matrix: QMatrix,
}

impl Serialize for Degroupoidified {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Vec<String>> = (0..self.matrix.rows())
            .map(|i| self.matrix.row(i).iter().map(rational_string).collect())
            .collect();
        let mut st = s.serialize_struct("Degroupoidified", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// `D(S)`: entry `[b][a] = Σ |Aut a| / |Aut x|` over apex classes `x` with
/// right leg at `a` and left leg at `b`.
pub fn degroupoidify_span(s: &Span) -> Result<Degroupoidified> {
    let src = s.source();
    let tgt = s.target();
    let mut m = QMatrix::zeros(tgt.len(), src.len());
    for x in 0..s.apex.len() {
        let a = s.right.object(x);
        let b = s.left.object(x);
        if a >= src.len() || b >= tgt.len() {
            return Err(Error::OutsideWindow(format!("apex class {x} maps outside the boundary")));
        }
        let w = BigRational::new(BigInt::from(src.aut(a).order()), BigInt::from(s.apex.aut(x).order()));
        m.add_to(b, a, &w);
    }
    Ok(Degroupoidified {
        rows: (0..tgt.len()).map(|i| tgt.profile(i).to_vec()).collect(),
        cols: (0..src.len()).map(|i| src.profile(i).to_vec()).collect(),
        matrix: m,
    })
}

/// `D(A)` and `D(A†)` on `FS_{≤ max_card}`.
pub fn ladder_matrices(max_card: usize) -> Result<(QMatrix, QMatrix)> {
    Ok((
        degroupoidify_span(&annihilation_span(max_card))?.matrix,
        degroupoidify_span(&creation_span(max_card))?.matrix,
    ))
}
