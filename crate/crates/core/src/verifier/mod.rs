//! A layered term language for the graphical calculus, its evaluation into
//! spans and 2-cells, and the catalog of relations.

mod catalog;
mod eval;
mod term;
mod trace;

pub use catalog::{
    check_relation, heisenberg_catalog, run_relation_catalog, run_relations, CheckStatus, Expectation, Relation,
    RelationCheck, RelationSide,
};
pub use eval::{eval_one_cell, eval_two_cell};
pub use term::{Layer, OneCellTerm, TwoCellTerm};
pub use trace::{trace_histories, HistoryTrace, TraceEntry};
