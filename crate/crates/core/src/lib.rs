//! Fuzzy propositional dynamic logic over complete residuated lattices.

pub mod automata;
pub mod bisim;
pub mod gen;
pub mod hm;
pub mod lattice;
pub mod model;
pub mod relation;
pub mod syntax;
