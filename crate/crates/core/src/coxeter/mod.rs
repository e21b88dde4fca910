//! Coxeter graphs of finite Weyl type and the element algebra.
//!
//! Types A, B and D use signed permutations in 1-line notation; E, F and G
//! use integer matrices acting on simple-root coordinates.

mod graph;
mod group;
pub mod notation;
mod roots;

pub use graph::{graph_for, CoxeterGraph, Family, Gen, GroupKind};
pub use group::{CoxeterGroup, Element, GenSet};

#[cfg(test)]
mod tests;
