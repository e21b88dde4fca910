//! Kazhdan–Lusztig combinatorics on finite Weyl groups: masks and defects,
//! Deodhar elements, heaps, Hecke algebra products and pattern avoidance.

mod bitset;
pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod heap;
pub mod mask;
pub mod pattern;
pub mod poly;
pub mod search;

pub use coxeter::{graph_for, CoxeterGraph, CoxeterGroup, Element, Family, Gen, GenSet, GroupKind};
pub use error::{Error, Result};
