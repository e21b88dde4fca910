//! Pattern containment: signed 1-line patterns, embeddings and factors.

pub mod classify;
pub mod embedding;
pub mod factor;
pub mod library;
pub mod one_line;

pub use embedding::{enumerate_embeddings, CoxeterEmbedding};
pub use factor::{contains_embedded_factor, contains_embedded_factor_with, contains_factor, FactorPattern, PrefixSet};
pub use one_line::{contains_classical, contains_one_line, SignedPattern};
pub use classify::{classify_deodhar, is_ideal_pattern, upper_ideal_convex, Classification, Classifier, SHORT_BRAID};
pub use library::{LibraryEntry, PatternLibrary, PatternRole, WitnessHeap};
