//! Heaps of reduced words: posets, lattice pictures, strings and rendering.

pub mod lattice;
pub mod poset;
pub mod props;
pub mod render;
pub mod saturated;
pub mod strings;

pub use lattice::{coalesce, lattice_embed, lattice_heap_of, HeapEntry, LatticeHeap};
pub use poset::{heap_from_word, HeapPoset};
pub use props::{
    is_convex, is_convex_one_line_type_d, is_fully_commutative, is_sba_one_line_type_d, is_short_braid_avoiding,
    word_is_convex,
};
pub use render::{render_ascii, Decoration};
pub use saturated::saturated_contains;
pub use strings::{defect_by_strings, has_right_critical_zero, strings_cross_below, trace_strings, EntryStrings, StringDiagram};
