//! Classification of (shape, modulus word) cells.

pub mod atlas;
pub mod corpus;
pub mod inequalities;
pub mod search;
pub mod theorems;

pub use crate::construct::condition_a;
pub use atlas::{build_atlas, classify_cell, AtlasCell, AtlasConfig, CellStatus, KnownWitnesses, WitnessSource};
pub use corpus::{corpus, verify_corpus, verify_entries, CorpusEntry, EntryReport};
pub use inequalities::{no_tie_check_m1q, validate_inequalities, InequalityReport};
pub use search::search_witness;
pub use theorems::{forbidden_by_theorem, TheoremCitation};
