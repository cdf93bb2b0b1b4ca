//! FuzzyFind Dictionary: constant-probe fuzzy lookup over 23-bit keys.
//!
//! Decoding the perfect (23, 12, 7) Golay code over the radius-1 sphere of a
//! 23-bit index yields a small set of 12-bit labels (six in ~86.5% of cases,
//! one otherwise). Folding all label pairs through a fixed combiner attaches
//! 16 precomputed 23-bit addresses to every index; two indices within
//! Hamming distance 2 of each other then share an address in the vast
//! majority of cases, so a fuzzy lookup costs a constant number of probes
//! instead of a scan.
//!
//! The crate is organized bottom-up:
//!
//! - [`golay`] — the (23, 12, 7) codec: encode, syndrome, table decode.
//! - [`sphere`] — radius-1 sphere decoding: the 6-or-1 label sets.
//! - [`pair`] — the label-pair combiner and the 15-address fan-out.
//! - [`ffd`] — dictionary entries, the 277-neighbor check, case census.
//! - [`table`] — the precomputed 2^23-record table file.
//! - [`lexicon`] — word signatures, posting store, fuzzy word search.
//! - [`segmented`] — keys wider than 23 bits, split into segments.
//! - [`report`] — line-oriented `key=value` run reports.
//!
//! Runnable walkthroughs of each capability live in `examples/`; the `ffd`
//! binary wraps the same operations as subcommands.

pub mod ffd;
pub mod golay;
pub mod lexicon;
pub mod pair;
pub mod report;
pub mod segmented;
pub mod sphere;
pub mod table;

pub use ffd::{EntryKind, FfdEntry, FfdRecord};
pub use golay::{hamming, info_of, GolayCodec, GolayError, Label12, Vector23};
pub use lexicon::{LetterMap, LexiconError, PostingStore, Signature, WordMatch};
pub use pair::Address23;
pub use report::RunReport;
pub use segmented::{SegmentedError, SegmentedKey, SegmentedStore};
pub use sphere::{LabelSet, SphereCase};
pub use table::{FfdTable, TableError};
