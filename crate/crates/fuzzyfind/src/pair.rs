//! The label-pair combiner: folding two 12-bit labels into one 23-bit
//! address, and fanning a six-label set out to its 15 pair addresses.
//!
//! Two labels are concatenated into a 24-bit value (smaller label in the
//! high half), then folded by `x ^ (x >> 1)` and masked to 23 bits. The
//! combiner is a pure function of the *unordered* pair, which is the whole
//! point: two different indices that share a label pair compute the
//! identical address, wherever they computed it from.
//!
//! A six-label set produces `C(6,2) = 15` pair addresses, emitted in
//! lexicographic pair order. The sixteenth slot of a dictionary entry is the
//! index's own address: the self-pair of its zero label, shared by every
//! index that decodes into the same codeword's region.
//!
//! Distinct pairs may collide (the mask discards one bit of the fold);
//! collisions only enlarge candidate sets, never lose matches.

use crate::golay::{Label12, Vector23};

/// A 23-bit dictionary address.
///
/// Same domain as [`Vector23`]; the separate name marks values produced by
/// the combiner rather than raw keys.
pub type Address23 = Vector23;

/// Number of pair addresses fanned out from a six-label set.
pub const PAIR_COUNT: usize = 15;

/// Fold the canonical pair `(h1, h2)` into its 23-bit address.
///
/// `combined = (h1 << 12) | h2`, then `(combined >> 1) ^ combined` masked
/// to 23 bits. Callers must pass `h1 <= h2`; an unordered call site that
/// skipped canonicalization is a bug, so it is rejected loudly.
#[inline]
pub fn pair_address(h1: Label12, h2: Label12) -> Address23 {
    assert!(
        h1 <= h2,
        "pair_address requires canonical order (got {h1} > {h2})"
    );
    let combined = ((h1.bits() as u32) << 12) | h2.bits() as u32;
    Address23::from_raw(((combined >> 1) ^ combined) & Vector23::MASK)
}

/// The 15 pair addresses of a six-label set, in lexicographic pair order
/// `(0,1), (0,2), ..., (4,5)`.
///
/// `labels` must hold exactly 6 strictly increasing labels, as produced by
/// [`crate::sphere::label_set`].
pub fn fifteen_addresses(labels: &[Label12]) -> [Address23; PAIR_COUNT] {
    assert_eq!(labels.len(), 6, "pair fan-out needs exactly 6 labels");
    assert!(
        labels.windows(2).all(|w| w[0] < w[1]),
        "pair fan-out needs strictly increasing labels"
    );
    let mut out = [Address23::default(); PAIR_COUNT];
    let mut slot = 0;
    for i in 0..6 {
        for j in (i + 1)..6 {
            out[slot] = pair_address(labels[i], labels[j]);
            slot += 1;
        }
    }
    out
}

/// The self-pair address of a zero label.
///
/// Depends only on the decoded codeword, so all indices in one decoding
/// region share it — this is what keeps nearby one-label indices findable.
#[inline]
pub fn own_address(zero_label: Label12) -> Address23 {
    pair_address(zero_label, zero_label)
}
