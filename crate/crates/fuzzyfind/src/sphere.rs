//! Radius-1 sphere decoding: the label set of an index.
//!
//! The sphere of an index is the index itself plus its 23 single-bit flips.
//! Decoding all 24 members and keeping the distinct information words gives
//! the index's label set, which always has exactly six or exactly one
//! element:
//!
//! - one label when the index lies within Hamming distance 2 of its nearest
//!   codeword — every sphere member then stays inside that codeword's
//!   decoding region;
//! - six labels when the index sits at distance 3 (the covering radius) —
//!   twenty of the flips land at distance 4 and decode to five other
//!   codewords, four flips apiece.
//!
//! Over the full 2^23 domain the split is 86.47% six-label vs 13.53%
//! one-label (exactly 4096 x 1771 vs 4096 x 277 indices).
//!
//! The label obtained by decoding the index itself, with no bit flipped, is
//! the zero label; it is always a member of the set and every index keeps it
//! even when the rest of the set is borrowed from a neighbor downstream.

use std::ops::Range;

use rayon::prelude::*;

use crate::golay::{GolayCodec, Label12, Vector23};

/// Sphere cardinality: the index itself plus 23 single-bit flips.
pub const SPHERE_SIZE: usize = 24;

/// The radius-1 sphere of `v`: `v` first, then `v` with each bit flipped.
pub fn sphere(v: Vector23) -> [Vector23; SPHERE_SIZE] {
    let mut out = [v; SPHERE_SIZE];
    for pos in 0..23 {
        out[pos as usize + 1] = v.flip(pos);
    }
    out
}

/// Which of the two sphere shapes an index has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SphereCase {
    /// Six distinct labels: the index is at distance 3 from every reachable
    /// codeword (86.47% of indices).
    SixLabels,
    /// One label: the whole sphere decodes to a single codeword (13.53%).
    OneLabel,
}

/// The distinct labels of an index's radius-1 sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelSet {
    labels: [Label12; 6],
    len: u8, // 1 or 6
    zero_label: Label12,
}

impl LabelSet {
    /// The distinct labels, sorted ascending. Length is 1 or 6.
    pub fn labels(&self) -> &[Label12] {
        &self.labels[..self.len as usize]
    }

    /// The label of the index's own decode (no bit flipped).
    pub fn zero_label(&self) -> Label12 {
        self.zero_label
    }

    /// Number of distinct labels: exactly 1 or exactly 6.
    pub fn cardinality(&self) -> usize {
        self.len as usize
    }

    /// Case classification derived from the cardinality.
    pub fn case(&self) -> SphereCase {
        if self.len == 6 {
            SphereCase::SixLabels
        } else {
            SphereCase::OneLabel
        }
    }
}

/// Decode the radius-1 sphere of `v` and collect its distinct labels.
///
/// Panics if the distinct count is neither 1 nor 6; with a verified codec
/// that cannot happen, so a violation signals a codec defect.
pub fn label_set(codec: &GolayCodec, v: Vector23) -> LabelSet {
    let zero_label = codec.decode_info(v);
    // At most 6 distinct values can appear, so insert into a fixed set
    // instead of sorting all 24 decodes.
    let mut distinct = [zero_label.bits(); 6];
    let mut len = 1usize;
    for pos in 0..23 {
        let bits = codec.decode_info(v.flip(pos)).bits();
        if !distinct[..len].contains(&bits) {
            assert!(
                len < 6,
                "index {v}: more than 6 distinct sphere labels (codec defect)"
            );
            distinct[len] = bits;
            len += 1;
        }
    }
    assert!(
        len == 1 || len == 6,
        "index {v}: {len} distinct sphere labels, expected 1 or 6 (codec defect)"
    );
    distinct[..len].sort_unstable();

    let mut labels = [Label12::default(); 6];
    for (label, &bits) in labels.iter_mut().zip(&distinct[..len]) {
        *label = Label12::from_raw(bits);
    }
    LabelSet { labels, len: len as u8, zero_label }
}

/// Case classification of `v` via its label-set cardinality.
pub fn case_of(codec: &GolayCodec, v: Vector23) -> SphereCase {
    label_set(codec, v).case()
}

/// Exact case counts over a range of indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SphereCensus {
    /// Indices with six-label spheres.
    pub six_labels: u64,
    /// Indices with one-label spheres.
    pub one_label: u64,
}

impl SphereCensus {
    /// Total indices counted.
    pub fn total(&self) -> u64 {
        self.six_labels + self.one_label
    }

    /// Percentage of six-label indices (0..=100).
    pub fn percent_six(&self) -> f64 {
        100.0 * self.six_labels as f64 / self.total() as f64
    }

    /// Percentage of one-label indices (0..=100).
    pub fn percent_one(&self) -> f64 {
        100.0 * self.one_label as f64 / self.total() as f64
    }
}

/// Count sphere cases over `range` (parallelized; the full domain takes a
/// few seconds). An empty range yields zero counts.
pub fn census(codec: &GolayCodec, range: Range<u32>) -> SphereCensus {
    range
        .into_par_iter()
        .with_min_len(1 << 14)
        .fold(SphereCensus::default, |mut acc, bits| {
            match case_of(codec, Vector23::from_raw(bits)) {
                SphereCase::SixLabels => acc.six_labels += 1,
                SphereCase::OneLabel => acc.one_label += 1,
            }
            acc
        })
        .reduce(SphereCensus::default, |a, b| SphereCensus {
            six_labels: a.six_labels + b.six_labels,
            one_label: a.one_label + b.one_label,
        })
}
