//! FuzzyFind Dictionary entries: the 16-address fan-out per index, the
//! XOR-1/2/4 recovery for one-label indices, the 277-neighbor verification,
//! and the full-domain case census.
//!
//! Every index gets an entry built the same way:
//!
//! - **Six-label index** (86.47%): slot 0 is the self-pair address of its
//!   zero label, slots 1-15 the pair fan-out of its own six labels.
//! - **One-label index, recoverable** (12.35%): the neighbors at `v ^ 1`,
//!   `v ^ 2`, `v ^ 4` are probed in that order; the first with a six-label
//!   sphere donates its 15 pair addresses. Slot 0 stays the index's own
//!   address. Exactly the indices at distance 2 from their codeword.
//! - **One-label index, no donor** (1.17%): all three probes are one-label
//!   too; the entry is the single own address. Exactly the indices at
//!   distance <= 1 from their codeword, whose probes can never reach the
//!   covering radius.
//!
//! Entries are pure functions of the index, so they can be recomputed on
//! the fly (~30 decodes) or read back from the precomputed table file; the
//! two routes agree bit for bit.

use rayon::prelude::*;

use crate::golay::{GolayCodec, Vector23};
use crate::pair::{fifteen_addresses, own_address, Address23};
use crate::sphere::{label_set, SphereCase};

/// Slots per dictionary record.
pub const SLOT_COUNT: usize = 16;
/// Bytes per record in the table file (16 little-endian u32 slots).
pub const RECORD_BYTES: usize = SLOT_COUNT * 4;
/// Record slot value marking an absent address (impossible as a 23-bit value).
pub const SLOT_SENTINEL: u32 = 0xFFFF_FFFF;
/// Number of records in a full table (2^23).
pub const INDEX_COUNT: u64 = 1 << 23;
/// Recovery probe masks, applied in this order; first six-label hit wins.
pub const RECOVERY_DELTAS: [u32; 3] = [1, 2, 4];
/// Vectors within Hamming distance 2 of a center: 1 + 23 + C(23,2).
pub const NEIGHBORHOOD_SIZE: usize = 277;

/// How an entry came by its addresses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EntryKind {
    /// The index's own sphere has six labels; all 16 addresses are its own.
    SixLabels,
    /// Six labels borrowed from the sphere of `index ^ delta`.
    Recovered {
        /// The successful probe mask: 1, 2, or 4.
        delta: u32,
    },
    /// No probe found a six-label sphere; single own address.
    Single,
}

/// The addresses attached to one index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FfdEntry {
    kind: EntryKind,
    slots: [u32; SLOT_COUNT],
    len: u8, // 16, or 1 for Single
}

impl FfdEntry {
    /// How the addresses were obtained.
    pub fn kind(&self) -> EntryKind {
        self.kind
    }

    /// The addresses in slot order; length 16, or 1 for a single-address
    /// entry. Slot 0 is always the index's own address. Duplicates within
    /// the fan-out are preserved positionally.
    pub fn addresses(&self) -> impl Iterator<Item = Address23> + '_ {
        self.slots[..self.len as usize]
            .iter()
            .map(|&bits| Address23::from_raw(bits))
    }

    /// Number of address slots in use (16 or 1).
    pub fn address_count(&self) -> usize {
        self.len as usize
    }

    /// The fixed-width record form: unused slots hold the sentinel.
    pub fn record(&self) -> FfdRecord {
        let mut slots = [SLOT_SENTINEL; SLOT_COUNT];
        slots[..self.len as usize].copy_from_slice(&self.slots[..self.len as usize]);
        FfdRecord(slots)
    }
}

/// A fixed-width table record: 16 slots, sentinel-padded.
///
/// This is the on-disk form; it carries the addresses but not the
/// [`EntryKind`], which is recomputable from the index itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FfdRecord(pub [u32; SLOT_COUNT]);

impl FfdRecord {
    /// The populated addresses, skipping sentinel slots.
    pub fn addresses(&self) -> impl Iterator<Item = Address23> + '_ {
        self.0
            .iter()
            .filter(|&&bits| bits != SLOT_SENTINEL)
            .map(|&bits| Address23::from_raw(bits))
    }

    /// Number of populated slots (16 or 1).
    pub fn address_count(&self) -> usize {
        self.0.iter().filter(|&&bits| bits != SLOT_SENTINEL).count()
    }

    /// True if the two records have at least one address in common.
    pub fn shares_address(&self, other: &FfdRecord) -> bool {
        self.addresses()
            .any(|a| other.addresses().any(|b| a == b))
    }

    /// Serialize as 64 little-endian bytes.
    pub fn write_bytes(&self, out: &mut [u8]) {
        assert_eq!(out.len(), RECORD_BYTES);
        for (slot, chunk) in self.0.iter().zip(out.chunks_exact_mut(4)) {
            chunk.copy_from_slice(&slot.to_le_bytes());
        }
    }

    /// Deserialize from 64 little-endian bytes.
    pub fn from_bytes(bytes: &[u8]) -> Self {
        assert_eq!(bytes.len(), RECORD_BYTES);
        let mut slots = [0u32; SLOT_COUNT];
        for (slot, chunk) in slots.iter_mut().zip(bytes.chunks_exact(4)) {
            *slot = u32::from_le_bytes(chunk.try_into().unwrap());
        }
        FfdRecord(slots)
    }
}

/// Build the dictionary entry for one index.
pub fn build_entry(codec: &GolayCodec, v: Vector23) -> FfdEntry {
    let own_set = label_set(codec, v);
    let own = own_address(own_set.zero_label());
    let mut slots = [0u32; SLOT_COUNT];
    slots[0] = own.bits();

    let fill = |slots: &mut [u32; SLOT_COUNT], labels: &[crate::golay::Label12]| {
        for (slot, addr) in slots[1..].iter_mut().zip(fifteen_addresses(labels)) {
            *slot = addr.bits();
        }
    };

    if own_set.case() == SphereCase::SixLabels {
        fill(&mut slots, own_set.labels());
        return FfdEntry { kind: EntryKind::SixLabels, slots, len: SLOT_COUNT as u8 };
    }

    for delta in RECOVERY_DELTAS {
        let probe_set = label_set(codec, v ^ Vector23::from_raw(delta));
        if probe_set.case() == SphereCase::SixLabels {
            fill(&mut slots, probe_set.labels());
            return FfdEntry { kind: EntryKind::Recovered { delta }, slots, len: SLOT_COUNT as u8 };
        }
    }

    FfdEntry { kind: EntryKind::Single, slots, len: 1 }
}

/// All 277 vectors within Hamming distance 2 of `v`: the center, the 23
/// distance-1 flips, then the 253 distance-2 flips in `(i, j)` order.
pub fn neighbors_within_2(v: Vector23) -> Vec<Vector23> {
    let mut out = Vec::with_capacity(NEIGHBORHOOD_SIZE);
    out.push(v);
    for i in 0..23 {
        out.push(v.flip(i));
    }
    for i in 0..23 {
        for j in (i + 1)..23 {
            out.push(v.flip(i).flip(j));
        }
    }
    out
}

/// Outcome of checking one center against its 277-vector neighborhood.
#[derive(Debug, Clone)]
pub struct NeighborhoodReport {
    /// The center index.
    pub center: Vector23,
    /// Number of neighbor checks performed (always 277).
    pub checked: usize,
    /// Neighbors that share no address with the center.
    pub failures: Vec<Vector23>,
}

impl NeighborhoodReport {
    /// Number of neighbors sharing at least one address with the center.
    pub fn passed(&self) -> usize {
        self.checked - self.failures.len()
    }
}

/// Check that every vector within distance 2 of `v` shares at least one
/// address with `v`. Entries are computed on the fly.
pub fn verify_neighborhood(codec: &GolayCodec, v: Vector23) -> NeighborhoodReport {
    let center_record = build_entry(codec, v).record();
    let neighbors = neighbors_within_2(v);
    let mut failures = Vec::new();
    for &w in &neighbors {
        let record = build_entry(codec, w).record();
        if !center_record.shares_address(&record) {
            failures.push(w);
        }
    }
    NeighborhoodReport { center: v, checked: neighbors.len(), failures }
}

/// Exact entry-kind counts over the full 2^23 domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CaseCensus {
    /// Entries built from the index's own six labels.
    pub six_labels: u64,
    /// Entries that borrowed labels from a probe neighbor.
    pub recovered: u64,
    /// Single-address entries.
    pub single: u64,
}

impl CaseCensus {
    /// Total indices counted (2^23 for a full census).
    pub fn total(&self) -> u64 {
        self.six_labels + self.recovered + self.single
    }

    /// Percentage of six-label entries.
    pub fn percent_six(&self) -> f64 {
        100.0 * self.six_labels as f64 / self.total() as f64
    }

    /// Percentage of recovered entries.
    pub fn percent_recovered(&self) -> f64 {
        100.0 * self.recovered as f64 / self.total() as f64
    }

    /// Percentage of single-address entries.
    pub fn percent_single(&self) -> f64 {
        100.0 * self.single as f64 / self.total() as f64
    }

    /// Percentage of entries with the full 16 addresses.
    pub fn percent_sixteen_addresses(&self) -> f64 {
        self.percent_six() + self.percent_recovered()
    }

    fn merge(self, other: Self) -> Self {
        CaseCensus {
            six_labels: self.six_labels + other.six_labels,
            recovered: self.recovered + other.recovered,
            single: self.single + other.single,
        }
    }

    fn count(mut self, kind: EntryKind) -> Self {
        match kind {
            EntryKind::SixLabels => self.six_labels += 1,
            EntryKind::Recovered { .. } => self.recovered += 1,
            EntryKind::Single => self.single += 1,
        }
        self
    }
}

/// Classify every index in `range` by rebuilding its entry (parallelized).
pub fn case_census_over(codec: &GolayCodec, range: std::ops::Range<u32>) -> CaseCensus {
    range
        .into_par_iter()
        .with_min_len(1 << 14)
        .fold(CaseCensus::default, |acc, bits| {
            acc.count(build_entry(codec, Vector23::from_raw(bits)).kind())
        })
        .reduce(CaseCensus::default, CaseCensus::merge)
}

/// Full-domain case census (a few seconds, parallelized).
pub fn case_census(codec: &GolayCodec) -> CaseCensus {
    case_census_over(codec, 0..Vector23::DOMAIN)
}
