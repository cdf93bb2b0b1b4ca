//! Fuzzy search over keys wider than 23 bits.
//!
//! A wide key is split into fixed 23-bit segments, most significant first,
//! and each segment is indexed in its own address-keyed posting map. A query
//! fetches candidates from *any* segment that shares an address with the
//! corresponding query segment, then post-filters on exact total Hamming
//! distance.
//!
//! The union across segments is what makes the pigeonhole argument work: if
//! a record differs from the query by at most `k` bits in total, some
//! segment differs by at most `floor(k/m)` bits, and for `floor(k/m) <= 2`
//! that segment's fan-out supplies the record as a candidate. Intersecting
//! across segments would forfeit exactly that guarantee.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use thiserror::Error;

use crate::ffd::build_entry;
use crate::golay::{GolayCodec, Vector23};
use crate::lexicon::STORE_MAGIC;
use crate::pair::Address23;

/// Posting store format version for segmented stores: the flat format plus
/// a segment-count header field.
pub const SEGMENTED_VERSION: u32 = 2;

/// Errors from segmented keys and stores.
#[derive(Debug, Error)]
pub enum SegmentedError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("key width {0} is not a nonzero multiple of 23")]
    BadWidth(usize),
    #[error("key bit {index} is '{found}', expected '0' or '1'")]
    BadDigit { index: usize, found: char },
    #[error("store holds {expected}-segment keys, got a {found}-segment key")]
    SegmentMismatch { expected: usize, found: usize },
    #[error("distance bound {bound} exceeds 2 per segment ({limit} for this store)")]
    DistanceTooLarge { bound: u32, limit: u32 },
    #[error("not a posting store file (bad magic)")]
    BadMagic,
    #[error("unsupported segmented store version {0}")]
    BadVersion(u32),
    #[error("segmented store is corrupt: {0}")]
    Corrupt(&'static str),
    #[error("store generator {store:#05x} does not match codec generator {codec:#05x}")]
    GeneratorMismatch { store: u32, codec: u32 },
}

/// A key of `m >= 1` ordered 23-bit segments (total width `23 m`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SegmentedKey {
    segments: Vec<Vector23>,
}

impl SegmentedKey {
    /// Build from explicit segments; at least one is required.
    pub fn from_segments(segments: Vec<Vector23>) -> Result<Self, SegmentedError> {
        if segments.is_empty() {
            return Err(SegmentedError::BadWidth(0));
        }
        Ok(Self { segments })
    }

    /// Split a binary string of width `23 m` into segments, most
    /// significant segment first. The width must be an exact multiple of
    /// 23; padding policy belongs to the caller.
    pub fn parse_bits(bits: &str) -> Result<Self, SegmentedError> {
        if bits.is_empty() || bits.len() % 23 != 0 {
            return Err(SegmentedError::BadWidth(bits.len()));
        }
        let mut segments = Vec::with_capacity(bits.len() / 23);
        let mut current = 0u32;
        for (index, ch) in bits.chars().enumerate() {
            current = (current << 1)
                | match ch {
                    '0' => 0,
                    '1' => 1,
                    found => return Err(SegmentedError::BadDigit { index, found }),
                };
            if index % 23 == 22 {
                segments.push(Vector23::from_raw(current));
                current = 0;
            }
        }
        Ok(Self { segments })
    }

    /// The key as a binary string, inverse of [`parse_bits`](Self::parse_bits).
    pub fn to_bit_string(&self) -> String {
        let mut out = String::with_capacity(self.width());
        for segment in &self.segments {
            out.push_str(&format!("{:023b}", segment.bits()));
        }
        out
    }

    /// The ordered segments.
    pub fn segments(&self) -> &[Vector23] {
        &self.segments
    }

    /// Number of segments `m`.
    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    /// Total width in bits (`23 m`).
    pub fn width(&self) -> usize {
        self.segments.len() * 23
    }

    /// Total Hamming distance over all `23 m` bits.
    ///
    /// Panics if the keys have different segment counts.
    pub fn distance(&self, other: &Self) -> u32 {
        assert_eq!(
            self.segment_count(),
            other.segment_count(),
            "distance between keys of different widths"
        );
        self.segments
            .iter()
            .zip(&other.segments)
            .map(|(&a, &b)| crate::golay::hamming(a, b))
            .sum()
    }
}

/// A candidate returned by [`SegmentedStore::lookup`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SegmentedMatch {
    /// Record id (insertion order).
    pub id: u32,
    /// Total Hamming distance to the query.
    pub distance: u32,
}

/// Per-segment posting maps over a set of equal-width keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentedStore {
    generator: u32,
    segment_count: usize,
    keys: Vec<u32>,                  // record-major: m segment values per record
    postings: Vec<Vec<(u32, u32)>>,  // per segment slot: (address, record id), sorted
}

impl SegmentedStore {
    /// Index `keys`, all of which must have exactly `segment_count`
    /// segments. Ids are assigned in input order.
    pub fn build(
        codec: &GolayCodec,
        segment_count: usize,
        keys: impl IntoIterator<Item = SegmentedKey>,
    ) -> Result<Self, SegmentedError> {
        if segment_count == 0 {
            return Err(SegmentedError::BadWidth(0));
        }
        let mut flat = Vec::new();
        let mut postings = vec![Vec::new(); segment_count];
        for (id, key) in keys.into_iter().enumerate() {
            if key.segment_count() != segment_count {
                return Err(SegmentedError::SegmentMismatch {
                    expected: segment_count,
                    found: key.segment_count(),
                });
            }
            for (slot, &segment) in key.segments().iter().enumerate() {
                flat.push(segment.bits());
                let entry = build_entry(codec, segment);
                let mut addresses: Vec<u32> = entry.addresses().map(|a| a.bits()).collect();
                addresses.sort_unstable();
                addresses.dedup();
                for addr in addresses {
                    postings[slot].push((addr, id as u32));
                }
            }
        }
        for list in &mut postings {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { generator: codec.generator(), segment_count, keys: flat, postings })
    }

    /// Generator polynomial the store was indexed under.
    pub fn generator(&self) -> u32 {
        self.generator
    }

    /// Segments per key.
    pub fn segment_count(&self) -> usize {
        self.segment_count
    }

    /// Number of indexed records.
    pub fn record_count(&self) -> usize {
        self.keys.len() / self.segment_count
    }

    /// The key stored under `id`.
    pub fn key(&self, id: u32) -> SegmentedKey {
        let start = id as usize * self.segment_count;
        let segments = self.keys[start..start + self.segment_count]
            .iter()
            .map(|&bits| Vector23::from_raw(bits))
            .collect();
        SegmentedKey { segments }
    }

    fn ids_at(&self, slot: usize, address: Address23) -> impl Iterator<Item = u32> + '_ {
        let addr = address.bits();
        let list = &self.postings[slot];
        let start = list.partition_point(|&(a, _)| a < addr);
        list[start..]
            .iter()
            .take_while(move |&&(a, _)| a == addr)
            .map(|&(_, id)| id)
    }

    /// Candidates within total Hamming distance `max_total` of `query`,
    /// sorted by (distance, id).
    ///
    /// Bounds up to `2 m` are accepted; the any-segment guarantee covers
    /// `floor(max_total / m) <= 2`, and the post-filter is always exact.
    pub fn lookup(
        &self,
        codec: &GolayCodec,
        query: &SegmentedKey,
        max_total: u32,
    ) -> Result<Vec<SegmentedMatch>, SegmentedError> {
        if self.generator != codec.generator() {
            return Err(SegmentedError::GeneratorMismatch {
                store: self.generator,
                codec: codec.generator(),
            });
        }
        if query.segment_count() != self.segment_count {
            return Err(SegmentedError::SegmentMismatch {
                expected: self.segment_count,
                found: query.segment_count(),
            });
        }
        let limit = 2 * self.segment_count as u32;
        if max_total > limit {
            return Err(SegmentedError::DistanceTooLarge { bound: max_total, limit });
        }

        let mut ids: Vec<u32> = Vec::new();
        for (slot, &segment) in query.segments().iter().enumerate() {
            let entry = build_entry(codec, segment);
            let mut addresses: Vec<u32> = entry.addresses().map(|a| a.bits()).collect();
            addresses.sort_unstable();
            addresses.dedup();
            for addr in addresses {
                ids.extend(self.ids_at(slot, Address23::from_raw(addr)));
            }
        }
        ids.sort_unstable();
        ids.dedup();

        let mut matches: Vec<SegmentedMatch> = ids
            .into_iter()
            .filter_map(|id| {
                let distance = self.key(id).distance(query);
                (distance <= max_total).then_some(SegmentedMatch { id, distance })
            })
            .collect();
        matches.sort_by_key(|m| (m.distance, m.id));
        Ok(matches)
    }

    /// Serialize: the flat posting-store layout of version 1 with a
    /// segment-count field appended to the header (version 2), the key
    /// table replacing the word table, and one posting list per segment.
    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), SegmentedError> {
        let mut w = BufWriter::new(File::create(path)?);
        w.write_all(&STORE_MAGIC)?;
        w.write_all(&SEGMENTED_VERSION.to_le_bytes())?;
        w.write_all(&self.generator.to_le_bytes())?;
        w.write_all(&(self.segment_count as u32).to_le_bytes())?;
        w.write_all(&(self.record_count() as u32).to_le_bytes())?;
        for &bits in &self.keys {
            w.write_all(&bits.to_le_bytes())?;
        }
        for list in &self.postings {
            w.write_all(&(list.len() as u64).to_le_bytes())?;
            for &(addr, id) in list {
                w.write_all(&addr.to_le_bytes())?;
                w.write_all(&id.to_le_bytes())?;
            }
        }
        w.flush()?;
        Ok(())
    }

    /// Load a store saved by [`save`](Self::save).
    pub fn load(path: impl AsRef<Path>) -> Result<Self, SegmentedError> {
        let mut r = BufReader::new(File::open(path)?);
        let mut magic = [0u8; 4];
        r.read_exact(&mut magic)?;
        if magic != STORE_MAGIC {
            return Err(SegmentedError::BadMagic);
        }
        let version = read_u32(&mut r)?;
        if version != SEGMENTED_VERSION {
            return Err(SegmentedError::BadVersion(version));
        }
        let generator = read_u32(&mut r)?;
        let segment_count = read_u32(&mut r)? as usize;
        if segment_count == 0 {
            return Err(SegmentedError::Corrupt("zero segment count"));
        }
        let record_count = read_u32(&mut r)? as usize;

        let mut keys = Vec::with_capacity((record_count * segment_count).min(1 << 24));
        for _ in 0..record_count * segment_count {
            let bits = read_u32(&mut r)?;
            if bits > Vector23::MASK {
                return Err(SegmentedError::Corrupt("segment out of range"));
            }
            keys.push(bits);
        }

        let mut postings = Vec::with_capacity(segment_count);
        for _ in 0..segment_count {
            let len = read_u64(&mut r)? as usize;
            let mut list = Vec::with_capacity(len.min(1 << 24));
            let mut previous: Option<(u32, u32)> = None;
            for _ in 0..len {
                let addr = read_u32(&mut r)?;
                let id = read_u32(&mut r)?;
                if id as usize >= record_count {
                    return Err(SegmentedError::Corrupt("record id out of range"));
                }
                if let Some(prev) = previous {
                    if prev >= (addr, id) {
                        return Err(SegmentedError::Corrupt("postings not strictly sorted"));
                    }
                }
                previous = Some((addr, id));
                list.push((addr, id));
            }
            postings.push(list);
        }
        let mut trailing = [0u8; 1];
        if r.read(&mut trailing)? != 0 {
            return Err(SegmentedError::Corrupt("trailing bytes"));
        }
        Ok(Self { generator, segment_count, keys, postings })
    }
}

fn read_u32(r: &mut impl Read) -> std::io::Result<u32> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b)?;
    Ok(u32::from_le_bytes(b))
}

fn read_u64(r: &mut impl Read) -> std::io::Result<u64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    Ok(u64::from_le_bytes(b))
}
