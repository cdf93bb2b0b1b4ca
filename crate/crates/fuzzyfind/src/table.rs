//! The precomputed dictionary table file: every index's record, addressable
//! by offset arithmetic.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! magic "FFD1" | version u32 = 1 | generator u32 | reserved u32 = 0
//! then 8,388,608 records of 16 x u32 address slots, in index order;
//! 0xFFFFFFFF marks an absent slot.
//! ```
//!
//! Total size 536,870,928 bytes (16-byte header + 2^23 x 64-byte records).
//! Record `i` lives at byte `16 + 64 * i`, so a lookup is a single
//! positioned read. The content is a pure function of the generator
//! polynomial and format version: builds are byte-identical regardless of
//! thread count, and the SHA-256 of the file is a meaningful fingerprint.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::os::unix::fs::FileExt;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::ffd::{build_entry, CaseCensus, EntryKind, FfdRecord, INDEX_COUNT, RECORD_BYTES};
use crate::golay::{GolayCodec, Vector23};
use crate::sphere::{case_of, SphereCase};

/// File magic.
pub const MAGIC: [u8; 4] = *b"FFD1";
/// Current table format version.
pub const VERSION: u32 = 1;
/// Header size in bytes.
pub const HEADER_BYTES: u64 = 16;
/// Exact size of a complete table file.
pub const FILE_BYTES: u64 = HEADER_BYTES + INDEX_COUNT * RECORD_BYTES as u64;

/// Errors from building, opening, or reading a table file.
#[derive(Debug, Error)]
pub enum TableError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("not a dictionary table file (bad magic)")]
    BadMagic,
    #[error("unsupported table version {0}")]
    BadVersion(u32),
    #[error("reserved header field is nonzero")]
    BadReserved,
    #[error("table file is {found} bytes, expected {expected}")]
    BadLength { found: u64, expected: u64 },
    #[error("table generator {file:#05x} does not match codec generator {codec:#05x}")]
    GeneratorMismatch { file: u32, codec: u32 },
    #[error("table record for index {index} is inconsistent with its sphere case")]
    InconsistentRecord { index: u32 },
}

/// Summary of a completed table build.
#[derive(Debug, Clone)]
pub struct BuildReport {
    /// Records written (always 2^23).
    pub records: u64,
    /// Bytes written including the header.
    pub bytes: u64,
    /// SHA-256 of the entire file, lowercase hex.
    pub sha256: String,
    /// Wall-clock build time.
    pub elapsed: Duration,
    /// Worker threads used (0 = rayon default).
    pub threads: usize,
}

/// Build the full table file at `path`.
///
/// `threads` sizes the worker pool; 0 uses the rayon default. Records are
/// computed in parallel but assembled in index order, so the output is
/// byte-identical for any thread count.
pub fn build_table(codec: &GolayCodec, path: &Path, threads: usize) -> Result<BuildReport, TableError> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| io::Error::other(e))?;

    let file = File::create(path)?;
    let mut writer = BufWriter::with_capacity(1 << 20, file);
    let mut hasher = Sha256::new();

    let mut header = Vec::with_capacity(HEADER_BYTES as usize);
    header.extend_from_slice(&MAGIC);
    header.extend_from_slice(&VERSION.to_le_bytes());
    header.extend_from_slice(&codec.generator().to_le_bytes());
    header.extend_from_slice(&0u32.to_le_bytes());
    writer.write_all(&header)?;
    hasher.update(&header);

    // 8 MiB of records per batch: parallel compute, sequential write.
    const BATCH: u32 = 1 << 17;
    let mut buf = vec![0u8; BATCH as usize * RECORD_BYTES];
    let mut bits = 0u32;
    loop {
        let count = BATCH.min((INDEX_COUNT - bits as u64) as u32);
        if count == 0 {
            break;
        }
        let chunk = &mut buf[..count as usize * RECORD_BYTES];
        pool.install(|| {
            chunk
                .par_chunks_mut(RECORD_BYTES)
                .enumerate()
                .with_min_len(1 << 11)
                .for_each(|(i, out)| {
                    let v = Vector23::from_raw(bits + i as u32);
                    build_entry(codec, v).record().write_bytes(out);
                });
        });
        writer.write_all(chunk)?;
        hasher.update(&*chunk);
        bits = match bits.checked_add(count) {
            Some(next) => next,
            None => break, // wrapped past 2^32; cannot happen for 2^23
        };
        if bits as u64 >= INDEX_COUNT {
            break;
        }
    }
    writer.flush()?;

    Ok(BuildReport {
        records: INDEX_COUNT,
        bytes: FILE_BYTES,
        sha256: format!("{:x}", hasher.finalize()),
        elapsed: start.elapsed(),
        threads,
    })
}

/// A read-only handle to a table file; records are fetched with positioned
/// reads, so one handle can serve any number of concurrent readers.
#[derive(Debug)]
pub struct FfdTable {
    file: File,
    path: PathBuf,
    generator: u32,
}

impl FfdTable {
    /// Open and validate a table file.
    pub fn open(path: impl AsRef<Path>) -> Result<Self, TableError> {
        let path = path.as_ref().to_path_buf();
        let file = File::open(&path)?;

        let mut header = [0u8; HEADER_BYTES as usize];
        file.read_exact_at(&mut header, 0)?;
        if header[0..4] != MAGIC {
            return Err(TableError::BadMagic);
        }
        let version = u32::from_le_bytes(header[4..8].try_into().unwrap());
        if version != VERSION {
            return Err(TableError::BadVersion(version));
        }
        let generator = u32::from_le_bytes(header[8..12].try_into().unwrap());
        let reserved = u32::from_le_bytes(header[12..16].try_into().unwrap());
        if reserved != 0 {
            return Err(TableError::BadReserved);
        }
        let found = file.metadata()?.len();
        if found != FILE_BYTES {
            return Err(TableError::BadLength { found, expected: FILE_BYTES });
        }
        Ok(Self { file, path, generator })
    }

    /// The generator polynomial recorded in the file header.
    pub fn generator(&self) -> u32 {
        self.generator
    }

    /// Fail unless this table was built with the codec's generator.
    pub fn check_generator(&self, codec: &GolayCodec) -> Result<(), TableError> {
        if self.generator != codec.generator() {
            return Err(TableError::GeneratorMismatch {
                file: self.generator,
                codec: codec.generator(),
            });
        }
        Ok(())
    }

    /// The stored record for one index (a single positioned read).
    pub fn record_at(&self, v: Vector23) -> Result<FfdRecord, TableError> {
        let mut bytes = [0u8; RECORD_BYTES];
        let offset = HEADER_BYTES + v.bits() as u64 * RECORD_BYTES as u64;
        self.file.read_exact_at(&mut bytes, offset)?;
        Ok(FfdRecord::from_bytes(&bytes))
    }

    /// Sequential scan over all records with a dedicated file handle.
    pub fn stream(&self) -> Result<RecordStream, TableError> {
        let mut reader = BufReader::with_capacity(1 << 20, File::open(&self.path)?);
        let mut header = [0u8; HEADER_BYTES as usize];
        reader.read_exact(&mut header)?;
        Ok(RecordStream { reader, remaining: INDEX_COUNT })
    }
}

/// Iterator over all records of a table file in index order.
pub struct RecordStream {
    reader: BufReader<File>,
    remaining: u64,
}

impl Iterator for RecordStream {
    type Item = io::Result<FfdRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let mut bytes = [0u8; RECORD_BYTES];
        match self.reader.read_exact(&mut bytes) {
            Ok(()) => Some(Ok(FfdRecord::from_bytes(&bytes))),
            Err(e) => {
                self.remaining = 0;
                Some(Err(e))
            }
        }
    }
}

/// Case census computed from a stored table.
///
/// Single-address records are read off the sentinels; full records are split
/// into six-label vs recovered by re-deriving the sphere case, which also
/// cross-checks the stored shape against the index (a single-address record
/// for a six-label index means the file does not belong to this codec).
pub fn case_census_from_table(codec: &GolayCodec, table: &FfdTable) -> Result<CaseCensus, TableError> {
    table.check_generator(codec)?;
    let mut census = CaseCensus::default();
    const CHUNK: usize = 1 << 16;
    let mut batch: Vec<FfdRecord> = Vec::with_capacity(CHUNK);
    let mut base = 0u32;
    let mut stream = table.stream()?;
    loop {
        batch.clear();
        for record in stream.by_ref().take(CHUNK) {
            batch.push(record?);
        }
        if batch.is_empty() {
            break;
        }
        let counted: Result<Vec<EntryKind>, TableError> = batch
            .par_iter()
            .enumerate()
            .with_min_len(1 << 11)
            .map(|(i, record)| {
                let v = Vector23::from_raw(base + i as u32);
                let single = record.address_count() == 1;
                match case_of(codec, v) {
                    SphereCase::SixLabels if !single => Ok(EntryKind::SixLabels),
                    SphereCase::OneLabel if single => Ok(EntryKind::Single),
                    SphereCase::OneLabel => Ok(EntryKind::Recovered { delta: 0 }),
                    SphereCase::SixLabels => {
                        Err(TableError::InconsistentRecord { index: v.bits() })
                    }
                }
            })
            .collect();
        for kind in counted? {
            match kind {
                EntryKind::SixLabels => census.six_labels += 1,
                EntryKind::Recovered { .. } => census.recovered += 1,
                EntryKind::Single => census.single += 1,
            }
        }
        base += batch.len() as u32;
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn open_rejects_bad_headers() {
        let dir = tempfile::tempdir().unwrap();

        let missing = dir.path().join("missing.ffd");
        assert!(matches!(FfdTable::open(&missing), Err(TableError::Io(_))));

        let bad_magic = dir.path().join("bad_magic.ffd");
        std::fs::write(&bad_magic, b"NOPE\x01\x00\x00\x00\x75\x0c\x00\x00\x00\x00\x00\x00").unwrap();
        assert!(matches!(FfdTable::open(&bad_magic), Err(TableError::BadMagic)));

        let bad_version = dir.path().join("bad_version.ffd");
        let mut f = File::create(&bad_version).unwrap();
        f.write_all(&MAGIC).unwrap();
        f.write_all(&9u32.to_le_bytes()).unwrap();
        f.write_all(&0xC75u32.to_le_bytes()).unwrap();
        f.write_all(&0u32.to_le_bytes()).unwrap();
        drop(f);
        assert!(matches!(FfdTable::open(&bad_version), Err(TableError::BadVersion(9))));

        // Valid header but truncated body.
        let truncated = dir.path().join("truncated.ffd");
        let mut f = File::create(&truncated).unwrap();
        f.write_all(&MAGIC).unwrap();
        f.write_all(&VERSION.to_le_bytes()).unwrap();
        f.write_all(&0xC75u32.to_le_bytes()).unwrap();
        f.write_all(&0u32.to_le_bytes()).unwrap();
        f.write_all(&[0u8; 64]).unwrap();
        drop(f);
        assert!(matches!(
            FfdTable::open(&truncated),
            Err(TableError::BadLength { .. })
        ));
    }
}
