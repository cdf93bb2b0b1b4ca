//! Approximate word search over letter-presence signatures.
//!
//! A word's signature is a 23-bit vector with bit `p` set iff some letter
//! mapped to position `p` occurs in the word — case-folded, ignoring
//! non-alphabetic characters, insensitive to letter order and multiplicity.
//! Under such a map, word distortions stay close in Hamming distance: one
//! substitution moves the signature by at most 2 bits, one insertion or
//! deletion by at most 1, which is exactly the radius the dictionary's
//! shared-address fan-out covers.
//!
//! Words are stored in a posting store keyed by dictionary address: each
//! word appears under every distinct address of its signature's entry. A
//! lookup fetches the posting lists for the query signature's addresses
//! (at most 16 probes), then post-filters candidates by exact signature
//! distance, so false positives never survive.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::Path;

use thiserror::Error;

use crate::ffd::build_entry;
use crate::golay::{hamming, GolayCodec, Vector23};
use crate::pair::Address23;

/// File magic for posting stores.
pub const STORE_MAGIC: [u8; 4] = *b"FFDX";
/// Posting store format version for flat (single-segment) stores.
pub const STORE_VERSION: u32 = 1;

/// Errors from letter maps, posting stores, and lookups.
#[derive(Debug, Error)]
pub enum LexiconError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("letter map line {line}: {message}")]
    BadMapLine { line: usize, message: String },
    #[error("letter map does not assign letter '{0}'")]
    UnassignedLetter(char),
    #[error("not a posting store file (bad magic)")]
    BadMagic,
    #[error("unsupported posting store version {0}")]
    BadVersion(u32),
    #[error("posting store is corrupt: {0}")]
    Corrupt(&'static str),
    #[error("store generator {store:#05x} does not match codec generator {codec:#05x}")]
    GeneratorMismatch { store: u32, codec: u32 },
    #[error("signature distance bound {0} exceeds the guaranteed radius 2")]
    DistanceTooLarge(u32),
}

/// Total map from the 26 lowercase letters onto bit positions `0..23`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterMap {
    positions: [u8; 26],
}

impl LetterMap {
    /// The built-in fold: the twenty most frequent English letters
    /// (e t a o i n s h r d l c u m w f g y p b) get positions 0-19 in that
    /// order, and the six rarest share the last three positions pairwise:
    /// v/k at 20, j/x at 21, q/z at 22. Folding only rare letters keeps
    /// signature collisions between unrelated words unlikely.
    pub fn default_map() -> Self {
        const ORDER: [u8; 20] = *b"etaoinshrdlcumwfgypb";
        let mut positions = [0u8; 26];
        for (pos, &letter) in ORDER.iter().enumerate() {
            positions[(letter - b'a') as usize] = pos as u8;
        }
        for (letter, pos) in [(b'v', 20), (b'k', 20), (b'j', 21), (b'x', 21), (b'q', 22), (b'z', 22)] {
            positions[(letter - b'a') as usize] = pos;
        }
        Self { positions }
    }

    /// Bit position for an ASCII letter (either case); `None` otherwise.
    #[inline]
    pub fn position(&self, ch: char) -> Option<u32> {
        let lower = ch.to_ascii_lowercase();
        if lower.is_ascii_lowercase() {
            Some(self.positions[(lower as u8 - b'a') as usize] as u32)
        } else {
            None
        }
    }

    /// Parse a map from text: one `<letter> <position>` pair per line,
    /// `#` starts a comment. All 26 letters must be assigned a position
    /// in `0..23`.
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut positions = [u8::MAX; 26];
        for (number, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |message: &str| LexiconError::BadMapLine {
                line: number + 1,
                message: message.to_string(),
            };
            let mut parts = line.split_whitespace();
            let letter = parts.next().ok_or_else(|| bad("missing letter"))?;
            let pos = parts.next().ok_or_else(|| bad("missing position"))?;
            if parts.next().is_some() {
                return Err(bad("expected exactly `letter position`"));
            }
            let [byte] = letter.as_bytes() else {
                return Err(bad("letter must be a single character"));
            };
            if !byte.is_ascii_lowercase() {
                return Err(bad("letter must be a-z"));
            }
            let pos: u8 = pos.parse().map_err(|_| bad("position must be an integer"))?;
            if pos >= 23 {
                return Err(bad("position must be in 0..23"));
            }
            positions[(byte - b'a') as usize] = pos;
        }
        for (i, &pos) in positions.iter().enumerate() {
            if pos == u8::MAX {
                return Err(LexiconError::UnassignedLetter((b'a' + i as u8) as char));
            }
        }
        Ok(Self { positions })
    }

    /// Load a map from a file in the [`parse`](Self::parse) format.
    pub fn from_file(path: impl AsRef<Path>) -> Result<Self, LexiconError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }
}

impl Default for LetterMap {
    fn default() -> Self {
        Self::default_map()
    }
}

/// A word's letter-presence signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    /// The 23-bit presence vector.
    pub bits: Vector23,
    /// False when the input contained no mappable letters (the signature
    /// is then 0, which is still a valid key).
    pub has_letters: bool,
}

/// Compute the signature of `word` under `map`.
pub fn signature(word: &str, map: &LetterMap) -> Signature {
    let mut bits = 0u32;
    let mut has_letters = false;
    for ch in word.chars() {
        if let Some(pos) = map.position(ch) {
            bits |= 1 << pos;
            has_letters = true;
        }
    }
    Signature { bits: Vector23::from_raw(bits), has_letters }
}

/// A ranked lookup result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordMatch {
    /// The stored (normalized) word.
    pub word: String,
    /// Signature Hamming distance to the query.
    pub distance: u32,
}

/// Address-keyed posting store over a normalized word list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PostingStore {
    generator: u32,
    words: Vec<String>,                // sorted; index = word id
    postings: Vec<(u32, u32)>,         // (address, word id), sorted, deduplicated
}

impl PostingStore {
    /// Index a word list: normalize to lowercase, drop blanks, collapse
    /// duplicates, then insert every word under each distinct address of
    /// its signature's dictionary entry.
    pub fn build(
        codec: &GolayCodec,
        map: &LetterMap,
        words: impl IntoIterator<Item = String>,
    ) -> Self {
        let unique: BTreeSet<String> = words
            .into_iter()
            .map(|w| w.trim().to_lowercase())
            .filter(|w| !w.is_empty())
            .collect();
        let words: Vec<String> = unique.into_iter().collect();

        let mut postings = Vec::with_capacity(words.len() * 16);
        for (id, word) in words.iter().enumerate() {
            let sig = signature(word, map);
            let entry = build_entry(codec, sig.bits);
            let mut addresses: Vec<u32> = entry.addresses().map(|a| a.bits()).collect();
            addresses.sort_unstable();
            addresses.dedup();
            for addr in addresses {
                postings.push((addr, id as u32));
            }
        }
        postings.sort_unstable();
        postings.dedup();

        Self { generator: codec.generator(), words, postings }
    }

    /// Generator polynomial the signatures were indexed under.
    pub fn generator(&self) -> u32 {
        self.generator
    }

    /// Fail unless this store was built with the codec's generator.
    pub fn check_generator(&self, codec: &GolayCodec) -> Result<(), LexiconError> {
        if self.generator != codec.generator() {
            return Err(LexiconError::GeneratorMismatch {
                store: self.generator,
                codec: codec.generator(),
            });
        }
        Ok(())
    }

    /// Number of indexed words.
    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    /// Number of (address, word) posting pairs.
    pub fn posting_count(&self) -> usize {
        self.postings.len()
    }

    /// The indexed words in id order (sorted ascending).
    pub fn words(&self) -> &[String] {
        &self.words
    }

    /// Word ids posted under `address`.
    pub fn ids_at(&self, address: Address23) -> impl Iterator<Item = u32> + '_ {
        let addr = address.bits();
        let start = self.postings.partition_point(|&(a, _)| a < addr);
        self.postings[start..]
            .iter()
            .take_while(move |&&(a, _)| a == addr)
            .map(|&(_, id)| id)
    }

    /// Serialize to `path` (see the store format in the module docs).
    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), LexiconError> {
        let mut w = BufWriter::new(File::create(path)?);
        w.write_all(&STORE_MAGIC)?;
        w.write_all(&STORE_VERSION.to_le_bytes())?;
        w.write_all(&self.generator.to_le_bytes())?;
        w.write_all(&(self.words.len() as u32).to_le_bytes())?;
        for word in &self.words {
            let bytes = word.as_bytes();
            w.write_all(&(bytes.len() as u16).to_le_bytes())?;
            w.write_all(bytes)?;
        }
        w.write_all(&(self.postings.len() as u64).to_le_bytes())?;
        for &(addr, id) in &self.postings {
            w.write_all(&addr.to_le_bytes())?;
            w.write_all(&id.to_le_bytes())?;
        }
        w.flush()?;
        Ok(())
    }

    /// Load a store saved by [`save`](Self::save).
    pub fn load(path: impl AsRef<Path>) -> Result<Self, LexiconError> {
        let mut r = BufReader::new(File::open(path)?);

        let mut magic = [0u8; 4];
        r.read_exact(&mut magic)?;
        if magic != STORE_MAGIC {
            return Err(LexiconError::BadMagic);
        }
        let version = read_u32(&mut r)?;
        if version != STORE_VERSION {
            return Err(LexiconError::BadVersion(version));
        }
        let generator = read_u32(&mut r)?;
        let word_count = read_u32(&mut r)? as usize;

        let mut words = Vec::with_capacity(word_count.min(1 << 20));
        for _ in 0..word_count {
            let len = read_u16(&mut r)? as usize;
            let mut bytes = vec![0u8; len];
            r.read_exact(&mut bytes)?;
            let word =
                String::from_utf8(bytes).map_err(|_| LexiconError::Corrupt("word is not UTF-8"))?;
            words.push(word);
        }

        let posting_count = read_u64(&mut r)?;
        let mut postings = Vec::with_capacity((posting_count as usize).min(1 << 24));
        let mut previous: Option<(u32, u32)> = None;
        for _ in 0..posting_count {
            let addr = read_u32(&mut r)?;
            let id = read_u32(&mut r)?;
            if addr > Vector23::MASK {
                return Err(LexiconError::Corrupt("address out of range"));
            }
            if id as usize >= words.len() {
                return Err(LexiconError::Corrupt("word id out of range"));
            }
            if let Some(prev) = previous {
                if prev >= (addr, id) {
                    return Err(LexiconError::Corrupt("postings not strictly sorted"));
                }
            }
            previous = Some((addr, id));
            postings.push((addr, id));
        }
        let mut trailing = [0u8; 1];
        if r.read(&mut trailing)? != 0 {
            return Err(LexiconError::Corrupt("trailing bytes after postings"));
        }

        Ok(Self { generator, words, postings })
    }
}

/// Fuzzy lookup: candidates sharing a dictionary address with the query
/// signature, post-filtered to exact signature distance `<= max_distance`,
/// ranked by (distance, word), truncated to `limit`.
///
/// `max_distance` beyond 2 is rejected: the address fan-out guarantees
/// nothing past that radius.
pub fn fuzzy_lookup(
    codec: &GolayCodec,
    map: &LetterMap,
    store: &PostingStore,
    query: &str,
    max_distance: u32,
    limit: usize,
) -> Result<Vec<WordMatch>, LexiconError> {
    if max_distance > 2 {
        return Err(LexiconError::DistanceTooLarge(max_distance));
    }
    store.check_generator(codec)?;

    let query_sig = signature(query, map);
    let entry = build_entry(codec, query_sig.bits);
    let mut addresses = [0u32; 16];
    let mut address_count = 0;
    for addr in entry.addresses() {
        let bits = addr.bits();
        if !addresses[..address_count].contains(&bits) {
            addresses[address_count] = bits;
            address_count += 1;
        }
    }

    let mut ids: Vec<u32> = addresses[..address_count]
        .iter()
        .flat_map(|&addr| store.ids_at(Address23::from_raw(addr)))
        .collect();
    ids.sort_unstable();
    ids.dedup();

    let mut matches: Vec<WordMatch> = ids
        .into_iter()
        .filter_map(|id| {
            let word = &store.words()[id as usize];
            let distance = hamming(signature(word, map).bits, query_sig.bits);
            (distance <= max_distance).then(|| WordMatch { word: word.clone(), distance })
        })
        .collect();
    matches.sort_by(|a, b| a.distance.cmp(&b.distance).then_with(|| a.word.cmp(&b.word)));
    matches.truncate(limit);
    Ok(matches)
}

/// Brute-force route: scan every stored word with the same filter and
/// ranking as [`fuzzy_lookup`]. Independent of the address machinery;
/// used as the equivalence oracle and the benchmark baseline.
pub fn scan_lookup(
    map: &LetterMap,
    store: &PostingStore,
    query: &str,
    max_distance: u32,
    limit: usize,
) -> Vec<WordMatch> {
    let query_sig = signature(query, map);
    let mut matches: Vec<WordMatch> = store
        .words()
        .iter()
        .filter_map(|word| {
            let distance = hamming(signature(word, map).bits, query_sig.bits);
            (distance <= max_distance).then(|| WordMatch { word: word.clone(), distance })
        })
        .collect();
    matches.sort_by(|a, b| a.distance.cmp(&b.distance).then_with(|| a.word.cmp(&b.word)));
    matches.truncate(limit);
    matches
}

fn read_u16(r: &mut impl Read) -> io::Result<u16> {
    let mut b = [0u8; 2];
    r.read_exact(&mut b)?;
    Ok(u16::from_le_bytes(b))
}

fn read_u32(r: &mut impl Read) -> io::Result<u32> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b)?;
    Ok(u32::from_le_bytes(b))
}

fn read_u64(r: &mut impl Read) -> io::Result<u64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    Ok(u64::from_le_bytes(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn store_from(codec: &GolayCodec, map: &LetterMap, words: &[&str]) -> PostingStore {
        PostingStore::build(codec, map, words.iter().map(|w| w.to_string()))
    }

    #[test]
    fn default_map_layout() {
        let map = LetterMap::default_map();
        assert_eq!(map.position('e'), Some(0));
        assert_eq!(map.position('t'), Some(1));
        assert_eq!(map.position('b'), Some(19));
        assert_eq!(map.position('j'), map.position('x'));
        assert_eq!(map.position('j'), Some(21));
        assert_eq!(map.position('q'), Some(22));
        assert_eq!(map.position('E'), Some(0), "case folded");
        assert_eq!(map.position('3'), None);

        // All 26 letters covered; all 23 positions used; exactly three
        // positions carry two letters.
        let mut counts = [0u32; 23];
        for ch in 'a'..='z' {
            counts[map.position(ch).unwrap() as usize] += 1;
        }
        assert!(counts.iter().all(|&c| c >= 1));
        assert_eq!(counts.iter().filter(|&&c| c == 2).count(), 3);
        assert_eq!(counts.iter().sum::<u32>(), 26);
    }

    #[test]
    fn map_parse_round_trip_and_errors() {
        let map = LetterMap::default_map();
        let mut text = String::from("# default fold\n");
        for ch in 'a'..='z' {
            text.push_str(&format!("{ch} {}\n", map.position(ch).unwrap()));
        }
        assert_eq!(LetterMap::parse(&text).unwrap(), map);

        assert!(matches!(
            LetterMap::parse("a 0\n"),
            Err(LexiconError::UnassignedLetter('b'))
        ));
        assert!(matches!(
            LetterMap::parse(&text.replace("a 2", "a 23")),
            Err(LexiconError::BadMapLine { .. })
        ));
        assert!(matches!(
            LetterMap::parse("aa 0\n"),
            Err(LexiconError::BadMapLine { .. })
        ));
    }

    #[test]
    fn signature_ignores_order_multiplicity_and_junk() {
        let map = LetterMap::default_map();
        assert_eq!(signature("listen", &map), signature("silent", &map));
        assert_eq!(signature("aa", &map), signature("a", &map));
        assert_eq!(signature("Test!", &map), signature("test", &map));
        let blank = signature("42 ?!", &map);
        assert_eq!(blank.bits.bits(), 0);
        assert!(!blank.has_letters);
        assert!(signature("a", &map).has_letters);
        assert_eq!(signature("", &map).bits.bits(), 0);
    }

    proptest! {
        // One substitution moves a signature by at most 2 bits; one
        // insertion or deletion by at most 1.
        #[test]
        fn edit_moves_signature_by_bounded_distance(
            word in "[a-z]{1,12}",
            pos in 0usize..12,
            ch_index in 0u8..26,
        ) {
            let map = LetterMap::default_map();
            let base = signature(&word, &map).bits;
            let pos = pos % word.len();
            let ch = (b'a' + ch_index) as char;

            let mut substituted: Vec<char> = word.chars().collect();
            substituted[pos] = ch;
            let substituted: String = substituted.into_iter().collect();
            prop_assert!(hamming(signature(&substituted, &map).bits, base) <= 2);

            let mut inserted: Vec<char> = word.chars().collect();
            inserted.insert(pos, ch);
            let inserted: String = inserted.into_iter().collect();
            prop_assert!(hamming(signature(&inserted, &map).bits, base) <= 1);

            let mut deleted: Vec<char> = word.chars().collect();
            deleted.remove(pos);
            let deleted: String = deleted.into_iter().collect();
            prop_assert!(hamming(signature(&deleted, &map).bits, base) <= 1);
        }
    }

    #[test]
    fn store_posts_words_under_their_entry_addresses() {
        let codec = GolayCodec::new();
        let map = LetterMap::default_map();
        let store = store_from(&codec, &map, &["alpha", "beta", "Gamma", "beta", "", "  "]);
        assert_eq!(store.word_count(), 3, "duplicates and blanks collapsed");
        assert_eq!(store.words(), &["alpha", "beta", "gamma"]);

        for (id, word) in store.words().iter().enumerate() {
            let entry = build_entry(&codec, signature(word, &map).bits);
            let mut addrs: Vec<u32> = entry.addresses().map(|a| a.bits()).collect();
            addrs.sort_unstable();
            addrs.dedup();
            for addr in &addrs {
                assert!(
                    store.ids_at(Address23::from_raw(*addr)).any(|i| i == id as u32),
                    "{word} missing under address {addr}"
                );
            }
            // A single word contributes at most 16 posting pairs.
            let posted = store
                .postings
                .iter()
                .filter(|&&(_, i)| i == id as u32)
                .count();
            assert_eq!(posted, addrs.len());
            assert!(posted <= 16);
        }
    }

    #[test]
    fn indexing_is_idempotent() {
        let codec = GolayCodec::new();
        let map = LetterMap::default_map();
        let words = &["carry", "curry", "ferry", "berry"];
        assert_eq!(store_from(&codec, &map, words), store_from(&codec, &map, words));
    }

    #[test]
    fn lookup_finds_exact_and_anagram_matches() {
        let codec = GolayCodec::new();
        let map = LetterMap::default_map();
        let store = store_from(&codec, &map, &["test", "toast", "taste", "rest"]);

        let hits = fuzzy_lookup(&codec, &map, &store, "test", 2, 10).unwrap();
        assert_eq!(hits[0].distance, 0);
        assert!(hits.iter().any(|m| m.word == "test"));

        // "tset" is an anagram of "test": identical signature, distance 0.
        let hits = fuzzy_lookup(&codec, &map, &store, "tset", 2, 10).unwrap();
        assert!(hits.iter().any(|m| m.word == "test" && m.distance == 0));
        // "taste" only adds letter 'a': distance 1, also found.
        assert!(hits.iter().any(|m| m.word == "taste" && m.distance == 1));
    }

    #[test]
    fn lookup_matches_scan_oracle_modulo_shared_address() {
        use rand::{Rng, SeedableRng};
        let codec = GolayCodec::new();
        let map = LetterMap::default_map();
        let words: Vec<&str> = vec![
            "apple", "apply", "ample", "maple", "grape", "grade", "trade", "tread",
            "bread", "break", "bream", "dream", "cream", "crease", "create", "crate",
            "trace", "track", "trick", "truck", "stuck", "stock", "stick", "brick",
        ];
        let store = store_from(&codec, &map, &words);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(51);

        for _ in 0..80 {
            let base = words[rng.gen_range(0..words.len())];
            let mut chars: Vec<char> = base.chars().collect();
            let pos = rng.gen_range(0..chars.len());
            match rng.gen_range(0..3) {
                0 => chars[pos] = (b'a' + rng.gen_range(0..26)) as char,
                1 => chars.insert(pos, (b'a' + rng.gen_range(0..26)) as char),
                _ => {
                    chars.remove(pos);
                }
            }
            let query: String = chars.into_iter().collect();

            let fuzzy = fuzzy_lookup(&codec, &map, &store, &query, 2, usize::MAX).unwrap();
            let scan = scan_lookup(&map, &store, &query, 2, usize::MAX);

            // No false positives: every fuzzy hit is a scan hit.
            for hit in &fuzzy {
                assert!(scan.contains(hit), "false positive {hit:?}");
            }
            // Misses are exactly the scan hits whose signature shares no
            // address with the query signature.
            let query_record = build_entry(&codec, signature(&query, &map).bits).record();
            for hit in &scan {
                let word_record = build_entry(&codec, signature(&hit.word, &map).bits).record();
                let found = fuzzy.contains(hit);
                assert_eq!(
                    found,
                    query_record.shares_address(&word_record),
                    "candidate set must equal the shared-address relation for {hit:?}"
                );
            }
        }
    }

    #[test]
    fn lookup_rejects_wide_radius_and_wrong_generator() {
        let codec = GolayCodec::new();
        let map = LetterMap::default_map();
        let store = store_from(&codec, &map, &["word"]);
        assert!(matches!(
            fuzzy_lookup(&codec, &map, &store, "word", 3, 10),
            Err(LexiconError::DistanceTooLarge(3))
        ));

        let other = GolayCodec::with_generator(0xAE3).unwrap();
        assert!(matches!(
            fuzzy_lookup(&other, &map, &store, "word", 2, 10),
            Err(LexiconError::GeneratorMismatch { .. })
        ));
    }

    #[test]
    fn save_load_round_trip_and_corruption() {
        let codec = GolayCodec::new();
        let map = LetterMap::default_map();
        let store = store_from(&codec, &map, &["round", "trip", "store"]);
        let dir = tempfile::tempdir().unwrap();

        let path = dir.path().join("words.ffdx");
        store.save(&path).unwrap();
        assert_eq!(PostingStore::load(&path).unwrap(), store);

        let bad_magic = dir.path().join("bad.ffdx");
        std::fs::write(&bad_magic, b"WHAT2222").unwrap();
        assert!(matches!(PostingStore::load(&bad_magic), Err(LexiconError::BadMagic)));

        // Truncated file: cut the last posting pair in half.
        let bytes = std::fs::read(&path).unwrap();
        let cut = dir.path().join("cut.ffdx");
        std::fs::write(&cut, &bytes[..bytes.len() - 4]).unwrap();
        assert!(PostingStore::load(&cut).is_err());
    }
}
