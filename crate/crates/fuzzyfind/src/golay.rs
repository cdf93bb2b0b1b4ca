//! The perfect (23, 12, 7) binary Golay code.
//!
//! Codewords are 23-bit integers laid out systematically: the 12 information
//! bits occupy the top positions (bits 11..=22) and the 11 parity bits the
//! low positions (bits 0..=10). The code corrects any error of weight <= 3,
//! and because it is perfect the radius-3 Hamming balls around the 4,096
//! codewords tile the whole 23-bit space exactly:
//!
//! ```text
//! 2^12 * (C(23,0) + C(23,1) + C(23,2) + C(23,3)) = 2^12 * 2048 = 2^23
//! ```
//!
//! Decoding is table-driven: a 2,048-entry syndrome table maps every 11-bit
//! syndrome to its unique coset leader of weight <= 3, so a decode is one
//! syndrome computation and one XOR.

use std::fmt;

use thiserror::Error;

/// Generator polynomial `x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1`.
///
/// One of the two degree-11 factors of `x^23 + 1` over GF(2); the other is
/// its reciprocal `0xAE3`. Fixed per build and recorded in every output
/// file header so that stores and tables cannot be mixed across conventions.
pub const GENERATOR: u32 = 0xC75;

/// Errors from codec construction and value validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GolayError {
    /// A raw integer did not fit the 23-bit key domain.
    #[error("value {0} does not fit in 23 bits (max 8388607)")]
    ValueTooWide(u32),
    /// A raw integer did not fit the 12-bit label domain.
    #[error("label {0} does not fit in 12 bits (max 4095)")]
    LabelTooWide(u16),
    /// The generator polynomial does not yield a perfect (23, 12) code:
    /// some syndrome is covered by two weight-<=3 patterns.
    #[error("generator {generator:#05x} is not a perfect-code generator: syndrome {syndrome:#05x} has two coset leaders of weight <= 3")]
    SyndromeDoublyCovered { generator: u32, syndrome: u16 },
    /// The generator polynomial does not yield a perfect (23, 12) code:
    /// some syndrome is reached by no weight-<=3 pattern.
    #[error("generator {generator:#05x} is not a perfect-code generator: syndrome {syndrome:#05x} has no coset leader of weight <= 3")]
    SyndromeUncovered { generator: u32, syndrome: u16 },
    /// The generator polynomial must have degree exactly 11.
    #[error("generator {0:#x} does not have degree 11")]
    BadGeneratorDegree(u32),
}

/// A 23-bit vector: a dictionary index, a word signature, or a codeword.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Vector23(u32);

impl Vector23 {
    /// Bit width of the key domain.
    pub const BITS: u32 = 23;
    /// Mask of all 23 valid bits.
    pub const MASK: u32 = (1 << 23) - 1;
    /// Number of distinct 23-bit vectors (8,388,608).
    pub const DOMAIN: u32 = 1 << 23;

    /// Checked constructor; values >= 2^23 are rejected, not masked.
    pub fn new(bits: u32) -> Result<Self, GolayError> {
        if bits > Self::MASK {
            Err(GolayError::ValueTooWide(bits))
        } else {
            Ok(Self(bits))
        }
    }

    /// Constructor for values already known to be in range.
    #[inline]
    pub(crate) const fn from_raw(bits: u32) -> Self {
        debug_assert!(bits <= Self::MASK);
        Self(bits)
    }

    /// The raw 23-bit value.
    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// This vector with bit `pos` flipped.
    #[inline]
    pub fn flip(self, pos: u32) -> Self {
        assert!(pos < Self::BITS, "bit position {pos} out of range");
        Self(self.0 ^ (1 << pos))
    }

    /// Number of set bits.
    #[inline]
    pub const fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// All 2^23 vectors in ascending order.
    pub fn all() -> impl Iterator<Item = Self> {
        (0..Self::DOMAIN).map(Self)
    }
}

impl TryFrom<u32> for Vector23 {
    type Error = GolayError;
    fn try_from(bits: u32) -> Result<Self, Self::Error> {
        Self::new(bits)
    }
}

impl From<Vector23> for u32 {
    fn from(v: Vector23) -> u32 {
        v.0
    }
}

impl std::ops::BitXor for Vector23 {
    type Output = Vector23;
    #[inline]
    fn bitxor(self, rhs: Vector23) -> Vector23 {
        Vector23(self.0 ^ rhs.0)
    }
}

impl fmt::Display for Vector23 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A 12-bit hash label: the information part of a decoded codeword.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Label12(u16);

impl Label12 {
    /// Mask of all 12 valid bits.
    pub const MASK: u16 = (1 << 12) - 1;
    /// Number of distinct labels (4,096).
    pub const DOMAIN: u16 = 1 << 12;

    /// Checked constructor; values >= 2^12 are rejected.
    pub fn new(bits: u16) -> Result<Self, GolayError> {
        if bits > Self::MASK {
            Err(GolayError::LabelTooWide(bits))
        } else {
            Ok(Self(bits))
        }
    }

    #[inline]
    pub(crate) const fn from_raw(bits: u16) -> Self {
        debug_assert!(bits <= Self::MASK);
        Self(bits)
    }

    /// The raw 12-bit value.
    #[inline]
    pub const fn bits(self) -> u16 {
        self.0
    }
}

impl fmt::Display for Label12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An 11-bit syndrome: zero exactly for codewords.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syndrome11(u16);

impl Syndrome11 {
    /// Number of distinct syndromes (2,048).
    pub const DOMAIN: u16 = 1 << 11;

    /// The raw 11-bit value.
    #[inline]
    pub const fn bits(self) -> u16 {
        self.0
    }
}

/// Fixed parameters of the codec.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodecParams {
    /// Code length in bits.
    pub n: u32,
    /// Information length in bits.
    pub k: u32,
    /// Correction radius (maximum correctable error weight).
    pub t: u32,
    /// Generator polynomial, bit i = coefficient of x^i.
    pub generator: u32,
}

impl CodecParams {
    fn with_generator(generator: u32) -> Self {
        Self { n: 23, k: 12, t: 3, generator }
    }
}

impl Default for CodecParams {
    fn default() -> Self {
        Self::with_generator(GENERATOR)
    }
}

/// Syndrome-indexed table of the 2,048 coset leaders (weight <= 3).
#[derive(Debug, Clone)]
pub struct ErrorTable {
    entries: Box<[u32]>, // indexed by syndrome, length 2048
}

impl ErrorTable {
    /// The unique weight-<=3 error pattern with the given syndrome.
    #[inline]
    pub fn pattern(&self, syndrome: Syndrome11) -> Vector23 {
        Vector23::from_raw(self.entries[syndrome.0 as usize])
    }

    /// Number of entries (always 2,048).
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false; present for iterator-style completeness.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Remainder of polynomial division over GF(2); bit i = coefficient of x^i.
fn gf2_mod(mut value: u32, divisor: u32) -> u32 {
    debug_assert!(divisor != 0);
    let deg = 31 - divisor.leading_zeros();
    while value >> deg != 0 {
        let shift = (31 - value.leading_zeros()) - deg;
        value ^= divisor << shift;
    }
    value
}

/// Encoder/decoder for the (23, 12, 7) code.
///
/// Construction builds the full syndrome table once (a few milliseconds);
/// afterwards the codec is immutable and freely shareable across threads.
#[derive(Debug, Clone)]
pub struct GolayCodec {
    params: CodecParams,
    /// Syndrome of `hi << 11` for each 12-bit `hi`; with the low 11 bits
    /// being their own remainder, `syndrome(v) = hi_table[v >> 11] ^ (v & 0x7ff)`.
    hi_syndromes: Box<[u16]>,
    errors: ErrorTable,
}

impl GolayCodec {
    /// Codec with the default generator polynomial.
    pub fn new() -> Self {
        Self::with_generator(GENERATOR).expect("default generator yields a perfect code")
    }

    /// Codec with a caller-supplied degree-11 generator polynomial.
    ///
    /// Fails unless the polynomial generates a perfect (23, 12) code, i.e.
    /// the 2,048 weight-<=3 error patterns cover every syndrome exactly
    /// once. Useful for the reciprocal generator `0xAE3`; anything else is
    /// rejected here rather than producing silently wrong decodes.
    pub fn with_generator(generator: u32) -> Result<Self, GolayError> {
        if generator >> 11 != 1 {
            return Err(GolayError::BadGeneratorDegree(generator));
        }
        let hi_syndromes: Box<[u16]> = (0u32..4096)
            .map(|hi| gf2_mod(hi << 11, generator) as u16)
            .collect();

        const UNSET: u32 = u32::MAX;
        let mut entries = vec![UNSET; Syndrome11::DOMAIN as usize];
        let mut place = |pattern: u32| -> Result<(), GolayError> {
            let syndrome = gf2_mod(pattern, generator) as usize;
            if entries[syndrome] != UNSET {
                return Err(GolayError::SyndromeDoublyCovered {
                    generator,
                    syndrome: syndrome as u16,
                });
            }
            entries[syndrome] = pattern;
            Ok(())
        };

        place(0)?;
        for i in 0..23 {
            place(1 << i)?;
        }
        for i in 0..23 {
            for j in (i + 1)..23 {
                place((1 << i) | (1 << j))?;
            }
        }
        for i in 0..23 {
            for j in (i + 1)..23 {
                for k in (j + 1)..23 {
                    place((1 << i) | (1 << j) | (1 << k))?;
                }
            }
        }

        if let Some(s) = entries.iter().position(|&e| e == UNSET) {
            return Err(GolayError::SyndromeUncovered { generator, syndrome: s as u16 });
        }

        Ok(Self {
            params: CodecParams::with_generator(generator),
            hi_syndromes,
            errors: ErrorTable { entries: entries.into_boxed_slice() },
        })
    }

    /// The fixed code parameters.
    pub fn params(&self) -> &CodecParams {
        &self.params
    }

    /// The generator polynomial this codec was built with.
    pub fn generator(&self) -> u32 {
        self.params.generator
    }

    /// The syndrome-indexed coset-leader table.
    pub fn error_table(&self) -> &ErrorTable {
        &self.errors
    }

    /// Systematic encoding: information in the top 12 bits, the parity
    /// remainder of `info(x) * x^11` in the low 11.
    #[inline]
    pub fn encode(&self, info: Label12) -> Vector23 {
        let shifted = (info.0 as u32) << 11;
        Vector23::from_raw(shifted | gf2_mod(shifted, self.params.generator))
    }

    /// 11-bit syndrome; zero exactly when `v` is a codeword, and linear in
    /// `v` (`syndrome(a ^ b) = syndrome(a) ^ syndrome(b)`).
    #[inline]
    pub fn syndrome(&self, v: Vector23) -> Syndrome11 {
        let bits = v.0;
        Syndrome11(self.hi_syndromes[(bits >> 11) as usize] ^ (bits & 0x7ff) as u16)
    }

    /// True when `v` is one of the 4,096 codewords.
    #[inline]
    pub fn is_codeword(&self, v: Vector23) -> bool {
        self.syndrome(v).0 == 0
    }

    /// The unique codeword within Hamming distance 3 of `v`. Never fails:
    /// the code is perfect, so every vector has exactly one such codeword.
    #[inline]
    pub fn decode(&self, v: Vector23) -> Vector23 {
        let syndrome = self.syndrome(v);
        Vector23::from_raw(v.0 ^ self.errors.entries[syndrome.0 as usize])
    }

    /// Information part of the nearest codeword; the hot path of the
    /// sphere-label computation.
    #[inline]
    pub fn decode_info(&self, v: Vector23) -> Label12 {
        info_of(self.decode(v))
    }
}

impl Default for GolayCodec {
    fn default() -> Self {
        Self::new()
    }
}

/// Top 12 bits of a codeword: its information word.
///
/// Layout-only; meaningful when `c` is a codeword (`c = encode(info_of(c))`).
#[inline]
pub fn info_of(c: Vector23) -> Label12 {
    Label12::from_raw((c.0 >> 11) as u16)
}

/// Hamming distance: number of bit positions in which `a` and `b` differ.
#[inline]
pub fn hamming(a: Vector23, b: Vector23) -> u32 {
    (a.0 ^ b.0).count_ones()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent long-division oracle: feeds the 23 coefficients of
    /// `info(x) * x^11` MSB-first through an 11-bit shift register.
    fn remainder_bitwise(info: u16, generator: u32) -> u32 {
        let mut reg: u32 = 0;
        for i in (0..23).rev() {
            let bit = if i >= 11 { (info as u32 >> (i - 11)) & 1 } else { 0 };
            reg = (reg << 1) | bit;
            if reg & (1 << 11) != 0 {
                reg ^= generator;
            }
        }
        reg
    }

    #[test]
    fn zero_encodes_to_zero() {
        let codec = GolayCodec::new();
        assert_eq!(codec.encode(Label12::new(0).unwrap()).bits(), 0);
    }

    #[test]
    fn encodings_are_distinct_codewords() {
        let codec = GolayCodec::new();
        let mut seen = vec![false; 1 << 23];
        for m in 0..4096u16 {
            let c = codec.encode(Label12::new(m).unwrap());
            assert!(codec.is_codeword(c), "encode({m}) has nonzero syndrome");
            assert_eq!(info_of(c).bits(), m, "systematic layout broken");
            assert!(!seen[c.bits() as usize], "encode not injective at {m}");
            seen[c.bits() as usize] = true;
        }
    }

    #[test]
    fn encode_matches_long_division_oracle() {
        let codec = GolayCodec::new();
        for info in [0u16, 1, 0x800, 0xFFF] {
            let expected = ((info as u32) << 11) | remainder_bitwise(info, GENERATOR);
            assert_eq!(codec.encode(Label12::new(info).unwrap()).bits(), expected);
        }
        // Frozen oracle value for the all-ones information word.
        let oracle_fff = ((0xFFFu32) << 11) | remainder_bitwise(0xFFF, GENERATOR);
        assert_eq!(codec.encode(Label12::new(0xFFF).unwrap()).bits(), oracle_fff);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let info: u16 = rng.gen_range(0..4096);
            let expected = ((info as u32) << 11) | remainder_bitwise(info, GENERATOR);
            assert_eq!(codec.encode(Label12::new(info).unwrap()).bits(), expected);
        }
    }

    #[test]
    fn syndrome_is_linear_and_zero_on_codewords() {
        let codec = GolayCodec::new();
        assert_eq!(codec.syndrome(Vector23::new(0).unwrap()).bits(), 0);
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..500 {
            let a = Vector23::new(rng.gen_range(0..Vector23::DOMAIN)).unwrap();
            let b = Vector23::new(rng.gen_range(0..Vector23::DOMAIN)).unwrap();
            assert_eq!(
                codec.syndrome(a ^ b).bits(),
                codec.syndrome(a).bits() ^ codec.syndrome(b).bits()
            );
            let m = Label12::new(rng.gen_range(0..4096)).unwrap();
            assert_eq!(codec.syndrome(codec.encode(m)).bits(), 0);
            assert_eq!(
                codec.syndrome(codec.encode(m) ^ a).bits(),
                codec.syndrome(a).bits()
            );
        }
    }

    #[test]
    fn error_table_holds_coset_leaders() {
        let codec = GolayCodec::new();
        let table = codec.error_table();
        assert_eq!(table.len(), 2048);
        assert_eq!(table.pattern(Syndrome11(0)).bits(), 0);
        // 1 + 23 + 253 + 1771 weight-<=3 patterns fill the table exactly.
        let mut weight_counts = [0u32; 4];
        for s in 0..2048u16 {
            let e = table.pattern(Syndrome11(s));
            assert!(e.weight() <= 3, "coset leader of weight {}", e.weight());
            assert_eq!(codec.syndrome(e).bits(), s, "pattern/syndrome mismatch");
            weight_counts[e.weight() as usize] += 1;
        }
        assert_eq!(weight_counts, [1, 23, 253, 1771]);
        // A weight-1 pattern is its own coset leader.
        let e = Vector23::new(1 << 5).unwrap();
        assert_eq!(table.pattern(codec.syndrome(e)), e);
    }

    #[test]
    fn decode_corrects_up_to_three_errors() {
        let codec = GolayCodec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let c = codec.encode(Label12::new(rng.gen_range(0..4096)).unwrap());
            assert_eq!(codec.decode(c), c);
            for i in 0..23 {
                assert_eq!(codec.decode(c.flip(i)), c);
                // sampled double and triple errors on top of bit i
                let j = rng.gen_range(0..23);
                let k = rng.gen_range(0..23);
                let e = (1u32 << i) | (1 << j) | (1 << k);
                if e.count_ones() <= 3 {
                    assert_eq!(codec.decode(c ^ Vector23::from_raw(e)), c);
                }
            }
        }
    }

    #[test]
    fn decode_matches_brute_force_nearest() {
        let codec = GolayCodec::new();
        let codewords: Vec<Vector23> = (0..4096u16)
            .map(|m| codec.encode(Label12::from_raw(m)))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..100 {
            let v = Vector23::new(rng.gen_range(0..Vector23::DOMAIN)).unwrap();
            let nearest = codewords
                .iter()
                .copied()
                .min_by_key(|&c| hamming(v, c))
                .unwrap();
            assert_eq!(codec.decode(v), nearest);
            assert!(hamming(v, nearest) <= 3);
        }
    }

    #[test]
    fn decode_commutes_with_codeword_translation() {
        let codec = GolayCodec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for _ in 0..300 {
            let v = Vector23::new(rng.gen_range(0..Vector23::DOMAIN)).unwrap();
            let c = codec.encode(Label12::new(rng.gen_range(0..4096)).unwrap());
            assert_eq!(codec.decode(v ^ c), codec.decode(v) ^ c);
        }
    }

    #[test]
    fn weight_distribution_is_golay() {
        let codec = GolayCodec::new();
        let mut counts = [0u32; 24];
        for m in 0..4096u16 {
            counts[codec.encode(Label12::from_raw(m)).weight() as usize] += 1;
        }
        let mut expected = [0u32; 24];
        expected[0] = 1;
        expected[7] = 253;
        expected[8] = 506;
        expected[11] = 1288;
        expected[12] = 1288;
        expected[15] = 506;
        expected[16] = 253;
        expected[23] = 1;
        assert_eq!(counts, expected);
        // Minimum pairwise distance of a linear code = minimum nonzero weight.
        let min_dist = (1..24).find(|&w| counts[w] > 0).unwrap();
        assert_eq!(min_dist, 7);
    }

    #[test]
    fn hamming_distance_basics() {
        let x = Vector23::new(0x15A60).unwrap();
        assert_eq!(hamming(x, x), 0);
        assert_eq!(
            hamming(Vector23::new(1000).unwrap(), Vector23::new(480).unwrap()),
            2
        );
    }

    #[test]
    fn wide_values_rejected_at_boundary() {
        assert_eq!(
            Vector23::new(1 << 23),
            Err(GolayError::ValueTooWide(1 << 23))
        );
        assert_eq!(Label12::new(1 << 12), Err(GolayError::LabelTooWide(1 << 12)));
        assert!(Vector23::new(Vector23::MASK).is_ok());
        assert!(Label12::new(Label12::MASK).is_ok());
    }

    #[test]
    fn generator_validation() {
        // The reciprocal polynomial also generates the Golay code.
        assert!(GolayCodec::with_generator(0xAE3).is_ok());
        // A non-Golay degree-11 polynomial cannot tile the space.
        assert!(matches!(
            GolayCodec::with_generator(0xC76),
            Err(GolayError::SyndromeDoublyCovered { .. })
        ));
        // Degree must be 11.
        assert_eq!(
            GolayCodec::with_generator(0x475).err(),
            Some(GolayError::BadGeneratorDegree(0x475))
        );
    }
}
