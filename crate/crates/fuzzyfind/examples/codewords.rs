//! The (23, 12, 7) codec in isolation: encode an information word, corrupt
//! it, decode it back, and tally the codeword weight distribution.
//!
//! ```bash
//! cargo run --release -p fuzzyfind --example codewords
//! ```

use fuzzyfind::golay::{hamming, info_of, GolayCodec, Label12, Vector23};

fn main() {
    let codec = GolayCodec::new();
    println!(
        "codec: n={} k={} t={} generator={:#05x}",
        codec.params().n,
        codec.params().k,
        codec.params().t,
        codec.generator()
    );

    // Encode, then flip three bits: decode still recovers the codeword.
    let info = Label12::new(0xABC).unwrap();
    let codeword = codec.encode(info);
    println!("encode({}) = {} ({:023b})", info, codeword, codeword.bits());

    let corrupted = codeword.flip(2).flip(9).flip(17);
    let decoded = codec.decode(corrupted);
    println!(
        "corrupt 3 bits -> {} ; decode -> {} ; info_of = {} ; distance {}",
        corrupted,
        decoded,
        info_of(decoded),
        hamming(corrupted, decoded)
    );
    assert_eq!(decoded, codeword);

    // Syndromes: zero exactly on codewords.
    println!(
        "syndrome(codeword) = {} ; syndrome(corrupted) = {}",
        codec.syndrome(codeword).bits(),
        codec.syndrome(corrupted).bits()
    );

    // Weight distribution over all 4,096 codewords.
    let mut counts = [0u32; 24];
    for m in 0..4096u16 {
        counts[codec.encode(Label12::new(m).unwrap()).weight() as usize] += 1;
    }
    println!("codeword weight distribution:");
    for (weight, &count) in counts.iter().enumerate() {
        if count > 0 {
            println!("  weight {weight:2}: {count}");
        }
    }

    // The perfect-code identity: weight-<=3 balls tile the space.
    let ball: u64 = 1 + 23 + 253 + 1771;
    assert_eq!(4096 * ball, u64::from(Vector23::DOMAIN));
    println!("4096 codewords x {ball} ball vectors = 2^23 = {}", Vector23::DOMAIN);
}
