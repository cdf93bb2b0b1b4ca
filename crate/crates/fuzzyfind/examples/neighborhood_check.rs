//! The 277-neighbor check: does every vector within Hamming distance 2 of
//! a center share an address with it? Runs a handful of seeded centers and
//! prints per-center tallies plus a few failing pairs, if any.
//!
//! ```bash
//! cargo run --release -p fuzzyfind --example neighborhood_check [count] [seed]
//! ```

use fuzzyfind::ffd::{build_entry, verify_neighborhood};
use fuzzyfind::golay::{GolayCodec, Vector23};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().map_or(20, |a| a.parse().expect("count"));
    let seed: u64 = args.next().map_or(42, |a| a.parse().expect("seed"));

    let codec = GolayCodec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut checked = 0usize;
    let mut failed = 0usize;
    for _ in 0..count {
        let center = Vector23::new(rng.gen_range(0..Vector23::DOMAIN)).unwrap();
        let report = verify_neighborhood(&codec, center);
        checked += report.checked;
        failed += report.failures.len();
        println!(
            "center {center}: {}/{} neighbors share an address",
            report.passed(),
            report.checked
        );
        for neighbor in report.failures.iter().take(2) {
            let center_addrs: Vec<u32> = build_entry(&codec, center)
                .record()
                .addresses()
                .map(|a| a.bits())
                .collect();
            let neighbor_addrs: Vec<u32> = build_entry(&codec, *neighbor)
                .record()
                .addresses()
                .map(|a| a.bits())
                .collect();
            println!("  no shared address with {neighbor}:");
            println!("    center   {center_addrs:?}");
            println!("    neighbor {neighbor_addrs:?}");
        }
    }
    println!(
        "total: {}/{} pairs pass ({:.2}%)",
        checked - failed,
        checked,
        100.0 * (checked - failed) as f64 / checked as f64
    );
    println!("(six-label vs recovered pairs straddling two decoding regions account for the misses)");
}
