//! Build dictionary entries for two indices and intersect their address
//! sets — the worked 1000/480 pair by default, any pair by argument.
//!
//! ```bash
//! cargo run --release -p fuzzyfind --example entry_inspect [a b]
//! ```

use fuzzyfind::ffd::{build_entry, EntryKind};
use fuzzyfind::golay::{hamming, GolayCodec, Vector23};

fn main() {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("index must be an integer"))
        .collect();
    let (a, b) = match args.as_slice() {
        [] => (1000, 480),
        [a, b] => (*a, *b),
        _ => panic!("expected zero or two indices"),
    };
    let a = Vector23::new(a).expect("index must fit in 23 bits");
    let b = Vector23::new(b).expect("index must fit in 23 bits");

    let codec = GolayCodec::new();
    println!("indices {a} and {b}: Hamming distance {}", hamming(a, b));

    let dump = |v: Vector23| {
        let entry = build_entry(&codec, v);
        let kind = match entry.kind() {
            EntryKind::SixLabels => "six-label".to_string(),
            EntryKind::Recovered { delta } => format!("recovered via XOR {delta}"),
            EntryKind::Single => "single-address".to_string(),
        };
        println!("{v} ({kind}):");
        for (slot, addr) in entry.addresses().enumerate() {
            println!("  [{slot:2}] {addr}");
        }
        entry.record()
    };
    let record_a = dump(a);
    let record_b = dump(b);

    let shared: Vec<u32> = record_a
        .addresses()
        .filter(|addr| record_b.addresses().any(|other| other == *addr))
        .map(|addr| addr.bits())
        .collect();
    if shared.is_empty() {
        println!("no shared address");
    } else {
        println!("shared addresses: {shared:?}");
    }
}
