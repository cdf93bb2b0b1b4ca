//! The pair combiner by hand: fold two labels into an address, fan a
//! six-label set out to its 15 pair addresses, and show why canonical
//! ordering matters.
//!
//! ```bash
//! cargo run --release -p fuzzyfind --example pair_fanout
//! ```

use fuzzyfind::golay::{GolayCodec, Label12};
use fuzzyfind::pair::{fifteen_addresses, own_address, pair_address};
use fuzzyfind::sphere::label_set;
use fuzzyfind::Vector23;

fn main() {
    let codec = GolayCodec::new();

    // The raw combiner: concatenate (small label high), fold, mask.
    let (h1, h2) = (Label12::new(50).unwrap(), Label12::new(72).unwrap());
    let combined = ((h1.bits() as u32) << 12) | h2.bits() as u32;
    let addr = pair_address(h1, h2);
    println!("pair({h1}, {h2}): combined {combined:#08x} -> address {addr}");
    println!("own({h1}) = self-pair = {}", own_address(h1));

    // Both orders of the same unordered pair give one address; the
    // combiner insists on canonical order to make that impossible to
    // get wrong silently.
    println!("pair(0, 1) = {}", pair_address(Label12::new(0).unwrap(), Label12::new(1).unwrap()));

    // Fan out a real six-label set.
    let v = Vector23::new(1000).unwrap();
    let set = label_set(&codec, v);
    if set.cardinality() == 6 {
        let addresses = fifteen_addresses(set.labels());
        println!("index {v} labels: {:?}", set.labels().iter().map(|l| l.bits()).collect::<Vec<_>>());
        println!("15 pair addresses in (i, j) order:");
        let mut slot = 0;
        for i in 0..6 {
            for j in (i + 1)..6 {
                println!(
                    "  [{slot:2}] ({}, {}) -> {}",
                    set.labels()[i],
                    set.labels()[j],
                    addresses[slot]
                );
                slot += 1;
            }
        }
    } else {
        println!("index {v} has a one-label sphere; no fan-out of its own");
    }
}
