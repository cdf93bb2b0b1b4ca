//! Radius-1 sphere decoding: how an index gets its six-or-one label set,
//! and how the split looks over a slice of the domain.
//!
//! ```bash
//! cargo run --release -p fuzzyfind --example sphere_labels [index...]
//! ```

use fuzzyfind::golay::{hamming, GolayCodec, Label12, Vector23};
use fuzzyfind::sphere::{census, label_set, sphere};

fn main() {
    let codec = GolayCodec::new();

    let indices: Vec<Vector23> = {
        let args: Vec<u32> = std::env::args()
            .skip(1)
            .map(|a| a.parse().expect("index must be an integer"))
            .collect();
        if args.is_empty() {
            // A codeword, a near miss, and a deep hole.
            let c = codec.encode(Label12::new(0x5A5).unwrap());
            vec![c, c.flip(4).flip(11), c.flip(4).flip(11).flip(19)]
        } else {
            args.into_iter()
                .map(|bits| Vector23::new(bits).expect("index must fit in 23 bits"))
                .collect()
        }
    };

    for v in indices {
        let set = label_set(&codec, v);
        let distance = hamming(v, codec.decode(v));
        println!(
            "index {v}: distance-to-codeword {distance}, {} label(s), zero label {}",
            set.cardinality(),
            set.zero_label()
        );
        println!(
            "  labels: [{}]",
            set.labels()
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
        // The sphere itself, for the curious.
        let members: Vec<String> = sphere(v).iter().take(4).map(|w| w.to_string()).collect();
        println!("  sphere starts [{} ...] (24 members)", members.join(", "));
    }

    // Case split over the first million indices.
    let slice = census(&codec, 0..1_000_000);
    println!(
        "first 1e6 indices: six-label {} ({:.2}%), one-label {} ({:.2}%)",
        slice.six_labels,
        slice.percent_six(),
        slice.one_label,
        slice.percent_one()
    );
}
