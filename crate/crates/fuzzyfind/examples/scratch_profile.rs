// Temporary profiling harness; deleted before finalizing.
use fuzzyfind::ffd::build_entry;
use fuzzyfind::golay::GolayCodec;
use fuzzyfind::lexicon::{signature, LetterMap, PostingStore};
use fuzzyfind::pair::Address23;
use std::time::Instant;

fn main() {
    let codec = GolayCodec::new();
    let map = LetterMap::default_map();
    let words: Vec<String> = std::fs::read_to_string("crates/fuzzyfind/tests/data/words_10k.txt")
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect();
    let queries: Vec<String> = std::fs::read_to_string("/tmp/queries.txt")
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect();
    let store = PostingStore::build(&codec, &map, words.clone());

    let sigs: Vec<_> = queries.iter().map(|q| signature(q, &map).bits).collect();

    // 1: signature alone
    let t = Instant::now();
    let mut acc = 0u32;
    for q in &queries {
        acc ^= signature(q, &map).bits.bits();
    }
    println!("signature: {:?}/query (acc {acc})", t.elapsed() / queries.len() as u32);

    // 2: build_entry alone
    let t = Instant::now();
    let mut acc = 0usize;
    for &s in &sigs {
        acc += build_entry(&codec, s).address_count();
    }
    println!("build_entry: {:?}/query (acc {acc})", t.elapsed() / sigs.len() as u32);

    // case mix of query signatures
    let mut kinds = [0u32; 3];
    for &s in &sigs {
        match build_entry(&codec, s).kind() {
            fuzzyfind::EntryKind::SixLabels => kinds[0] += 1,
            fuzzyfind::EntryKind::Recovered { .. } => kinds[1] += 1,
            fuzzyfind::EntryKind::Single => kinds[2] += 1,
        }
    }
    println!("query kinds six/recovered/single: {kinds:?}");

    // 3: posting fetch + candidate collection
    let t = Instant::now();
    let mut count = 0usize;
    for &s in &sigs {
        let entry = build_entry(&codec, s);
        let mut ids: Vec<u32> = entry
            .addresses()
            .flat_map(|a| store.ids_at(Address23::new(a.bits()).unwrap()))
            .collect();
        ids.sort_unstable();
        ids.dedup();
        count += ids.len();
    }
    println!(
        "entry+fetch+dedup: {:?}/query, avg candidates {:.1}",
        t.elapsed() / sigs.len() as u32,
        count as f64 / sigs.len() as f64
    );
}
