//! End-to-end fuzzy word search: index a word list, run typo'd queries,
//! and compare against the brute-force scan.
//!
//! ```bash
//! cargo run --release -p fuzzyfind --example word_search [words.txt]
//! ```

use fuzzyfind::golay::GolayCodec;
use fuzzyfind::lexicon::{fuzzy_lookup, scan_lookup, signature, LetterMap, PostingStore};

const BUILTIN: &str = "search engine index fuzzy lookup golay code hamming distance \
    dictionary address label sphere segment signature letter presence vector \
    posting store query candidate filter rank";

fn main() {
    let codec = GolayCodec::new();
    let map = LetterMap::default_map();

    let words: Vec<String> = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)
            .expect("read word list")
            .lines()
            .map(str::to_string)
            .collect(),
        None => BUILTIN.split_whitespace().map(str::to_string).collect(),
    };
    let store = PostingStore::build(&codec, &map, words);
    println!(
        "indexed {} words into {} posting pairs",
        store.word_count(),
        store.posting_count()
    );

    for query in ["fuzyy", "hamnig", "adress", "sphere", "labell", "queyr"] {
        let sig = signature(query, &map);
        let hits = fuzzy_lookup(&codec, &map, &store, query, 2, 5).expect("lookup");
        let scan = scan_lookup(&map, &store, query, 2, 5);
        println!(
            "query '{query}' (signature {:07x}): {} hit(s)",
            sig.bits.bits(),
            hits.len()
        );
        for hit in &hits {
            println!("  {} (distance {})", hit.word, hit.distance);
        }
        if hits != scan {
            println!("  note: scan found {} hit(s); the difference is a pair", scan.len());
            println!("  whose signatures share no dictionary address");
        }
    }
}
