//! Random access into an existing table file: one positioned read per
//! record, no loading phase.
//!
//! ```bash
//! cargo run --release -p fuzzyfind --example table_lookup -- /tmp/ffd.table [index...]
//! ```

use fuzzyfind::ffd::build_entry;
use fuzzyfind::golay::{GolayCodec, Vector23};
use fuzzyfind::table::FfdTable;

fn main() {
    let mut args = std::env::args().skip(1);
    let path = args.next().expect("usage: table_lookup <path> [index...]");
    let indices: Vec<u32> = args.map(|a| a.parse().expect("index")).collect();
    let indices = if indices.is_empty() { vec![0, 1000, 480, 8_388_607] } else { indices };

    let codec = GolayCodec::new();
    let table = FfdTable::open(&path).expect("open failed");
    table.check_generator(&codec).expect("generator mismatch");
    println!(
        "table {} (generator {:#05x})",
        path,
        table.generator()
    );

    for bits in indices {
        let v = Vector23::new(bits).expect("index must fit in 23 bits");
        let record = table.record_at(v).expect("read failed");
        let addresses: Vec<u32> = record.addresses().map(|a| a.bits()).collect();
        println!("record {v}: {} address(es) {addresses:?}", record.address_count());
        assert_eq!(record, build_entry(&codec, v).record());
    }
    println!("all shown records equal their on-the-fly recomputation");
}
