//! Reads a structure file, checks its claims and writes it back out.
//!
//!     cargo run --example structure_file -- crates/core/ex2.11.plw

use plw::checkers::check_claim;
use plw::io::{parse_structures, serialize_structure};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/ex2.11.plw").to_string());
    let text = std::fs::read_to_string(&path).expect("readable file");
    let bundles = match parse_structures(&text) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("{path}: {e}");
            std::process::exit(2);
        }
    };
    for b in &bundles {
        for c in &b.claims {
            let ok = check_claim(b, c).map(|r| r.passed()).unwrap_or(false);
            println!("{} {}: {}", b.name, c.class, ok);
        }
        print!("{}", serialize_structure(b));
    }
}
