//! Checks a builtin against every class it claims and prints failing axioms
//! with their witnesses.
//!
//!     cargo run --example check_builtin -- ex4.12

use plw::checkers::check_claim;
use plw::families::builtin;

fn main() {
    let id = std::env::args().nth(1).unwrap_or_else(|| "ex2.11".to_string());
    let b = builtin(&id).expect("known builtin");
    for claim in &b.claims {
        let r = check_claim(&b, claim).expect("claim operands resolve");
        println!("{} as {}: {}", b.name, claim.class, if r.passed() { "pass" } else { "fail" });
        for e in r.entries.iter().filter(|e| !e.passed()) {
            for w in &e.witnesses {
                let labels: Vec<&str> = w.elements.iter().map(|&x| b.lattice.label(x)).collect();
                println!("  {} fails at ({})", e.axiom, labels.join(", "));
            }
        }
    }
}
