//! Rational-grid restrictions of the unit-interval examples, checked at a
//! few denominators.

use plw::checkers::check_claim;
use plw::families::builtin;

fn main() {
    for d in [2, 4, 8] {
        for ex in ["ex2.6", "ex2.7", "ex2.8", "ex2.9", "ex5.5", "ex5.6", "ex5.7", "ex5.8", "ex6.5", "ex6.6"] {
            let b = builtin(&format!("grid:{ex}:{d}")).unwrap();
            let r = check_claim(&b, &b.claims[0]).unwrap();
            println!("{:<16} {}: {:?}", b.name, b.claims[0].class, r.failed_axioms());
        }
    }
    let b = builtin("grid:ex6.6:10").unwrap();
    let l = &b.lattice;
    let v = b.op("to").unwrap().apply(3, 1).unwrap();
    println!("{} -> {} = {}", l.label(3), l.label(1), l.label(v));
}
