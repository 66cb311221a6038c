//! The quotient of a wPRL by the relation of a filter.

use plw::checkers::check_prl;
use plw::families::builtin;
use plw::filters::{build_quotient, sim_relation, Pair};
use plw::io::serialize_structure;

fn main() {
    let b = builtin("ex6.10").unwrap();
    let p = Pair::from_bundle_unchecked(&b).unwrap();
    let part = sim_relation(p, &[2, 3]).unwrap();
    println!("blocks: {:?}", part.blocks);
    let q = build_quotient(p, &[2, 3]).unwrap();
    print!("{}", serialize_structure(&q.bundle));
    let ok = check_prl(&q.bundle.lattice, q.bundle.op("otimes").unwrap(), q.bundle.op("to").unwrap()).passed();
    println!("quotient is a PRL: {ok}");

    // ex4.21 with {2,4}: the relation is an equivalence, not a congruence
    let b = builtin("ex4.21").unwrap();
    let p = Pair::from_bundle_unchecked(&b).unwrap();
    println!("ex4.21 / {{2,4}}: {:?}", build_quotient(p, &[2, 4]).err());
}
