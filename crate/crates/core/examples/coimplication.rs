//! Co-implications of the partial t-conorms.

use plw::derive::{derive_prci, DeriveOptions};
use plw::families::builtin;
use plw::report::{to_json, DerivationDoc};

fn main() {
    for id in ["ex5.10", "ex5.11"] {
        let b = builtin(id).unwrap();
        let out = derive_prci(&b.lattice, b.op("oplus").unwrap(), DeriveOptions::default()).unwrap();
        print!("{}", to_json(&DerivationDoc::new(id, "oplus", "co-implication", &b.lattice, &out)));
    }
}
