//! From a lattice effect algebra to a partial residuated lattice, plus the
//! Sasaki arrow.

use plw::checkers::{check_partial_fuzzy_implication, check_prl};
use plw::derive::{lea_prl, sasaki_arrow, Lea};
use plw::families::builtin;
use plw::io::serialize_structure;

fn main() {
    for id in ["lea:chain3", "lea:diamond", "lea:mo2"] {
        let b = builtin(id).unwrap();
        let e = Lea::from_bundle(&b).unwrap();
        let prl = lea_prl(e, &format!("{id}-prl"));
        let r = check_prl(&prl.lattice, prl.op("otimes").unwrap(), prl.op("to").unwrap());
        print!("{}", serialize_structure(&prl));
        println!("prl check: {}", if r.passed() { "pass" } else { "fail" });
        let s = check_partial_fuzzy_implication(&b.lattice, &sasaki_arrow(e)).unwrap();
        println!("sasaki arrow failing axioms: {:?}\n", s.failed_axioms());
    }
}
