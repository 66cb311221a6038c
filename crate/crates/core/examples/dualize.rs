//! Dualizes a zL-PRL into a candidate partial co-residuated lattice and
//! checks the result.

use plw::checkers::check_claim;
use plw::derive::dualize_to_pcrl;
use plw::families::builtin;

fn main() {
    for n in 2..=4 {
        let b = builtin(&format!("zlprl:{n}")).unwrap();
        let d = dualize_to_pcrl(&b).unwrap();
        let r = check_claim(&d, &d.claims[0]).unwrap();
        println!("{}: {:?}", d.name, r.failed_axioms());
    }
}
