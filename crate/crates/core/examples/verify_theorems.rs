//! Runs the theorem checks over the builtin registry and prints anything
//! that is not verified.

use plw::families::registry;
use plw::verify::{verify_theorems, Scope, Status, THEOREM_IDS};

fn main() {
    let verdicts = verify_theorems(&Scope::Bundles(registry()), THEOREM_IDS).unwrap();
    let mut verified = 0;
    for v in &verdicts {
        match v.status {
            Status::Verified => verified += 1,
            Status::NotApplicable => {}
            Status::Counterexample => {
                let w = &v.witnesses[0];
                println!("{} on {}: clause {} at {:?}", v.theorem, v.scope, w.clause, w.elements);
            }
        }
        for o in &v.observations {
            println!("{} on {}: observation {} at {:?}", v.theorem, v.scope, o.clause, o.elements);
        }
    }
    println!("{} verdicts, {verified} verified", verdicts.len());
}
