//! Residuated implication of a partial t-norm, with the cells where the
//! supremum is not attained.

use plw::derive::{derive_pri, DeriveOptions};
use plw::families::builtin;
use plw::report::table_rows;

fn main() {
    let b = builtin("ex3.4").unwrap();
    // The ex3.4 t-norm is not monotone on its lattice, so skip the input check.
    let out = derive_pri(&b.lattice, b.op("odot").unwrap(), DeriveOptions::unchecked()).unwrap();
    for (x, row) in table_rows(&b.lattice, &out.op).iter().enumerate() {
        println!("{} | {}", b.lattice.label(x), row.join(" "));
    }
    for c in &out.diagnostics {
        println!("({}, {}): {}", b.lattice.label(c.x), b.lattice.label(c.y), c.note.as_str());
    }
}
