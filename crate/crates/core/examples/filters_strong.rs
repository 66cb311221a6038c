//! Filters and strong filters of the weak partial residuated lattices.

use plw::filters::{enumerate_proper_filters, mp_closed, strong_verdicts, Pair};
use plw::families::builtin;

fn main() {
    for id in ["ex4.20", "ex4.21", "ex4.22", "ex4.23"] {
        let b = builtin(id).unwrap();
        let p = Pair::from_bundle_unchecked(&b).unwrap();
        let l = &b.lattice;
        let show = |xs: &[usize]| xs.iter().map(|&x| l.label(x)).collect::<Vec<_>>().join(",");
        println!("{id}");
        for f in enumerate_proper_filters(p) {
            println!("  filter {{{}}} mp={}", show(&f.members), mp_closed(p, &f.members).passed());
        }
        for v in strong_verdicts(p) {
            if v.strong {
                println!("  strong {{{}}}", show(&v.filter.members));
            } else {
                println!("  not strong {{{}}}: {:?}", show(&v.filter.members), v.failed_axioms());
            }
        }
    }
}
