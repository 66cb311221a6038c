//! Recovers the lattice orders under which a set of tables satisfies its
//! claims.

use plw::families::{builtin, figure};
use plw::infer::infer_orders;

fn main() {
    let bundles: Vec<_> = ["ex4.11", "ex4.20"].iter().map(|id| builtin(id).unwrap()).collect();
    let found = infer_orders(&bundles).unwrap();
    let fig4 = figure("fig4").unwrap();
    for l in &found {
        let covers: Vec<String> = l.covers().iter().map(|&(a, b)| format!("{}<{}", l.label(a), l.label(b))).collect();
        let mark = if l.order_matrix() == fig4.order_matrix() { " (fig4)" } else { "" };
        println!("{}{mark}", covers.join(" "));
    }
    // ex6.10 fails directional associativity under every order
    println!("ex6.10: {:?}", infer_orders(&[builtin("ex6.10").unwrap()]).err());
}
