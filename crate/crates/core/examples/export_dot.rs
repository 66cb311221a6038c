//! Prints the Hasse diagrams of the reconstructed figures in DOT.

use plw::families::figure;
use plw::io::export_dot;

fn main() {
    for k in 1..=9 {
        let id = format!("fig{k}");
        print!("{}", export_dot(&id, &figure(&id).unwrap()));
    }
}
