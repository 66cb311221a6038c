//! Counts partial t-norms and strong PRLs on small chains. Set `PLW_JOBS`
//! to bound the worker pool.

use plw::enumerate::{enumerate_class, naive_count, EnumerationTask};
use plw::{ClassTag, Lattice};

fn main() {
    for n in 1..=4 {
        let e = enumerate_class(&EnumerationTask::chain(n, ClassTag::Ptnorm)).unwrap();
        let sym = enumerate_class(&EnumerationTask::chain(n, ClassTag::Ptnorm).with_symmetry(true)).unwrap();
        let naive = naive_count(&Lattice::chain(n), ClassTag::Ptnorm).unwrap();
        println!("ptnorm n={n}: {} (naive {naive}, {} orbits listed)", e.count, sym.structures.len());
    }
    for n in 2..=4 {
        let e = enumerate_class(&EnumerationTask::chain(n, ClassTag::Sprl)).unwrap();
        let total = e.structures.iter().all(|b| b.ops().iter().all(|(_, op)| op.is_total()));
        println!("sprl n={n}: {} structures, all total: {total}", e.count);
    }
}
