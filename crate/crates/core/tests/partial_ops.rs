use plw::families::builtin;
use plw::grid::{Grid, Q};
use plw::partial::{
    is_associative_directional, is_commutative_partial, is_monotone_partial, is_total,
};
use plw::{Lattice, PartialOp};

fn op(id: &str, name: &str) -> (Lattice, PartialOp) {
    let b = builtin(id).unwrap();
    (b.lattice.clone(), b.op(name).unwrap().clone())
}

#[test]
fn apply_reads_cells_verbatim() {
    let (_, t1) = op("ex2.11", "odot");
    assert_eq!(t1.apply(1, 2), Some(0));
    assert_eq!(t1.apply(0, 1), None);
    let (_, t5) = op("ex4.11", "otimes");
    assert_eq!(t5.apply(3, 3), Some(3));
}

#[test]
fn commutativity() {
    let (_, t1) = op("ex2.11", "odot");
    assert!(is_commutative_partial(&t1, "c").passed());
    let min = PartialOp::from_fn(3, |x, y| Some(x.min(y)));
    assert!(is_commutative_partial(&min, "c").passed());

    let mut broken = t1.clone();
    broken.set(4, 0, None);
    let e = is_commutative_partial(&broken, "c");
    assert!(!e.passed());
    // exhaustive pair scan of the mutated table
    let bad: Vec<(usize, usize)> = (0..5)
        .flat_map(|x| (0..5).map(move |y| (x, y)))
        .filter(|&(x, y)| broken.apply(x, y).is_some() && broken.apply(x, y) != broken.apply(y, x))
        .collect();
    assert_eq!(bad, vec![(0, 4)]);
    assert_eq!(e.witnesses[0].elements, vec![0, 4]);
}

#[test]
fn associativity() {
    let (_, t2) = op("ex2.12", "odot");
    assert!(is_associative_directional(&t2, "a").passed());
    for n in 1..6 {
        let min = PartialOp::from_fn(n, |x, y| Some(x.min(y)));
        assert!(is_associative_directional(&min, "a").passed());
    }
    // ex3.4: compare against a direct scan of all 125 triples
    let (_, t3) = op("ex3.4", "odot");
    let mut fails = 0;
    for x in 0..5 {
        for y in 0..5 {
            for z in 0..5 {
                if let Some(yz) = t3.apply(y, z) {
                    if let Some(v) = t3.apply(x, yz) {
                        let left = t3.apply(x, y).and_then(|xy| t3.apply(xy, z));
                        if left != Some(v) {
                            fails += 1;
                        }
                    }
                }
            }
        }
    }
    assert_eq!(is_associative_directional(&t3, "a").passed(), fails == 0);
}

#[test]
fn monotonicity() {
    let (l1, t1) = op("ex2.11", "odot");
    assert!(is_monotone_partial(&l1, &t1, "m").passed());
    let l3 = Lattice::chain(3);
    let zero = PartialOp::from_fn(3, |_, _| Some(0));
    assert!(is_monotone_partial(&l3, &zero, "m").passed());
    let l2 = Lattice::chain(2);
    let bad = PartialOp::from_fn(2, |x, y| Some(if x == 0 && y == 0 { 1 } else { 0 }));
    assert!(!is_monotone_partial(&l2, &bad, "m").passed());
}

#[test]
fn totality() {
    let (_, t1) = op("ex2.11", "odot");
    assert!(!is_total(&t1));
    assert!(is_total(&PartialOp::from_fn(4, |x, y| Some(x.min(y)))));
    let (_, t4) = op("ex3.4", "to");
    assert!(!is_total(&t4));
    assert!((1..4).all(|x| t4.apply(x, 0).is_none()));
}

#[test]
fn restriction() {
    let g = Grid::new(2).unwrap();
    let half = g.index_of(Q::new(1, 2)).unwrap();
    let b = builtin("grid:ex2.8:2").unwrap();
    assert_eq!(b.op("odot").unwrap().apply(half, half), Some(half));

    let (_, t1) = op("ex2.11", "odot");
    let all: Vec<usize> = (0..5).collect();
    let r = t1.restrict(&all);
    assert_eq!(r.op, t1);
    assert!(r.dropped.is_empty());

    let g4 = Grid::new(4).unwrap();
    let b = builtin("grid:ex2.6:4").unwrap();
    let (q, h) = (g4.index_of(Q::new(1, 4)).unwrap(), g4.index_of(Q::new(1, 2)).unwrap());
    assert_eq!(b.op("odot").unwrap().apply(q, h), None);
}

#[test]
fn restriction_reports_escaping_values() {
    let (_, t1) = op("ex2.11", "odot");
    // {1, 2, 4}: 1*2 = 0 leaves the subset
    let r = t1.restrict(&[1, 2, 4]);
    assert!(r.dropped.contains(&(1, 2)));
    assert_eq!(r.op.apply(0, 1), None);
    assert_eq!(r.op.apply(2, 0), Some(0));
}
