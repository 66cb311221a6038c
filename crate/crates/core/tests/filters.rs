use plw::checkers::check_prl;
use plw::families::builtin;
use plw::filters::*;
use plw::lattice::Elem;
use plw::StructureBundle;

fn members(fs: &[FilterSet]) -> Vec<Vec<Elem>> {
    fs.iter().map(|f| f.members.clone()).collect()
}

fn pair(b: &StructureBundle) -> Pair<'_> {
    Pair::from_bundle_unchecked(b).unwrap()
}

/// F1-F3 read straight off the tables: contains top, up-closed, closed under
/// defined products.
fn filter_oracle(p: Pair<'_>, set: &[Elem]) -> bool {
    let l = p.lattice;
    let inside = |x: Elem| set.contains(&x);
    set.contains(&l.top())
        && l.elements().all(|x| l.elements().all(|y| !(inside(x) && l.leq(x, y)) || inside(y)))
        && set.iter().all(|&x| set.iter().all(|&y| p.ot(x, y).is_none_or(inside)))
}

#[test]
fn single_filters() {
    let b = builtin("ex4.20").unwrap();
    assert!(is_filter(pair(&b), &[2, 3]));
    let all: Vec<Elem> = (0..4).collect();
    assert!(is_filter(pair(&b), &all));
    assert!(!FilterSet::new(all, 4).proper);
    let b = builtin("ex4.21").unwrap();
    assert!(is_filter(pair(&b), &[1, 2, 4]));
}

#[test]
fn filter_lists() {
    let b = builtin("ex4.20").unwrap();
    assert_eq!(members(&enumerate_proper_filters(pair(&b))), vec![vec![3], vec![1, 3], vec![2, 3]]);
    let b = builtin("ex4.21").unwrap();
    assert_eq!(
        members(&enumerate_proper_filters(pair(&b))),
        vec![vec![4], vec![2, 4], vec![3, 4], vec![1, 2, 4]]
    );
}

#[test]
fn filter_enumeration_matches_subset_scan() {
    for id in ["ex4.20", "ex4.21", "ex4.22", "ex4.23", "ex6.10", "goedel:4"] {
        let b = builtin(id).unwrap();
        let p = pair(&b);
        let n = p.n();
        let mut want: Vec<Vec<Elem>> = (0u32..1 << n)
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|s| s.len() < n && filter_oracle(p, s))
            .collect();
        want.sort();
        let mut got = members(&enumerate_proper_filters(p));
        got.sort();
        assert_eq!(got, want, "{id}");
    }
}

#[test]
fn ex4_22_has_an_eighth_filter() {
    let b = builtin("ex4.22").unwrap();
    let got = members(&enumerate_proper_filters(pair(&b)));
    assert_eq!(got.len(), 8);
    assert!(got.contains(&vec![1, 2, 4, 5]));
    // every listed one is still found
    for f in [vec![5], vec![1, 5], vec![2, 5], vec![4, 5], vec![1, 2, 5], vec![1, 4, 5], vec![2, 4, 5]] {
        assert!(got.contains(&f), "{f:?}");
    }
    let strong = members(&enumerate_strong_filters(pair(&b)));
    assert_eq!(strong, got);
}

#[test]
fn strong_filters() {
    let b = builtin("ex4.21").unwrap();
    assert!(is_strong_filter(pair(&b), &[3, 4]).unwrap().strong);
    let v = is_strong_filter(pair(&b), &[2, 4]).unwrap();
    assert!(!v.strong);
    let failed = v.failed_axioms();
    assert!(failed.contains(&"s2") && failed.contains(&"s4"), "{failed:?}");

    let b = builtin("ex6.10").unwrap();
    let failed = is_strong_filter(pair(&b), &[3]).unwrap().failed_axioms();
    assert!(failed.contains(&"s2") && failed.contains(&"s4"), "{failed:?}");

    assert_eq!(members(&enumerate_strong_filters(pair(&builtin("ex4.23").unwrap()))), vec![vec![5], vec![2, 5]]);
    assert!(enumerate_strong_filters(pair(&builtin("ex4.20").unwrap())).is_empty());
    assert_eq!(is_strong_filter(pair(&b), &[0]).err(), Some(FilterError::NotAFilter));
}

#[test]
fn modus_ponens() {
    let b = builtin("ex4.20").unwrap();
    let p = pair(&b);
    for f in enumerate_filters(p) {
        assert!(mp_closed(p, &f.members).passed(), "{:?}", f.members);
    }
    for id in ["ex4.20", "ex4.22", "ex4.23", "goedel:3", "lukasiewicz:4"] {
        let b = builtin(id).unwrap();
        let top = b.lattice.top();
        assert!(mp_closed(pair(&b), &[top]).passed(), "{id}");
    }
}

#[test]
fn modus_ponens_on_ex6_6_grid() {
    let b = builtin("grid:ex6.6:10").unwrap();
    let p = pair(&b);
    let g = plw::grid::Grid::new(10).unwrap();
    let set: Vec<Elem> = (3..=10).collect();
    let e = mp_closed(p, &set);
    // direct scan
    let want = (0..11).all(|x| (0..11).all(|y| !(set.contains(&x) && p.to(x, y).is_some_and(|v| set.contains(&v))) || set.contains(&y)));
    assert_eq!(e.passed(), want);
    assert_eq!(g.value(3), plw::grid::Q::new(3, 10));
}

#[test]
fn currying() {
    let b = builtin("ex4.22").unwrap();
    let p = pair(&b);
    for f in enumerate_strong_filters(p) {
        assert!(mp_implies_currying(p, &f.members).passed(), "{:?}", f.members);
    }
    let b = builtin("ex4.23").unwrap();
    assert!(mp_implies_currying(pair(&b), &[2, 5]).passed());
    let all: Vec<Elem> = (0..6).collect();
    assert!(mp_implies_currying(pair(&b), &all).passed());
}

#[test]
fn sim_partitions() {
    let b = builtin("ex6.10").unwrap();
    let p = pair(&b);
    for (x, y) in [(0, 1), (1, 0), (2, 3), (3, 2)] {
        assert!([2, 3].contains(&p.to(x, y).unwrap()));
    }
    let part = sim_relation(p, &[2, 3]).unwrap();
    assert_eq!(part.blocks, vec![vec![0, 1], vec![2, 3]]);
    assert!(is_congruence(p, &part));

    for id in ["ex4.20", "ex4.22"] {
        let b = builtin(id).unwrap();
        let p = pair(&b);
        let top = [b.lattice.top()];
        let part = sim_relation(p, &top).unwrap();
        for x in b.lattice.elements() {
            for y in b.lattice.elements() {
                assert_eq!(part.related(x, y), sim_holds(p, &top, x, y), "{id} ({x}, {y})");
            }
        }
    }
}

#[test]
fn trivial_partitions_are_congruences() {
    for id in ["ex4.20", "ex6.10", "goedel:4"] {
        let b = builtin(id).unwrap();
        let n = b.lattice.len();
        assert!(is_congruence(pair(&b), &Partition::identity(n)), "{id}");
        assert!(is_congruence(pair(&b), &Partition::from_blocks(vec![(0..n).collect()])), "{id}");
    }
}

#[test]
fn quotient_of_ex6_10_is_ex6_22() {
    let b = builtin("ex6.10").unwrap();
    let q = build_quotient(pair(&b), &[2, 3]).unwrap();
    let want = builtin("ex6.22").unwrap();
    assert_eq!(q.bundle.lattice.labels(), want.lattice.labels());
    assert_eq!(q.bundle.op("otimes").unwrap(), want.op("otimes").unwrap());
    assert_eq!(q.bundle.op("to").unwrap(), want.op("to").unwrap());
    let o = q.bundle.op("otimes").unwrap();
    assert_eq!((o.apply(0, 0), o.apply(0, 1), o.apply(1, 1)), (None, Some(0), Some(1)));
    let l = &q.bundle.lattice;
    assert!(check_prl(l, o, q.bundle.op("to").unwrap()).passed());
}

#[test]
fn quotient_by_identity_is_isomorphic() {
    let b = builtin("goedel:4").unwrap();
    let q = build_quotient(pair(&b), &[3]).unwrap();
    assert_eq!(q.partition, Partition::identity(4));
    assert_eq!(q.bundle.lattice.order_matrix(), b.lattice.order_matrix());
    assert_eq!(q.bundle.op("otimes").unwrap(), b.op("otimes").unwrap());
    assert_eq!(q.bundle.op("to").unwrap(), b.op("to").unwrap());
}

#[test]
fn given_quotients_are_prls() {
    for id in ["ex6.22", "ex6.23", "ex6.24"] {
        let b = builtin(id).unwrap();
        assert!(check_prl(&b.lattice, b.op("otimes").unwrap(), b.op("to").unwrap()).passed(), "{id}");
    }
    let b = builtin("ex4.23").unwrap();
    let q = build_quotient(pair(&b), &[2, 5]).unwrap();
    let want = builtin("ex6.24").unwrap();
    assert_eq!(q.bundle.op("otimes").unwrap(), want.op("otimes").unwrap());
    assert_eq!(q.bundle.op("to").unwrap(), want.op("to").unwrap());
}

#[test]
fn ex4_21_with_2_4_is_not_a_congruence() {
    let b = builtin("ex4.21").unwrap();
    let p = pair(&b);
    let part = sim_relation(p, &[2, 4]).unwrap();
    assert_eq!(part.blocks, vec![vec![0], vec![1], vec![2, 4], vec![3]]);
    assert!(!is_congruence(p, &part));
    assert!(matches!(build_quotient(p, &[2, 4]), Err(FilterError::NotACongruence)));
}
