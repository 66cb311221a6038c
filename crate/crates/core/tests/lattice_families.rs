use plw::families::{builtin, figure, registry, FamilyError};
use plw::grid::{Grid, GridSpec, Q};
use plw::lattice::LatticeError;
use plw::{ClassTag, Lattice};

fn diamond() -> Lattice {
    Lattice::build(&["0", "1", "2", "3"], &[("0", "1"), ("0", "2"), ("1", "3"), ("2", "3")]).unwrap()
}

#[test]
fn building_lattices() {
    let c = Lattice::build(&["0", "1"], &[("0", "1")]).unwrap();
    assert_eq!((c.bottom(), c.top()), (0, 1));
    let d = diamond();
    assert_eq!((d.meet(1, 2), d.join(1, 2)), (0, 3));
    assert!(matches!(
        Lattice::build(&["0", "1", "2"], &[("0", "1"), ("0", "2")]),
        Err(LatticeError::MissingBound(_))
    ));
}

#[test]
fn chain_intervals() {
    let d = diamond();
    assert!(!d.interval_is_chain(3));
    assert!(d.interval_is_chain(1));
    for n in 1..6 {
        let c = Lattice::chain(n);
        assert!(c.elements().all(|x| c.interval_is_chain(x)));
    }
    for fig in ["fig1", "fig2", "fig3", "fig5", "fig6"] {
        let l = figure(fig).unwrap();
        let down = l.down_set(l.top());
        let scan = down.iter().all(|&a| down.iter().all(|&b| l.leq(a, b) || l.leq(b, a)));
        assert_eq!(l.interval_is_chain(l.top()), scan, "{fig}");
    }
}

#[test]
fn atoms() {
    assert_eq!(Lattice::chain(2).atoms_below(1), vec![1]);
    assert_eq!(diamond().atoms_below(3), vec![1, 2]);
    let c3 = Lattice::labelled_chain(&["0", "a", "1"]);
    assert_eq!(c3.atoms_below(2), vec![1]);
}

#[test]
fn duals() {
    let c = Lattice::chain(2).dual();
    assert_eq!((c.bottom(), c.top()), (1, 0));
    let d = diamond();
    assert_eq!(d.dual().dual(), d);
    let f5 = figure("fig5").unwrap();
    let rev: Vec<(usize, usize)> = f5.covers().into_iter().map(|(a, b)| (b, a)).collect();
    let rebuilt = Lattice::from_pairs(f5.labels().to_vec(), &rev).unwrap();
    assert_eq!(rebuilt.order_matrix(), f5.dual().order_matrix());
}

#[test]
fn named_builtins() {
    let b = builtin("ex4.22").unwrap();
    assert_eq!(b.lattice.len(), 6);
    assert!(b.claim_of(ClassTag::Wprl).is_some());

    let b = builtin("grid:ex2.8:4").unwrap();
    let g = Grid::new(4).unwrap();
    let o = b.op("odot").unwrap();
    for x in 0..5 {
        for y in 0..5 {
            let want = (g.value(x) + g.value(y) <= Q::from_integer(1) || x == 4 || y == 4).then_some(x.min(y));
            assert_eq!(o.apply(x, y), want);
        }
    }
    assert_eq!(b.lattice.label(1), "1/4");

    let c = builtin("chain:2").unwrap();
    assert!(c.op("odot").unwrap().is_total());
    assert!(c.claim_of(ClassTag::Ptnorm).is_some());

    assert!(matches!(builtin("ex9.9"), Err(FamilyError::UnknownBuiltin(_))));
    assert!(builtin("grid:ex2.10:4").is_err());
    assert!(builtin("chain:0").is_err());
}

#[test]
fn grid_pairs() {
    let b = builtin("grid:ex6.5:2").unwrap();
    assert_eq!(b.op("to").unwrap().apply(1, 0), Some(0));

    let b = builtin("grid:ex6.6:10").unwrap();
    assert_eq!(b.op("to").unwrap().apply(3, 1), Some(7));

    let a = builtin("grid:ex6.7:10:1").unwrap();
    assert_eq!(a.op("otimes").unwrap(), b.op("otimes").unwrap());
    assert_eq!(a.op("to").unwrap(), b.op("to").unwrap());
}

#[test]
fn grid_spec_validation() {
    assert!(GridSpec::new(0).is_err());
    assert!(GridSpec::new(4).unwrap().with_alpha(Q::new(3, 2)).is_err());
    let g = Grid::new(8).unwrap();
    assert_eq!(g.index_of(Q::new(3, 8)), Some(3));
    assert_eq!(g.index_of(Q::new(1, 3)), None);
}

#[test]
fn registry_is_well_formed() {
    for b in registry() {
        for claim in &b.claims {
            assert!(b.operands(claim).is_ok(), "{} {}", b.name, claim.class);
        }
    }
}
