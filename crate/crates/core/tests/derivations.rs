use plw::checkers::{check_partial_fuzzy_implication, check_partial_tnorm, check_prl, passes};
use plw::derive::*;
use plw::families::builtin;
use plw::grid::{Grid, Q};
use plw::lattice::Elem;
use plw::{ClassTag, Lattice, PartialOp, UnaryOp};

fn least_upper_bound(l: &Lattice, s: &[Elem]) -> Option<Elem> {
    let ubs: Vec<Elem> = l.elements().filter(|&u| s.iter().all(|&x| l.leq(x, u))).collect();
    ubs.iter().copied().find(|&u| ubs.iter().all(|&w| l.leq(u, w)))
}

fn greatest_lower_bound(l: &Lattice, s: &[Elem]) -> Option<Elem> {
    let lbs: Vec<Elem> = l.elements().filter(|&u| s.iter().all(|&x| l.leq(u, x))).collect();
    lbs.iter().copied().find(|&u| lbs.iter().all(|&w| l.leq(w, u)))
}

#[test]
fn table3_gives_table4() {
    let b = builtin("ex3.4").unwrap();
    let out = derive_pri(&b.lattice, b.op("odot").unwrap(), DeriveOptions::unchecked()).unwrap();
    assert_eq!(&out.op, b.op("to").unwrap());
    assert_eq!(out.op.apply(1, 2), Some(4));
    assert!(out.notes_at(1, 2).contains(&Diagnostic::SupNotAttained));
    // the ex3.4 t-norm fails monotonicity, so the checked path refuses it
    assert_eq!(
        derive_pri(&b.lattice, b.op("odot").unwrap(), DeriveOptions::default()),
        Err(DeriveError::NotAPartialTnorm)
    );
}

#[test]
fn table1_implication_by_brute_force() {
    let b = builtin("ex2.11").unwrap();
    let (l, t) = (&b.lattice, b.op("odot").unwrap());
    let out = derive_pri(l, t, DeriveOptions::default()).unwrap();
    for a in l.elements() {
        for c in l.elements() {
            let s: Vec<Elem> = l.elements().filter(|&x| matches!(t.apply(a, x), Some(v) if l.leq(v, c))).collect();
            let want = if s.is_empty() { None } else { least_upper_bound(l, &s) };
            assert_eq!(out.op.apply(a, c), want, "cell ({a}, {c})");
        }
    }
}

#[test]
fn coimplications_by_brute_force() {
    for id in ["ex5.10", "ex5.11"] {
        let b = builtin(id).unwrap();
        let (l, t) = (&b.lattice, b.op("oplus").unwrap());
        let out = derive_prci(l, t, DeriveOptions::default()).unwrap();
        for a in l.elements() {
            for c in l.elements() {
                let s: Vec<Elem> = l.elements().filter(|&x| matches!(t.apply(a, x), Some(v) if l.leq(c, v))).collect();
                let want = if s.is_empty() { None } else { greatest_lower_bound(l, &s) };
                assert_eq!(out.op.apply(a, c), want, "{id} cell ({a}, {c})");
            }
        }
    }
}

#[test]
fn lea_constructions_on_three_chain() {
    let b = builtin("lea:chain3").unwrap();
    let e = Lea::from_bundle(&b).unwrap();
    let t = lea_tnorm(e);
    assert_eq!(t.apply(1, 1), Some(0));
    assert_eq!(t.apply(1, 2), Some(1));
    let prl = lea_prl(e, "p");
    assert_eq!(prl.op("to").unwrap().apply(1, 1), Some(2));
    assert_eq!(prl.op("to").unwrap().apply(1, 2), None);
    assert_eq!(sasaki_arrow(e).apply(1, 0), Some(1));
    assert_eq!(is_implication(e).apply(1, 0), Some(1));
}

#[test]
fn lea_constructions_on_every_builtin_lea() {
    for id in ["lea:boolean2", "lea:chain3", "lea:chain4", "lea:diamond", "lea:mo2", "lea:chain3x2"] {
        let b = builtin(id).unwrap();
        let e = Lea::from_bundle(&b).unwrap();
        let l = &b.lattice;
        let t = lea_tnorm(e);
        for x in l.elements() {
            for y in l.elements() {
                let c = |z| b.unary("comp").unwrap().apply(z);
                let want = if l.leq(c(x), y) { b.op("plus").unwrap().apply(c(x), c(y)).map(c) } else { None };
                assert_eq!(t.apply(x, y), want);
                if !l.leq(y, x) {
                    assert_eq!(lea_arrow(e).apply(x, y), None);
                }
                if l.leq(x, y) {
                    assert_eq!(is_implication(e).apply(x, y), Some(l.top()));
                }
            }
        }
        assert!(check_partial_tnorm(l, &t).passed(), "{id}");
        let p = lea_prl(e, id);
        assert!(check_prl(l, p.op("otimes").unwrap(), p.op("to").unwrap()).passed(), "{id}");
        let r = check_partial_fuzzy_implication(l, &sasaki_arrow(e)).unwrap();
        if id == "lea:mo2" {
            // a <= 1, yet a -> b = a' and 1 -> b = b are incomparable
            assert_eq!(r.failed_axioms(), ["PI1"]);
            let w = &r.entry("PI1").unwrap().witnesses[0].elements;
            assert_eq!(w.iter().map(|&x| l.label(x)).collect::<Vec<_>>(), ["a", "1", "b"]);
        } else {
            assert!(r.passed(), "{id}");
        }
    }
}

#[test]
fn boolean_sasaki_is_material_implication() {
    let b = builtin("lea:boolean2").unwrap();
    let e = Lea::from_bundle(&b).unwrap();
    assert_eq!(sasaki_arrow(e), PartialOp::parse_compact("1 1 / 0 1").unwrap());
    let t = lea_tnorm(e);
    assert_eq!(t, PartialOp::parse_compact("- 0 / 0 1").unwrap());
}

#[test]
fn is_implication_on_diamond_top() {
    let b = builtin("lea:diamond").unwrap();
    let e = Lea::from_bundle(&b).unwrap();
    // [0, 1] is not a chain, and a is incomparable to the top only through b
    assert!(!b.lattice.interval_is_chain(3));
    assert_eq!(is_implication(e).apply(3, 1), Some(0));
}

#[test]
fn reciprocal_and_min_combine() {
    let l = Lattice::chain(2);
    let g = PartialOp::parse_compact("1 1 / 0 1").unwrap();
    let not = UnaryOp::new(vec![1, 0]).unwrap();
    assert_eq!(pfi_reciprocal(&l, &g, &not).unwrap(), g);
    let m = pfi_min_combine(&l, &g, &not).unwrap();
    assert_eq!(m.apply(1, 0), Some(0));
    assert_eq!(m.apply(0, 0), Some(1));
    assert!(check_partial_fuzzy_implication(&l, &m).unwrap().passed());

    let total = plw::families::goedel(4);
    let rec = pfi_reciprocal(&total.lattice, total.op("to").unwrap(), &UnaryOp::from_fn(4, |x| 3 - x)).unwrap();
    assert!(rec.is_total());
}

#[test]
fn reciprocal_of_table4() {
    let b = builtin("ex3.4").unwrap();
    let l = &b.lattice;
    let t4 = b.op("to").unwrap();
    let involutions: Vec<UnaryOp> = all_maps(l.len())
        .into_iter()
        .map(|v| UnaryOp::new(v).unwrap())
        .filter(|n| passes(ClassTag::Negation, l, plw::bundle::Operands::unary(n)))
        .filter(|n| l.elements().all(|x| n.apply(n.apply(x)) == x))
        .collect();
    // 0 < 3 < 1, 2 < 4 is not self-dual, so there is nothing to apply
    assert!(involutions.is_empty());
    let flip = UnaryOp::from_fn(5, |x| 4 - x);
    assert_eq!(pfi_reciprocal(l, t4, &flip), Err(DeriveError::InputNotNegation));
}

fn all_maps(n: usize) -> Vec<Vec<Elem>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v| (0..n).map(move |k| [v.clone(), vec![k]].concat())).collect();
    }
    out
}

#[test]
fn vertical_splice() {
    let g = Grid::new(4).unwrap();
    let one_idx = g.len() - 1;
    let top = PartialOp::from_fn(g.len(), |_, _| Some(one_idx));
    let goedel = PartialOp::from_fn(g.len(), |x, y| Some(if x <= y { one_idx } else { y }));
    let a = Q::new(1, 2);
    let s = pfi_vertical_splice(g, &goedel, &top, a).unwrap();
    let at = |u: Q, v: Q| g.value(s.apply(g.index_of(u).unwrap(), g.index_of(v).unwrap()).unwrap());
    assert_eq!(at(Q::from_integer(0), Q::from_integer(0)), Q::from_integer(1));
    // u = 1, v = 1/4: a * PI1(1, 1/2) = 1/2 * 1/2
    assert_eq!(at(Q::from_integer(1), Q::new(1, 4)), Q::new(1, 4));
    assert_eq!(at(Q::from_integer(1), Q::new(3, 4)), Q::from_integer(1));
    assert_eq!(pfi_vertical_splice(g, &goedel, &top, Q::from_integer(1)), Err(DeriveError::BadSplicePoint));
}

#[test]
fn dualization_needs_a_zl_prl() {
    assert_eq!(dualize_to_pcrl(&builtin("goedel:3").unwrap()).err(), Some(DeriveError::NotZlPrl));
    let d = dualize_to_pcrl(&builtin("zlprl:3").unwrap()).unwrap();
    assert_eq!(d.lattice.top(), 0);
    assert!(d.claim_of(ClassTag::Pcrl).is_some());
}
