use plw::checkers::*;
use plw::families::{builtin, figure, goedel, lukasiewicz};
use plw::infer::infer_orders;
use plw::{ClassTag, Lattice, PartialOp, StructureBundle, UnaryOp};

fn ops(id: &str, a: &str, b: &str) -> (Lattice, PartialOp, PartialOp) {
    let s = builtin(id).unwrap();
    (s.lattice.clone(), s.op(a).unwrap().clone(), s.op(b).unwrap().clone())
}

fn goedel_ops(n: usize) -> (Lattice, PartialOp, PartialOp) {
    let b = goedel(n);
    (b.lattice.clone(), b.op("otimes").unwrap().clone(), b.op("to").unwrap().clone())
}

#[test]
fn partial_tnorms_and_tconorms() {
    for id in ["ex2.11", "ex2.12"] {
        let b = builtin(id).unwrap();
        assert!(check_partial_tnorm(&b.lattice, b.op("odot").unwrap()).passed(), "{id}");
    }
    for id in ["ex5.10", "ex5.11"] {
        let b = builtin(id).unwrap();
        assert!(check_partial_tconorm(&b.lattice, b.op("oplus").unwrap()).passed(), "{id}");
    }
    let l = Lattice::chain(4);
    assert!(check_partial_tconorm(&l, &PartialOp::from_fn(4, |x, y| Some(x.max(y)))).passed());

    let b = builtin("ex2.11").unwrap();
    let mut t = b.op("odot").unwrap().clone();
    t.set(1, 4, Some(0));
    let r = check_partial_tnorm(&b.lattice, &t);
    assert!(r.failed_axioms().contains(&"TN1"));
    assert_eq!(r.entry("TN1").unwrap().witnesses[0].elements, vec![1]);
}

#[test]
fn effect_algebras() {
    let l = Lattice::chain(3);
    let plus = PartialOp::from_fn(3, |x, y| (x + y <= 2).then_some(x + y));
    let comp = UnaryOp::new(vec![2, 1, 0]).unwrap();
    let r = check_lattice_effect_algebra(&l, &plus, &comp);
    assert!(r.passed());
    assert_eq!(derived_order(&l, &plus).unwrap().order_matrix(), l.order_matrix());

    let l2 = Lattice::chain(2);
    let plus2 = PartialOp::from_fn(2, |x, y| (x + y <= 1).then_some(x + y));
    assert!(check_effect_algebra(&l2, &plus2, &UnaryOp::new(vec![1, 0]).unwrap()).passed());

    let mut no_aa = plus.clone();
    no_aa.set(1, 1, None);
    assert!(check_effect_algebra(&l, &no_aa, &comp).failed_axioms().contains(&"E3"));
}

#[test]
fn quasiresiduated() {
    let b = builtin("quasires:chain3").unwrap();
    let (o, a, c) = (b.op("odot").unwrap(), b.op("to").unwrap(), b.unary("comp").unwrap());
    assert!(check_quasiresiduated(&b.lattice, o, a, c).unwrap().passed());

    let l = Lattice::chain(2);
    let and = PartialOp::from_fn(2, |x, y| (1 - x <= y).then_some(x.min(y)));
    let imp = PartialOp::from_fn(2, |x, y| Some(if x <= y { 1 } else { y }));
    let not = UnaryOp::new(vec![1, 0]).unwrap();
    assert!(check_quasiresiduated(&l, &and, &imp, &not).unwrap().passed());
    let id = UnaryOp::new(vec![0, 1]).unwrap();
    let r = check_quasiresiduated(&l, &and, &imp, &id).unwrap();
    assert!(r.failed_axioms().contains(&"Q2-anti"));

    let mut partial = imp.clone();
    partial.set(1, 0, None);
    assert_eq!(check_quasiresiduated(&l, &and, &partial, &not), Err(CheckError::ArrowNotTotal));
}

#[test]
fn negations() {
    let l2 = Lattice::chain(2);
    assert!(check_negation(&l2, &UnaryOp::new(vec![1, 0]).unwrap()).passed());
    assert!(check_negation(&l2, &UnaryOp::new(vec![0, 1]).unwrap()).failed_axioms().contains(&"N1"));
    let l4 = Lattice::chain(4);
    assert!(check_negation(&l4, &UnaryOp::from_fn(4, |x| 3 - x)).passed());
}

#[test]
fn fuzzy_implications() {
    let (l, _, to) = goedel_ops(3);
    assert!(check_fuzzy_implication(&l, &to).unwrap().passed());
    let top = PartialOp::from_fn(3, |_, _| Some(2));
    assert!(check_fuzzy_implication(&l, &top).unwrap().failed_axioms().contains(&"FI3"));

    let (l3, _, t4) = ops("ex3.4", "odot", "to");
    assert_eq!(check_fuzzy_implication(&l3, &t4), Err(CheckError::NotTotal(ClassTag::Fi)));
}

#[test]
fn partial_fuzzy_implications() {
    let (l3, _, t4) = ops("ex3.4", "odot", "to");
    assert!(check_partial_fuzzy_implication(&l3, &t4).unwrap().passed());

    // the ex4.11 arrow leaves 3 -> 3 blank, so the boundary precondition rejects it
    let (l4, _, t6) = ops("ex4.11", "otimes", "to");
    assert_eq!(
        check_partial_fuzzy_implication(&l4, &t6),
        Err(CheckError::BoundaryUndefined("3".into(), "3".into()))
    );
    let mut filled = t6.clone();
    filled.set(3, 3, Some(3));
    // direct PI1-PI3 scan of the completed table
    let n = l4.len();
    let le = |a: Option<usize>, b: Option<usize>| matches!((a, b), (Some(a), Some(b)) if l4.leq(a, b));
    let mut ok = filled.apply(0, 0) == Some(3) && filled.apply(3, 0) == Some(0);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if l4.leq(x, y) && filled.is_defined(x, z) && filled.is_defined(y, z) {
                    ok &= le(filled.apply(y, z), filled.apply(x, z));
                }
                if l4.leq(y, z) && filled.is_defined(x, y) && filled.is_defined(x, z) {
                    ok &= le(filled.apply(x, y), filled.apply(x, z));
                }
            }
        }
    }
    assert_eq!(check_partial_fuzzy_implication(&l4, &filled).unwrap().passed(), ok);

    let mut blanked = t4.clone();
    blanked.set(4, 0, None);
    assert!(matches!(
        check_partial_fuzzy_implication(&l3, &blanked),
        Err(CheckError::BoundaryUndefined(_, _))
    ));
}

#[test]
fn partial_adjoint_pairs_and_prls() {
    let (l, o, a) = ops("ex4.11", "otimes", "to");
    assert!(check_pap(&l, &o, &a).passed());
    assert!(check_prl(&l, &o, &a).passed());
    let (l, o, a) = goedel_ops(3);
    assert!(check_pap(&l, &o, &a).passed());

    let (l, o, a) = ops("ex6.22", "otimes", "to");
    assert!(check_prl(&l, &o, &a).passed());

    let (l, mut o, a) = ops("ex4.11", "otimes", "to");
    o.set(1, 3, None);
    o.set(3, 1, None);
    assert!(check_prl(&l, &o, &a).failed_axioms().contains(&"PRL3"));
}

#[test]
fn ex4_12_fails_directional_associativity() {
    let (l, o, a) = ops("ex4.12", "otimes", "to");
    let r = check_prl(&l, &o, &a);
    assert_eq!(r.failed_axioms(), ["PRL2"]);
    let w = &r.entry("PRL2").unwrap().witnesses[0].elements;
    assert_eq!(replay(ClassTag::Prl, &l, plw::bundle::Operands::two(&o, &a), "PRL2", w), Some(false));
}

#[test]
fn strong_prls_are_total() {
    for n in 2..5 {
        let (l, o, a) = goedel_ops(n);
        assert!(check_sprl(&l, &o, &a).passed());
    }
    for id in ["ex4.11", "ex4.20"] {
        let (l, o, a) = ops(id, "otimes", "to");
        if check_sprl(&l, &o, &a).passed() {
            assert!(o.is_total() && a.is_total(), "{id}");
        }
    }
}

#[test]
fn weak_prls() {
    for id in ["ex4.20", "ex4.22", "ex4.23"] {
        let (l, o, a) = ops(id, "otimes", "to");
        let r = check_wprl(&l, &o, &a);
        let extra: Vec<_> = r.failed_axioms().into_iter().filter(|x| x.starts_with('W')).collect();
        assert!(extra.is_empty(), "{id}: {extra:?}");
    }
    let (l, o, a) = ops("ex4.20", "otimes", "to");
    assert!(check_wprl(&l, &o, &a).passed());
}

#[test]
fn coadjoint_pairs() {
    let b = builtin("coresiduated:3").unwrap();
    let (p, m) = (b.op("oplus").unwrap(), b.op("ominus").unwrap());
    assert!(check_corl(&b.lattice, p, m).unwrap().passed());
    let bottom = PartialOp::from_fn(3, |_, _| Some(0));
    assert!(check_coadjoint(&b.lattice, p, &bottom).unwrap().failed_axioms().contains(&"cAP3"));
}

#[test]
fn partial_coresiduated() {
    let (l, o, a) = ops("ex5.15", "odot", "leadsto");
    let r = check_pcrl(&l, &o, &a);
    assert!(!r.failed_axioms().contains(&"cPRL3"));
    let mut blank = o.clone();
    blank.set(3, 0, None);
    blank.set(0, 3, None);
    assert!(check_pcrl(&l, &blank, &a).failed_axioms().contains(&"cPRL3"));
}

#[test]
fn zl_prls() {
    let b = builtin("zlprl:3").unwrap();
    let (p, m) = (b.op("oplus").unwrap(), b.op("ominus").unwrap());
    assert!(check_zl_prl(&b.lattice, p, m).passed());
    let mut broken = p.clone();
    broken.set(2, 0, Some(0));
    broken.set(0, 2, Some(0));
    assert!(!check_zl_prl(&b.lattice, &broken, m).passed());
}

#[test]
fn residuated_lattices() {
    let (l, o, a) = goedel_ops(5);
    assert!(check_residuated_lattice(&l, &o, &a).passed());

    // Lukasiewicz on {0, 1/2, 1}, against a direct adjunction scan
    let b = lukasiewicz(3);
    let (o, a) = (b.op("otimes").unwrap(), b.op("to").unwrap());
    let adj = (0..3).all(|x| {
        (0..3).all(|y| (0..3).all(|z| (o.apply(x, y).unwrap() <= z) == (y <= a.apply(x, z).unwrap())))
    });
    assert!(adj);
    assert!(check_residuated_lattice(&b.lattice, o, a).passed());

    let (l, o, a) = ops("ex4.20", "otimes", "to");
    assert!(check_residuated_lattice(&l, &o, &a).failed_axioms().contains(&"RL-total"));
}

#[test]
fn check_bundle_uses_the_claim() {
    let b: StructureBundle = builtin("ex2.11").unwrap();
    assert!(check_bundle(&b, ClassTag::Ptnorm).unwrap().passed());
    assert!(check_bundle(&b, ClassTag::Prl).is_err());
}

#[test]
fn infer_recovers_chain_order() {
    let b = plw::families::chain(3);
    let found = infer_orders(&[b]).unwrap();
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].order_matrix(), Lattice::chain(3).order_matrix());
}

#[test]
fn infer_includes_figure_order() {
    let b = builtin("ex4.20").unwrap();
    let fig4 = figure("fig4").unwrap();
    let found = infer_orders(&[b]).unwrap();
    assert!(found.iter().any(|l| l.order_matrix() == fig4.order_matrix()));
}
