//! Axioms as predicates over element tuples, and the reports built from
//! scanning them.
//!
//! Every axiom of every structure class is a universally quantified
//! statement over a fixed number of elements. A scan walks all tuples in
//! lexicographic order and records the first few that violate it, so the
//! first witness of a failing entry is always the lexicographically
//! smallest one.

use serde::Serialize;

use crate::lattice::Elem;

/// Upper bound on witnesses stored per axiom.
pub const MAX_WITNESSES: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub axiom: &'static str,
    pub elements: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomEntry {
    pub axiom: &'static str,
    pub witnesses: Vec<Witness>,
}

impl AxiomEntry {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn pass(axiom: &'static str) -> Self {
        AxiomEntry {
            axiom,
            witnesses: Vec::new(),
        }
    }

    pub fn fail(axiom: &'static str, elements: Vec<Elem>) -> Self {
        AxiomEntry {
            axiom,
            witnesses: vec![Witness { axiom, elements }],
        }
    }
}

/// Calls `f` on every tuple of `arity` elements from `0..n`, in
/// lexicographic order, until it returns `false`.
pub fn for_each_tuple(n: usize, arity: usize, mut f: impl FnMut(&[Elem]) -> bool) {
    if arity == 0 {
        f(&[]);
        return;
    }
    if n == 0 {
        return;
    }
    let mut t = vec![0; arity];
    loop {
        if !f(&t) {
            return;
        }
        let mut i = arity;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

/// Scans all tuples and collects up to [`MAX_WITNESSES`] violations.
pub fn scan(n: usize, arity: usize, axiom: &'static str, holds: impl Fn(&[Elem]) -> bool) -> AxiomEntry {
    let mut witnesses = Vec::new();
    for_each_tuple(n, arity, |t| {
        if !holds(t) {
            witnesses.push(Witness {
                axiom,
                elements: t.to_vec(),
            });
        }
        witnesses.len() < MAX_WITNESSES
    });
    AxiomEntry { axiom, witnesses }
}

/// True iff `holds` is true on every tuple; stops at the first violation.
pub fn holds_everywhere(n: usize, arity: usize, holds: impl Fn(&[Elem]) -> bool) -> bool {
    let mut ok = true;
    for_each_tuple(n, arity, |t| {
        ok = holds(t);
        ok
    });
    ok
}

type Predicate<'a> = Box<dyn Fn(&[Elem]) -> bool + Send + Sync + 'a>;

/// One named axiom: its arity and the predicate it asserts.
pub struct Axiom<'a> {
    pub id: &'static str,
    pub arity: usize,
    holds: Predicate<'a>,
}

impl<'a> Axiom<'a> {
    pub fn new(
        id: &'static str,
        arity: usize,
        holds: impl Fn(&[Elem]) -> bool + Send + Sync + 'a,
    ) -> Self {
        Axiom {
            id,
            arity,
            holds: Box::new(holds),
        }
    }

    pub fn holds_at(&self, tuple: &[Elem]) -> bool {
        assert_eq!(tuple.len(), self.arity, "axiom {} has arity {}", self.id, self.arity);
        (self.holds)(tuple)
    }

    pub fn scan(&self, n: usize) -> AxiomEntry {
        scan(n, self.arity, self.id, |t| (self.holds)(t))
    }

    pub fn holds_everywhere(&self, n: usize) -> bool {
        holds_everywhere(n, self.arity, |t| (self.holds)(t))
    }
}

impl std::fmt::Debug for Axiom<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Axiom({}, arity {})", self.id, self.arity)
    }
}
