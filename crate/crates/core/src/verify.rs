//! Machine checks of the theorems on finite structures.
//!
//! Each theorem is a plan: a hypothesis on the bundle, a list of
//! universally quantified clauses, and possibly derived structures that
//! must pass a class check. Clause witnesses are element tuples and can be
//! re-evaluated with [`replay_witness`].

use serde::Serialize;
use thiserror::Error;

use crate::axiom::for_each_tuple;
use crate::bundle::{ClassTag, Operands, StructureBundle};
use crate::checkers::{self, CheckError};
use crate::derive::{derive_pri, dualize_to_pcrl, DeriveOptions};
use crate::enumerate::{enumerate_class, EnumerateError, EnumerationTask};
use crate::filters::{build_quotient, enumerate_filters, enumerate_strong_filters, sim_holds, Pair};
use crate::lattice::{Elem, Lattice};
use crate::partial::PartialOp;

pub const THEOREM_IDS: &[&str] = &[
    "Thm2.2", "Thm2.4", "Prop2.14", "Thm3.5", "Thm3.7", "Thm4.8", "Thm4.13", "Thm4.14", "Thm4.18",
    "Thm4.24", "Thm5.17", "Thm5.19", "Cor5.20", "Prop6.8", "Prop6.15", "Thm6.17", "Thm6.19",
    "Thm6.21",
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown theorem id `{0}`")]
    UnknownTheoremId(String),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Counterexample,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Counterexample => "counterexample",
            Status::NotApplicable => "not-applicable",
        }
    }
}

/// A clause (or axiom of a derived structure) violated at `elements`,
/// relative to `filter` when the clause is about a filter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremWitness {
    pub clause: String,
    pub elements: Vec<Elem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filter: Option<Vec<Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: String,
    pub scope: String,
    pub status: Status,
    pub witnesses: Vec<TheoremWitness>,
    /// Reported, not asserted (for instance a converse that is known to fail).
    pub observations: Vec<TheoremWitness>,
    pub notes: Vec<String>,
}

pub enum Scope {
    Bundles(Vec<StructureBundle>),
    Enumeration(EnumerationTask),
}

/// Witnesses kept per clause.
const KEEP: usize = 4;

/// Runs every id on every bundle in scope, bundle-major.
pub fn verify_theorems(scope: &Scope, ids: &[&str]) -> Result<Vec<TheoremVerdict>, VerifyError> {
    for id in ids {
        if !THEOREM_IDS.contains(id) {
            return Err(VerifyError::UnknownTheoremId(id.to_string()));
        }
    }
    let enumerated;
    let bundles = match scope {
        Scope::Bundles(b) => b,
        Scope::Enumeration(task) => {
            enumerated = enumerate_class(task)?.structures;
            &enumerated
        }
    };
    let mut out = Vec::new();
    for b in bundles {
        for id in ids {
            out.push(verify_bundle(b, id)?);
        }
    }
    Ok(out)
}

pub fn verify_bundle(b: &StructureBundle, id: &str) -> Result<TheoremVerdict, VerifyError> {
    let plan = plan(b, id)?;
    Ok(run(b, id, plan))
}

/// Re-evaluates a witness: `Some(true)` when the cited clause holds at
/// its elements, `None` when the clause is not part of the plan.
pub fn replay_witness(b: &StructureBundle, id: &str, w: &TheoremWitness) -> Result<Option<bool>, VerifyError> {
    let plan = plan(b, id)?;
    for c in plan.clauses.iter().chain(&plan.observations) {
        if c.id == w.clause && c.filter == w.filter {
            return Ok(Some((c.holds)(&w.elements)));
        }
    }
    for d in &plan.derived {
        if d.filter != w.filter {
            continue;
        }
        let claim = d.bundle.claim_of(d.class).expect("derived bundles carry their claim");
        let Ok(ops) = d.bundle.operands(claim) else { continue };
        if let Some(r) = checkers::replay(d.class, &d.bundle.lattice, ops, &w.clause, &w.elements) {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

// ---- plans -------------------------------------------------------------------

enum Tuples {
    All(usize),
    /// `[x, s1, s2, ...]` for every `x` and nonempty subset `{s1, ...}`.
    ElementAndSubset,
}

type Holds<'a> = Box<dyn Fn(&[Elem]) -> bool + 'a>;

struct Clause<'a> {
    id: &'static str,
    tuples: Tuples,
    filter: Option<Vec<Elem>>,
    holds: Holds<'a>,
}

impl<'a> Clause<'a> {
    fn new(id: &'static str, arity: usize, holds: impl Fn(&[Elem]) -> bool + 'a) -> Self {
        Clause {
            id,
            tuples: Tuples::All(arity),
            filter: None,
            holds: Box::new(holds),
        }
    }

    fn on(mut self, filter: &[Elem]) -> Self {
        self.filter = Some(filter.to_vec());
        self
    }

    fn violations(&self, n: usize) -> Vec<Vec<Elem>> {
        let mut out = Vec::new();
        match self.tuples {
            Tuples::All(arity) => for_each_tuple(n, arity, |t| {
                if !(self.holds)(t) {
                    out.push(t.to_vec());
                }
                out.len() < KEEP
            }),
            Tuples::ElementAndSubset => {
                'outer: for x in 0..n {
                    for mask in 1u64..(1u64 << n) {
                        let mut t = vec![x];
                        t.extend((0..n).filter(|i| mask >> i & 1 == 1));
                        if !(self.holds)(&t) {
                            out.push(t);
                            if out.len() >= KEEP {
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// A derived structure that must pass `class`.
struct Derived {
    class: ClassTag,
    bundle: StructureBundle,
    filter: Option<Vec<Elem>>,
}

#[derive(Default, PartialEq, Eq)]
enum Mode {
    /// Every clause and derived check must hold.
    #[default]
    AllHold,
    /// The clauses form an implication cycle; a break is a counterexample.
    Cycle,
}

#[derive(Default)]
struct Plan<'a> {
    not_applicable: Option<String>,
    clauses: Vec<Clause<'a>>,
    derived: Vec<Derived>,
    observations: Vec<Clause<'a>>,
    notes: Vec<String>,
    mode: Mode,
}

impl<'a> Plan<'a> {
    fn na(reason: impl Into<String>) -> Self {
        Plan {
            not_applicable: Some(reason.into()),
            ..Plan::default()
        }
    }
}

/// Operands of the first claim that passes the `class` check: claims of
/// `class` itself, then claims of classes whose operands have the same shape.
fn hypothesis<'a>(b: &'a StructureBundle, class: ClassTag) -> Result<Operands<'a>, String> {
    use ClassTag::*;
    let related: &[ClassTag] = match class {
        Wprl => &[Prl, Sprl, Rl],
        Prl => &[Sprl, Wprl, Rl],
        _ => &[],
    };
    let own: Vec<_> = b.claims.iter().filter(|c| c.class == class).collect();
    let others = related.iter().flat_map(|&r| b.claims.iter().filter(move |c| c.class == r));
    if own.is_empty() && others.clone().next().is_none() {
        return Err(format!("no {class} claim"));
    }
    for c in own.into_iter().chain(others) {
        if let Ok(ops) = b.operands(c) {
            if checkers::passes(class, &b.lattice, ops) {
                return Ok(ops);
            }
        }
    }
    Err(format!("no claim passes the {class} check"))
}

fn single(l: &Lattice, class: ClassTag, name: &str, op: PartialOp) -> StructureBundle {
    StructureBundle::new(name, l.clone()).with_op("op", op).with_claim(class, &["op"])
}

fn two(l: &Lattice, class: ClassTag, name: &str, a: PartialOp, b: PartialOp) -> StructureBundle {
    StructureBundle::new(name, l.clone())
        .with_op("a", a)
        .with_op("b", b)
        .with_claim(class, &["a", "b"])
}

fn le(l: &Lattice, a: Option<Elem>, b: Elem) -> bool {
    matches!(a, Some(a) if l.leq(a, b))
}

fn plan<'a>(b: &'a StructureBundle, id: &str) -> Result<Plan<'a>, VerifyError> {
    use ClassTag::*;
    let l = &b.lattice;
    let (bot, top) = (l.bottom(), l.top());
    let plan = match id {
        "Thm2.2" => match hypothesis(b, Lea) {
            Err(r) => Plan::na(r),
            Ok(ops) => {
                let (p, c) = (ops.bin(0), ops.un());
                Plan {
                    clauses: vec![
                        Clause::new("2.2(1)", 2, move |t| p.is_defined(t[0], t[1]) == l.leq(t[0], c.apply(t[1]))),
                        Clause::new("2.2(2)", 3, move |t| {
                            let (x, y, z) = (t[0], t[1], t[2]);
                            match p.apply(y, z) {
                                Some(yz) if l.leq(x, y) => le(l, p.apply(x, z), yz),
                                _ => true,
                            }
                        }),
                        // x + (x + y')' = y for x <= y
                        Clause::new("2.2(3)", 2, move |t| {
                            let (x, y) = (t[0], t[1]);
                            if !l.leq(x, y) {
                                return true;
                            }
                            let diff = p.apply(x, c.apply(y)).map(|s| c.apply(s));
                            diff.and_then(|d| p.apply(x, d)) == Some(y)
                        }),
                    ],
                    ..Plan::default()
                }
            }
        },
        "Thm2.4" => match hypothesis(b, Quasires) {
            Err(r) => Plan::na(r),
            Ok(ops) => {
                let (o, a, c) = (ops.bin(0), ops.bin(1), ops.un());
                let pre = move |x: Elem, y: Elem| l.leq(c.apply(x), y);
                Plan {
                    clauses: vec![
                        Clause::new("2.4(1)", 2, move |t| !pre(t[0], t[1]) || le(l, o.apply(t[0], t[1]), t[1])),
                        Clause::new("2.4(2)", 2, move |t| {
                            let (x, y) = (t[0], t[1]);
                            !pre(x, y)
                                || matches!(o.apply(x, y).and_then(|p| a.apply(y, p)), Some(q) if l.leq(x, q))
                        }),
                        Clause::new("2.4(3)", 3, move |t| {
                            let (x, y, z) = (t[0], t[1], t[2]);
                            !(pre(x, y) && l.leq(z, y))
                                || le(l, o.apply(x, y), z) == matches!(a.apply(y, z), Some(q) if l.leq(x, q))
                        }),
                    ],
                    ..Plan::default()
                }
            }
        },
        "Prop2.14" => match hypothesis(b, Quasires) {
            Err(r) => Plan::na(r),
            Ok(ops) => Plan {
                derived: vec![Derived {
                    class: Ptnorm,
                    bundle: single(l, Ptnorm, "odot", ops.bin(0).clone()),
                    filter: None,
                }],
                ..Plan::default()
            },
        },
        "Thm3.5" => match hypothesis(b, Ptnorm) {
            Err(r) => Plan::na(r),
            Ok(ops) => thm3_5(l, ops.bin(0)),
        },
        "Thm3.7" => {
            let Some(claim) = b.claim_of(Ptnorm) else {
                return Ok(Plan::na("no ptnorm claim"));
            };
            let Ok(ops) = b.operands(claim) else {
                return Ok(Plan::na("ptnorm claim names missing operations"));
            };
            let d = derive_pri(l, ops.bin(0), DeriveOptions::unchecked()).expect("unchecked derivation").op;
            let d2 = d.clone();
            let mut p = match hypothesis(b, Ptnorm) {
                Ok(_) => Plan::default(),
                Err(r) => Plan::na(r),
            };
            p.clauses.push(Clause::new("3.7", 2, move |t| {
                !l.leq(t[0], t[1]) || d.apply(t[0], t[1]).is_none_or(|v| v == top)
            }));
            p.observations.push(Clause::new("3.7-converse", 2, move |t| {
                d2.apply(t[0], t[1]) != Some(top) || l.leq(t[0], t[1])
            }));
            p
        }
        "Thm4.8" => match hypothesis(b, Ptnorm) {
            Err(r) => Plan::na(r),
            Ok(ops) => {
                let d = derive_pri(l, ops.bin(0), DeriveOptions::default()).expect("checked input").op;
                if [(bot, bot), (top, top), (top, bot)].iter().any(|&(x, y)| !d.is_defined(x, y)) {
                    Plan::na("a boundary cell of the derived implication is undefined")
                } else {
                    Plan {
                        derived: vec![Derived {
                            class: Pfi,
                            bundle: single(l, Pfi, "derived", d),
                            filter: None,
                        }],
                        ..Plan::default()
                    }
                }
            }
        },
        "Thm4.13" => match hypothesis(b, Prl) {
            Err(r) => Plan::na(r),
            Ok(ops) => {
                let a = ops.bin(1);
                Plan {
                    clauses: vec![
                        Clause::new("4.13(1)", 1, move |t| a.apply(t[0], t[0]).is_none_or(|v| v == top)),
                        Clause::new("4.13(2)", 1, move |t| a.apply(t[0], top).is_none_or(|v| v == top)),
                        Clause::new("4.13(3)", 1, move |t| a.apply(top, t[0]).is_none_or(|v| v == t[0])),
                        Clause::new("4.13(4)", 2, move |t| {
                            a.apply(t[0], t[1]).is_none_or(|v| (v == top) == l.leq(t[0], t[1]))
                        }),
                    ],
                    ..Plan::default()
                }
            }
        },
        "Thm4.14" => match hypothesis(b, Ptnorm) {
            Err(r) => Plan::na(r),
            Ok(ops) => {
                let o = ops.bin(0).clone();
                let d = derive_pri(l, &o, DeriveOptions::default()).expect("checked input").op;
                Plan {
                    derived: vec![Derived {
                        class: Prl,
                        bundle: two(l, Prl, "derived", o, d),
                        filter: None,
                    }],
                    notes: vec!["reported experiment: the derived pair is checked as a PRL".into()],
                    ..Plan::default()
                }
            }
        },
        "Thm4.18" => match hypothesis(b, Sprl) {
            Err(r) => Plan::na(r),
            Ok(ops) => {
                let (o, a) = (ops.bin(0), ops.bin(1));
                Plan {
                    clauses: vec![Clause::new("4.18-total", 2, move |t| {
                        o.is_defined(t[0], t[1]) && a.is_defined(t[0], t[1])
                    })],
                    derived: vec![Derived {
                        class: Rl,
                        bundle: two(l, Rl, "same", o.clone(), a.clone()),
                        filter: None,
                    }],
                    ..Plan::default()
                }
            }
        },
        "Thm4.24" => match hypothesis(b, Wprl) {
            Err(r) => Plan::na(r),
            Ok(ops) => {
                let (o, a) = (ops.bin(0), ops.bin(1));
                Plan {
                    clauses: vec![
                        Clause::new("4.24(1)", 2, move |t| {
                            o.apply(t[0], t[1]).is_none_or(|v| l.leq(v, l.meet(t[0], t[1])))
                        }),
                        Clause::new("4.24(2)", 2, move |t| match a.apply(t[0], t[1]) {
                            Some(r) => le(l, o.apply(t[0], r), t[1]),
                            None => true,
                        }),
                        Clause::new("4.24(3)", 2, move |t| match a.apply(t[0], t[1]) {
                            Some(r) => matches!(a.apply(r, t[1]), Some(q) if l.leq(t[0], q)),
                            None => true,
                        }),
                    ],
                    ..Plan::default()
                }
            }
        },
        "Thm5.17" => match hypothesis(b, Pcrl) {
            Err(r) => Plan::na(r),
            Ok(ops) => {
                let (o, s) = (ops.bin(0), ops.bin(1));
                Plan {
                    clauses: vec![
                        Clause::new("5.17(1)", 1, move |t| s.apply(t[0], bot).is_none_or(|v| v == t[0])),
                        Clause::new("5.17(2)", 2, move |t| {
                            s.apply(t[0], t[1]).is_none_or(|v| (v == bot) == l.leq(t[0], t[1]))
                        }),
                        Clause::new("5.17(3)", 2, move |t| {
                            match o.apply(t[0], t[1]).and_then(|p| s.apply(p, t[1])) {
                                Some(q) => l.leq(q, t[0]),
                                None => true,
                            }
                        }),
                        Clause::new("5.17(4)", 2, move |t| {
                            match s.apply(t[0], t[1]).and_then(|q| o.apply(q, t[1])) {
                                Some(p) => l.leq(t[0], p),
                                None => true,
                            }
                        }),
                    ],
                    ..Plan::default()
                }
            }
        },
        "Thm5.19" => match hypothesis(b, Zlprl) {
            Err(r) => Plan::na(r),
            Ok(_) => Plan {
                derived: vec![Derived {
                    class: Pcrl,
                    bundle: dualize_to_pcrl(b).expect("hypothesis checked"),
                    filter: None,
                }],
                ..Plan::default()
            },
        },
        "Cor5.20" => match hypothesis(b, Pcrl) {
            Err(r) => Plan::na(r),
            Ok(ops) => {
                let (o, s) = (ops.bin(0), ops.bin(1));
                let mut p = Plan {
                    clauses: vec![Clause::new("5.20-total", 2, move |t| {
                        o.is_defined(t[0], t[1]) && s.is_defined(t[0], t[1])
                    })],
                    ..Plan::default()
                };
                if o.is_total() && s.is_total() {
                    p.derived.push(Derived {
                        class: Corl,
                        bundle: two(l, Corl, "same", o.clone(), s.clone()),
                        filter: None,
                    });
                }
                p
            }
        },
        "Prop6.8" | "Prop6.15" | "Thm6.17" | "Thm6.19" | "Thm6.21" => match hypothesis(b, Wprl) {
            Err(r) => Plan::na(r),
            Ok(ops) => filter_plan(id, Pair::new(l, ops.bin(0), ops.bin(1))),
        },
        other => return Err(VerifyError::UnknownTheoremId(other.to_string())),
    };
    Ok(plan)
}

fn thm3_5<'a>(l: &'a Lattice, o: &'a PartialOp) -> Plan<'a> {
    let d = derive_pri(l, o, DeriveOptions::default()).expect("checked input").op;
    let (d1, d2) = (d.clone(), d.clone());
    let in_s = move |x: Elem, y: Elem, a: Elem| le(l, o.apply(x, a), y);
    let distributive = Clause {
        id: "3.5(i)",
        tuples: Tuples::ElementAndSubset,
        filter: None,
        holds: Box::new(move |t| {
            let (x, xs) = (t[0], &t[1..]);
            if xs.iter().any(|&xi| !o.is_defined(x, xi)) {
                return true;
            }
            let sup = l.join_all(xs.iter().copied()).expect("nonempty");
            let image = l.join_all(xs.iter().map(|&xi| o.apply(x, xi).expect("checked")));
            o.apply(x, sup) == image
        }),
    };
    let residuation = Clause::new("3.5(ii)", 3, move |t| {
        let (x, z, y) = (t[0], t[1], t[2]);
        match o.apply(x, z) {
            Some(p) => l.leq(p, y) == matches!(d.apply(x, y), Some(r) if l.leq(z, r)),
            None => true,
        }
    });
    let modus = Clause::new("3.5(iii)", 2, move |t| {
        let (x, y) = (t[0], t[1]);
        match d1.apply(x, y).and_then(|r| o.apply(x, r)) {
            Some(p) => l.leq(p, y),
            None => true,
        }
    });
    let maximum = Clause::new("3.5(iv)", 2, move |t| {
        let (x, y) = (t[0], t[1]);
        let s: Vec<Elem> = l.elements().filter(|&a| in_s(x, y, a)).collect();
        s.is_empty() || s.iter().any(|&m| s.iter().all(|&a| l.leq(a, m)))
    });
    let mut plan = Plan {
        clauses: vec![distributive, residuation, modus, maximum],
        mode: Mode::Cycle,
        ..Plan::default()
    };
    // (i) and every S nonempty make the derived arrow a
    // fuzzy implication.
    let s_nonempty = l.elements().all(|x| l.elements().all(|y| l.elements().any(|a| in_s(x, y, a))));
    let dist_holds = plan.clauses[0].violations(l.len()).is_empty();
    if dist_holds && s_nonempty {
        if d2.is_total() {
            plan.derived.push(Derived {
                class: ClassTag::Fi,
                bundle: single(l, ClassTag::Fi, "derived", d2),
                filter: None,
            });
        } else {
            plan.clauses.push(Clause::new("3.6-total", 2, move |t| d2.is_defined(t[0], t[1])));
        }
    }
    plan
}

fn filter_plan<'a>(id: &str, p: Pair<'a>) -> Plan<'a> {
    let n = p.n();
    let mut plan = Plan::default();
    let filters: Vec<Vec<Elem>> = if id == "Prop6.8" {
        enumerate_filters(p).into_iter().map(|f| f.members).collect()
    } else {
        enumerate_strong_filters(p).into_iter().map(|f| f.members).collect()
    };
    if filters.is_empty() {
        return Plan::na("no strong filter");
    }
    for f in filters {
        let mut mask = vec![false; n];
        for &x in &f {
            mask[x] = true;
        }
        let mem = move |v: Option<Elem>| v.is_some_and(|v| mask[v]);
        let sim = {
            let f = f.clone();
            move |x: Elem, y: Elem| sim_holds(p, &f, x, y)
        };
        match id {
            "Prop6.8" => plan.clauses.push(
                Clause::new("6.8", 2, move |t| !(mem(Some(t[0])) && mem(p.to(t[0], t[1]))) || mem(Some(t[1]))).on(&f),
            ),
            "Prop6.15" => plan.clauses.push(
                Clause::new("6.15", 3, move |t| {
                    let (x, y, z) = (t[0], t[1], t[2]);
                    let lhs = p.ot(x, y).and_then(|xy| p.to(xy, z));
                    let rhs = p.to(y, z).and_then(|yz| p.to(x, yz));
                    match (lhs, rhs) {
                        (Some(_), Some(_)) if mem(lhs) => mem(rhs),
                        _ => true,
                    }
                })
                .on(&f),
            ),
            "Thm6.17" => {
                let (s1, s2, s3) = (sim.clone(), sim.clone(), sim);
                plan.clauses.push(Clause::new("6.17-refl", 1, move |t| s1(t[0], t[0])).on(&f));
                plan.clauses.push(Clause::new("6.17-sym", 2, move |t| s2(t[0], t[1]) == s2(t[1], t[0])).on(&f));
                plan.clauses.push(
                    Clause::new("6.17-trans", 3, move |t| !(s3(t[0], t[1]) && s3(t[1], t[2])) || s3(t[0], t[2])).on(&f),
                );
            }
            "Thm6.19" => {
                for (cid, arrow) in [("6.19-C2", false), ("6.19-C3", true)] {
                    let s = sim.clone();
                    plan.clauses.push(
                        Clause::new(cid, 4, move |t| {
                            let (x, y, x1, y1) = (t[0], t[1], t[2], t[3]);
                            if !(s(x, x1) && s(y, y1)) {
                                return true;
                            }
                            let op = |a, b| if arrow { p.to(a, b) } else { p.ot(a, b) };
                            match (op(x, y), op(x1, y1)) {
                                (Some(u), Some(v)) => s(u, v),
                                _ => true,
                            }
                        })
                        .on(&f),
                    );
                }
            }
            _ => match build_quotient(p, &f) {
                Ok(q) => plan.derived.push(Derived {
                    class: ClassTag::Prl,
                    bundle: q.bundle,
                    filter: Some(f.clone()),
                }),
                Err(e) => plan.notes.push(format!("F = {f:?}: no quotient ({e})")),
            },
        }
    }
    if id == "Thm6.21" && plan.derived.is_empty() {
        plan.not_applicable = Some("no strong filter induces a congruence".into());
    }
    plan
}

// ---- running a plan ------------------------------------------------------------

fn run(b: &StructureBundle, id: &str, plan: Plan<'_>) -> TheoremVerdict {
    let n = b.lattice.len();
    let observations = collect(&plan.observations, n);
    let mut verdict = TheoremVerdict {
        theorem: id.to_string(),
        scope: b.name.clone(),
        status: Status::NotApplicable,
        witnesses: Vec::new(),
        observations,
        notes: plan.notes.clone(),
    };
    if let Some(reason) = &plan.not_applicable {
        verdict.notes.push(reason.clone());
        return verdict;
    }
    if plan.mode == Mode::Cycle {
        let results: Vec<Vec<TheoremWitness>> = plan.clauses[..4].iter().map(|c| collect(std::slice::from_ref(c), n)).collect();
        let holds: Vec<bool> = results.iter().map(Vec::is_empty).collect();
        verdict.notes.push(format!(
            "(i)={} (ii)={} (iii)={} (iv)={}",
            holds[0], holds[1], holds[2], holds[3]
        ));
        for k in 0..4 {
            let next = (k + 1) % 4;
            if holds[k] && !holds[next] {
                verdict.witnesses.extend(results[next].iter().cloned());
            }
        }
        for (k, r) in results.into_iter().enumerate() {
            if !holds[k] && !verdict.witnesses.iter().any(|w| r.contains(w)) {
                verdict.observations.extend(r);
            }
        }
        verdict.witnesses.extend(collect(&plan.clauses[4..], n));
    } else {
        verdict.witnesses = collect(&plan.clauses, n);
    }
    for d in &plan.derived {
        verdict.witnesses.extend(derived_witnesses(d));
    }
    verdict.status = if verdict.witnesses.is_empty() {
        Status::Verified
    } else {
        Status::Counterexample
    };
    verdict
}

fn collect(clauses: &[Clause<'_>], n: usize) -> Vec<TheoremWitness> {
    clauses
        .iter()
        .flat_map(|c| {
            c.violations(n).into_iter().map(|elements| TheoremWitness {
                clause: c.id.to_string(),
                elements,
                filter: c.filter.clone(),
            })
        })
        .collect()
}

fn derived_witnesses(d: &Derived) -> Vec<TheoremWitness> {
    let claim = d.bundle.claim_of(d.class).expect("derived bundles carry their claim");
    match checkers::check_claim(&d.bundle, claim) {
        Ok(report) => report
            .entries
            .iter()
            .flat_map(|e| e.witnesses.iter())
            .map(|w| TheoremWitness {
                clause: w.axiom.to_string(),
                elements: w.elements.clone(),
                filter: d.filter.clone(),
            })
            .collect(),
        Err(CheckError::NotTotal(_)) | Err(CheckError::ArrowNotTotal) => vec![TheoremWitness {
            clause: "TOTAL".into(),
            elements: vec![],
            filter: d.filter.clone(),
        }],
        Err(e) => vec![TheoremWitness {
            clause: e.to_string(),
            elements: vec![],
            filter: d.filter.clone(),
        }],
    }
}
