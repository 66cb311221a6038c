//! One checker per structure class. Each class is a list of [`Axiom`]s;
//! checking scans every axiom and collects witnesses, and any witness can
//! be replayed against the axiom it cites.

use serde::Serialize;
use thiserror::Error;

use crate::axiom::{Axiom, AxiomEntry};
use crate::bundle::{BundleError, ClassTag, Operands, StructureBundle};
use crate::lattice::{Elem, Lattice};
use crate::partial::{
    assoc_directional_at, assoc_symmetric_at, commutes_at, monotone_at, PartialOp, UnaryOp,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("the implication of a quasiresiduated lattice must be total")]
    ArrowNotTotal,
    #[error("class `{0}` needs total operations")]
    NotTotal(ClassTag),
    #[error("boundary cell ({0}, {1}) of a partial fuzzy implication is undefined")]
    BoundaryUndefined(String, String),
    #[error(transparent)]
    Bundle(#[from] BundleError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub class: ClassTag,
    pub entries: Vec<AxiomEntry>,
    /// Informational findings that do not affect the verdict.
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(AxiomEntry::passed)
    }

    pub fn failed_axioms(&self) -> Vec<&'static str> {
        self.entries
            .iter()
            .filter(|e| !e.passed())
            .map(|e| e.axiom)
            .collect()
    }

    pub fn entry(&self, axiom: &str) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }
}

fn le_opt(l: &Lattice, a: Option<Elem>, b: Option<Elem>) -> bool {
    matches!((a, b), (Some(a), Some(b)) if l.leq(a, b))
}

// ---- shared axiom families -------------------------------------------------

fn partial_semigroup<'a>(
    op: &'a PartialOp,
    comm: &'static str,
    assoc: &'static str,
    symmetric_assoc: bool,
) -> Vec<Axiom<'a>> {
    let mut v = vec![Axiom::new(comm, 2, move |t| commutes_at(op, t[0], t[1]))];
    if symmetric_assoc {
        v.push(Axiom::new(assoc, 3, move |t| assoc_symmetric_at(op, t[0], t[1], t[2])));
    } else {
        v.push(Axiom::new(assoc, 3, move |t| assoc_directional_at(op, t[0], t[1], t[2])));
    }
    v
}

fn right_unit<'a>(op: &'a PartialOp, unit: Elem, id: &'static str) -> Axiom<'a> {
    Axiom::new(id, 1, move |t| op.apply(t[0], unit) == Some(t[0]))
}

fn left_unit<'a>(op: &'a PartialOp, unit: Elem, id: &'static str) -> Axiom<'a> {
    Axiom::new(id, 1, move |t| op.apply(unit, t[0]) == Some(t[0]))
}

fn totality<'a>(ops: Vec<&'a PartialOp>, id: &'static str) -> Axiom<'a> {
    Axiom::new(id, 2, move |t| ops.iter().all(|o| o.is_defined(t[0], t[1])))
}

/// (PAP1)-(PAP3): conditional monotonicity and residuation on mutually
/// defined triples.
fn pap_axioms<'a>(l: &'a Lattice, o: &'a PartialOp, a: &'a PartialOp) -> Vec<Axiom<'a>> {
    vec![
        Axiom::new("PAP1a", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            match (o.apply(x, z), o.apply(y, z)) {
                (Some(p), Some(q)) if l.leq(x, y) => l.leq(p, q),
                _ => true,
            }
        }),
        Axiom::new("PAP1b", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            match (o.apply(z, x), o.apply(z, y)) {
                (Some(p), Some(q)) if l.leq(x, y) => l.leq(p, q),
                _ => true,
            }
        }),
        Axiom::new("PAP2a", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            match (a.apply(x, z), a.apply(y, z)) {
                (Some(p), Some(q)) if l.leq(x, y) => l.leq(q, p),
                _ => true,
            }
        }),
        Axiom::new("PAP2b", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            match (a.apply(z, x), a.apply(z, y)) {
                (Some(p), Some(q)) if l.leq(x, y) => l.leq(p, q),
                _ => true,
            }
        }),
        Axiom::new("PAP3", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            match (o.apply(x, y), a.apply(x, z)) {
                (Some(p), Some(q)) => l.leq(p, z) == l.leq(y, q),
                _ => true,
            }
        }),
    ]
}

/// (sPAP1)-(sPAP3): monotonicity that propagates definedness, and
/// residuation with definedness on both sides.
fn spap_axioms<'a>(l: &'a Lattice, o: &'a PartialOp, a: &'a PartialOp) -> Vec<Axiom<'a>> {
    vec![
        Axiom::new("sPAP1a", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            match o.apply(x, z) {
                Some(p) if l.leq(x, y) => le_opt(l, Some(p), o.apply(y, z)),
                _ => true,
            }
        }),
        Axiom::new("sPAP1b", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            match o.apply(z, x) {
                Some(p) if l.leq(x, y) => le_opt(l, Some(p), o.apply(z, y)),
                _ => true,
            }
        }),
        Axiom::new("sPAP2a", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            match a.apply(x, z) {
                Some(p) if l.leq(x, y) => le_opt(l, a.apply(y, z), Some(p)),
                _ => true,
            }
        }),
        Axiom::new("sPAP2b", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            match a.apply(z, y) {
                Some(p) if l.leq(x, y) => le_opt(l, a.apply(z, x), Some(p)),
                _ => true,
            }
        }),
        Axiom::new("sPAP3", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let left = matches!(o.apply(x, y), Some(p) if l.leq(p, z));
            let right = matches!(a.apply(x, z), Some(q) if l.leq(y, q));
            left == right
        }),
    ]
}

fn t_norm_like<'a>(l: &'a Lattice, op: &'a PartialOp, dual: bool) -> Vec<Axiom<'a>> {
    let (unit_id, comm, assoc, mono) = if dual {
        ("TC1", "TC2", "TC3", "TC4")
    } else {
        ("TN1", "TN2", "TN3", "TN4")
    };
    let unit = if dual {
        left_unit(op, l.bottom(), unit_id)
    } else {
        right_unit(op, l.top(), unit_id)
    };
    let mut v = vec![unit];
    v.extend(partial_semigroup(op, comm, assoc, false));
    v.push(Axiom::new(mono, 4, move |t| monotone_at(l, op, t[0], t[1], t[2], t[3])));
    v
}

// ---- class table -----------------------------------------------------------

/// The axioms making up `class`, instantiated on the given operands.
/// Fails only when a precondition of the class is not met (for example a
/// non-total operation where the class requires a total one).
pub fn class_axioms<'a>(
    class: ClassTag,
    l: &'a Lattice,
    ops: Operands<'a>,
) -> Result<Vec<Axiom<'a>>, CheckError> {
    use ClassTag::*;
    let (bot, top) = (l.bottom(), l.top());
    let axioms = match class {
        Ptnorm => t_norm_like(l, ops.bin(0), false),
        Ptconorm => t_norm_like(l, ops.bin(0), true),
        Tnorm | Tconorm => {
            let op = ops.bin(0);
            let mut v = vec![totality(vec![op], "TOTAL")];
            v.extend(t_norm_like(l, op, class == Tconorm));
            v
        }
        Negation => {
            let n = ops.un();
            vec![
                Axiom::new("N1", 0, move |_| n.apply(bot) == top && n.apply(top) == bot),
                Axiom::new("N2", 2, move |t| !l.leq(t[0], t[1]) || l.leq(n.apply(t[1]), n.apply(t[0]))),
            ]
        }
        Fi => {
            let i = ops.bin(0);
            if !i.is_total() {
                return Err(CheckError::NotTotal(Fi));
            }
            let at = move |x, y| i.apply(x, y).expect("total");
            vec![
                Axiom::new("FI1", 3, move |t| !l.leq(t[0], t[1]) || l.leq(at(t[1], t[2]), at(t[0], t[2]))),
                Axiom::new("FI2", 3, move |t| !l.leq(t[1], t[2]) || l.leq(at(t[0], t[1]), at(t[0], t[2]))),
                Axiom::new("FI3", 0, move |_| at(bot, bot) == top && at(top, top) == top && at(top, bot) == bot),
            ]
        }
        Pfi => {
            let pi = ops.bin(0);
            for (x, y) in [(bot, bot), (top, top), (top, bot)] {
                if !pi.is_defined(x, y) {
                    return Err(CheckError::BoundaryUndefined(
                        l.label(x).to_string(),
                        l.label(y).to_string(),
                    ));
                }
            }
            pfi_axioms(l, pi)
        }
        Ea | Lea => {
            let (p, c) = (ops.bin(0), ops.un());
            let mut v = vec![
                Axiom::new("E1", 2, move |t| p.apply(t[0], t[1]) == p.apply(t[1], t[0])),
                Axiom::new("E2", 3, move |t| assoc_symmetric_at(p, t[0], t[1], t[2])),
                Axiom::new("E3", 1, move |t| {
                    let x = t[0];
                    let comps: Vec<Elem> = l.elements().filter(|&z| p.apply(x, z) == Some(top)).collect();
                    comps == [c.apply(x)]
                }),
                Axiom::new("E4", 1, move |t| !p.is_defined(t[0], top) || t[0] == bot),
            ];
            if class == Lea {
                v.push(Axiom::new("LEA", 2, move |t| {
                    let derived = l.elements().any(|z| p.apply(t[0], z) == Some(t[1]));
                    derived == l.leq(t[0], t[1])
                }));
            }
            v
        }
        Quasires => {
            let (o, a, c) = (ops.bin(0), ops.bin(1), ops.un());
            if !a.is_total() {
                return Err(CheckError::ArrowNotTotal);
            }
            let mut v = vec![right_unit(o, top, "Q1-unit")];
            v.extend(partial_semigroup(o, "Q1-comm", "Q1-assoc", true));
            v.push(Axiom::new("Q1-def", 2, move |t| {
                o.is_defined(t[0], t[1]) == l.leq(c.apply(t[0]), t[1])
            }));
            v.push(Axiom::new("Q2-inv", 1, move |t| c.apply(c.apply(t[0])) == t[0]));
            v.push(Axiom::new("Q2-anti", 2, move |t| {
                !l.leq(t[0], t[1]) || l.leq(c.apply(t[1]), c.apply(t[0]))
            }));
            v.push(Axiom::new("Q3", 3, move |t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                let u = l.join(x, c.apply(y));
                let left = matches!(o.apply(u, y), Some(p) if l.leq(p, l.meet(y, z)));
                let right = matches!(a.apply(y, z), Some(q) if l.leq(u, q));
                left == right
            }));
            v
        }
        Pap => pap_axioms(l, ops.bin(0), ops.bin(1)),
        Prl | Wprl => {
            let (o, a) = (ops.bin(0), ops.bin(1));
            let mut v = partial_semigroup(o, "PRL1", "PRL2", false);
            v.push(right_unit(o, top, "PRL3"));
            v.extend(pap_axioms(l, o, a));
            if class == Wprl {
                v.push(Axiom::new("W1", 1, move |t| {
                    a.is_defined(t[0], t[0]) && a.is_defined(t[0], top)
                }));
                v.push(Axiom::new("W2", 2, move |t| match a.apply(t[0], t[1]) {
                    Some(r) => o.is_defined(t[0], r),
                    None => true,
                }));
            }
            v
        }
        Sprl => {
            let (o, a) = (ops.bin(0), ops.bin(1));
            let mut v = partial_semigroup(o, "sPRL1", "sPRL2", false);
            v.push(left_unit(o, top, "sPRL3"));
            v.extend(spap_axioms(l, o, a));
            v
        }
        Coap | Corl => {
            let (o, m) = (ops.bin(0), ops.bin(1));
            if !(o.is_total() && m.is_total()) {
                return Err(CheckError::NotTotal(class));
            }
            let mut v = Vec::new();
            if class == Corl {
                v.push(Axiom::new("cRL1-comm", 2, move |t| o.apply(t[0], t[1]) == o.apply(t[1], t[0])));
                v.push(Axiom::new("cRL1-assoc", 3, move |t| assoc_symmetric_at(o, t[0], t[1], t[2])));
                v.push(right_unit(o, bot, "cRL2"));
            }
            let at = move |op: &PartialOp, x, y| op.apply(x, y).expect("total");
            v.push(Axiom::new("cAP1a", 3, move |t| !l.leq(t[0], t[1]) || l.leq(at(o, t[0], t[2]), at(o, t[1], t[2]))));
            v.push(Axiom::new("cAP1b", 3, move |t| !l.leq(t[0], t[1]) || l.leq(at(o, t[2], t[0]), at(o, t[2], t[1]))));
            v.push(Axiom::new("cAP2a", 3, move |t| !l.leq(t[0], t[1]) || l.leq(at(m, t[0], t[2]), at(m, t[1], t[2]))));
            v.push(Axiom::new("cAP2b", 3, move |t| !l.leq(t[0], t[1]) || l.leq(at(m, t[2], t[1]), at(m, t[2], t[0]))));
            v.push(Axiom::new("cAP3", 3, move |t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                l.leq(z, at(o, x, y)) == l.leq(at(m, z, y), x)
            }));
            v
        }
        Pcrl => {
            let (o, a) = (ops.bin(0), ops.bin(1));
            let mut v = partial_semigroup(o, "cPRL1", "cPRL2", false);
            v.push(right_unit(o, bot, "cPRL3"));
            v.push(Axiom::new("cPAP1", 3, move |t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                match (o.apply(x, z), o.apply(y, z)) {
                    (Some(p), Some(q)) if l.leq(x, y) => l.leq(p, q),
                    _ => true,
                }
            }));
            v.push(Axiom::new("cPAP2a", 3, move |t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                match (a.apply(x, z), a.apply(y, z)) {
                    (Some(p), Some(q)) if l.leq(x, y) => l.leq(p, q),
                    _ => true,
                }
            }));
            v.push(Axiom::new("cPAP2b", 3, move |t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                match (a.apply(z, y), a.apply(z, x)) {
                    (Some(p), Some(q)) if l.leq(x, y) => l.leq(p, q),
                    _ => true,
                }
            }));
            v.push(Axiom::new("cPAP3", 3, move |t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                match (o.apply(x, y), a.apply(z, y)) {
                    (Some(p), Some(q)) => l.leq(z, p) == l.leq(q, x),
                    _ => true,
                }
            }));
            v
        }
        Zlprl => {
            let (o, m) = (ops.bin(0), ops.bin(1));
            let mut v = partial_semigroup(o, "ZL-comm", "ZL-assoc", false);
            v.push(right_unit(o, bot, "ZL-unit"));
            v.extend(pap_axioms(l, o, m));
            v
        }
        Rl => {
            let (o, a) = (ops.bin(0), ops.bin(1));
            vec![
                totality(vec![o, a], "RL-total"),
                Axiom::new("RL-comm", 2, move |t| o.apply(t[0], t[1]) == o.apply(t[1], t[0])),
                Axiom::new("RL-assoc", 3, move |t| assoc_symmetric_at(o, t[0], t[1], t[2])),
                right_unit(o, top, "RL-unit"),
                Axiom::new("RL-adj", 3, move |t| {
                    let (x, y, z) = (t[0], t[1], t[2]);
                    match (o.apply(x, y), a.apply(x, z)) {
                        (Some(p), Some(q)) => l.leq(p, z) == l.leq(y, q),
                        _ => false,
                    }
                }),
            ]
        }
    };
    Ok(axioms)
}

fn pfi_axioms<'a>(l: &'a Lattice, pi: &'a PartialOp) -> Vec<Axiom<'a>> {
    let (bot, top) = (l.bottom(), l.top());
    vec![
        Axiom::new("PI1", 3, move |t| {
            let (x1, x2, y) = (t[0], t[1], t[2]);
            match (pi.apply(x1, y), pi.apply(x2, y)) {
                (Some(p), Some(q)) if l.leq(x1, x2) => l.leq(q, p),
                _ => true,
            }
        }),
        Axiom::new("PI2", 3, move |t| {
            let (x, y1, y2) = (t[0], t[1], t[2]);
            match (pi.apply(x, y1), pi.apply(x, y2)) {
                (Some(p), Some(q)) if l.leq(y1, y2) => l.leq(p, q),
                _ => true,
            }
        }),
        Axiom::new("PI3", 0, move |_| {
            pi.apply(bot, bot) == Some(top) && pi.apply(top, top) == Some(top) && pi.apply(top, bot) == Some(bot)
        }),
    ]
}

/// Scans every axiom of `class`.
pub fn check(class: ClassTag, l: &Lattice, ops: Operands<'_>) -> Result<CheckReport, CheckError> {
    let axioms = class_axioms(class, l, ops)?;
    let entries = axioms.iter().map(|a| a.scan(l.len())).collect();
    let mut report = CheckReport {
        class,
        entries,
        notes: Vec::new(),
    };
    if matches!(class, ClassTag::Ea | ClassTag::Lea) {
        report.notes.push(derived_order_note(l, ops.bin(0)));
    }
    Ok(report)
}

/// Like [`check`] but stops at the first violation.
pub fn passes(class: ClassTag, l: &Lattice, ops: Operands<'_>) -> bool {
    match class_axioms(class, l, ops) {
        Ok(axioms) => axioms.iter().all(|a| a.holds_everywhere(l.len())),
        Err(_) => false,
    }
}

/// Checks one of the bundle's claims.
pub fn check_claim(bundle: &StructureBundle, claim: &crate::bundle::Claim) -> Result<CheckReport, CheckError> {
    let ops = bundle.operands(claim)?;
    check(claim.class, &bundle.lattice, ops)
}

/// Checks a bundle against an arbitrary class, using the operands of
/// the bundle's first claim for that class.
pub fn check_bundle(bundle: &StructureBundle, class: ClassTag) -> Result<CheckReport, CheckError> {
    let claim = bundle
        .claim_of(class)
        .ok_or_else(|| BundleError::UnknownOp(format!("<no {class} claim>")))?;
    check_claim(bundle, claim)
}

/// Re-evaluates a witness against the axiom it cites. Returns `Some(true)`
/// when the axiom holds at that tuple, `None` for an unknown axiom id.
pub fn replay(
    class: ClassTag,
    l: &Lattice,
    ops: Operands<'_>,
    axiom: &str,
    tuple: &[Elem],
) -> Option<bool> {
    let axioms = class_axioms(class, l, ops).ok()?;
    axioms.iter().find(|a| a.id == axiom).map(|a| a.holds_at(tuple))
}

/// The order an effect-algebra sum induces (`x <= y` iff `x + z = y` for
/// some `z`), if it is a bounded lattice.
pub fn derived_order(l: &Lattice, plus: &PartialOp) -> Option<Lattice> {
    let n = l.len();
    let mut leq = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            leq[x * n + y] = (0..n).any(|z| plus.apply(x, z) == Some(y));
        }
    }
    let closed = (0..n).all(|a| {
        (0..n).all(|b| !leq[a * n + b] || (0..n).all(|c| !leq[b * n + c] || leq[a * n + c]))
    });
    let reflexive = (0..n).all(|x| leq[x * n + x]);
    if !(closed && reflexive) {
        return None;
    }
    Lattice::from_leq(l.labels().to_vec(), leq).ok()
}

fn derived_order_note(l: &Lattice, plus: &PartialOp) -> String {
    match derived_order(l, plus) {
        None => "derived order: not a lattice".to_string(),
        Some(d) if d.order_matrix() == l.order_matrix() => {
            "derived order: lattice, equal to the declared order".to_string()
        }
        Some(_) => "derived order: lattice, differs from the declared order".to_string(),
    }
}

// ---- named entry points ------------------------------------------------------

pub fn check_partial_tnorm(l: &Lattice, op: &PartialOp) -> CheckReport {
    check(ClassTag::Ptnorm, l, Operands::one(op)).expect("infallible")
}

pub fn check_partial_tconorm(l: &Lattice, op: &PartialOp) -> CheckReport {
    check(ClassTag::Ptconorm, l, Operands::one(op)).expect("infallible")
}

pub fn check_effect_algebra(l: &Lattice, plus: &PartialOp, comp: &UnaryOp) -> CheckReport {
    check(ClassTag::Ea, l, Operands::one(plus).with_unary(comp)).expect("infallible")
}

pub fn check_lattice_effect_algebra(l: &Lattice, plus: &PartialOp, comp: &UnaryOp) -> CheckReport {
    check(ClassTag::Lea, l, Operands::one(plus).with_unary(comp)).expect("infallible")
}

pub fn check_quasiresiduated(
    l: &Lattice,
    odot: &PartialOp,
    arrow: &PartialOp,
    comp: &UnaryOp,
) -> Result<CheckReport, CheckError> {
    check(ClassTag::Quasires, l, Operands::two(odot, arrow).with_unary(comp))
}

pub fn check_negation(l: &Lattice, n: &UnaryOp) -> CheckReport {
    check(ClassTag::Negation, l, Operands::unary(n)).expect("infallible")
}

pub fn check_fuzzy_implication(l: &Lattice, i: &PartialOp) -> Result<CheckReport, CheckError> {
    check(ClassTag::Fi, l, Operands::one(i))
}

pub fn check_partial_fuzzy_implication(l: &Lattice, pi: &PartialOp) -> Result<CheckReport, CheckError> {
    check(ClassTag::Pfi, l, Operands::one(pi))
}

pub fn check_pap(l: &Lattice, otimes: &PartialOp, arrow: &PartialOp) -> CheckReport {
    check(ClassTag::Pap, l, Operands::two(otimes, arrow)).expect("infallible")
}

pub fn check_prl(l: &Lattice, otimes: &PartialOp, arrow: &PartialOp) -> CheckReport {
    check(ClassTag::Prl, l, Operands::two(otimes, arrow)).expect("infallible")
}

pub fn check_sprl(l: &Lattice, otimes: &PartialOp, arrow: &PartialOp) -> CheckReport {
    check(ClassTag::Sprl, l, Operands::two(otimes, arrow)).expect("infallible")
}

pub fn check_wprl(l: &Lattice, otimes: &PartialOp, arrow: &PartialOp) -> CheckReport {
    check(ClassTag::Wprl, l, Operands::two(otimes, arrow)).expect("infallible")
}

pub fn check_coadjoint(l: &Lattice, oplus: &PartialOp, ominus: &PartialOp) -> Result<CheckReport, CheckError> {
    check(ClassTag::Coap, l, Operands::two(oplus, ominus))
}

pub fn check_corl(l: &Lattice, oplus: &PartialOp, ominus: &PartialOp) -> Result<CheckReport, CheckError> {
    check(ClassTag::Corl, l, Operands::two(oplus, ominus))
}

pub fn check_pcrl(l: &Lattice, odot: &PartialOp, leadsto: &PartialOp) -> CheckReport {
    check(ClassTag::Pcrl, l, Operands::two(odot, leadsto)).expect("infallible")
}

pub fn check_zl_prl(l: &Lattice, oplus: &PartialOp, ominus: &PartialOp) -> CheckReport {
    check(ClassTag::Zlprl, l, Operands::two(oplus, ominus)).expect("infallible")
}

pub fn check_residuated_lattice(l: &Lattice, otimes: &PartialOp, arrow: &PartialOp) -> CheckReport {
    check(ClassTag::Rl, l, Operands::two(otimes, arrow)).expect("infallible")
}
