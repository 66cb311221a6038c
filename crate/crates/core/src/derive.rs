//! Constructions producing new operations: implications derived by
//! supremum and infimum, the lattice effect algebra bridges, generators of
//! partial fuzzy implications, and order dualization.

use serde::Serialize;
use thiserror::Error;

use crate::bundle::{ClassTag, StructureBundle};
use crate::checkers;
use crate::grid::{Grid, GridError, Q};
use crate::lattice::{Elem, Lattice};
use crate::partial::{PartialOp, UnaryOp};
use crate::bundle::Operands;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeriveError {
    #[error("operation is not a partial t-norm on this lattice")]
    NotAPartialTnorm,
    #[error("operation is not a partial t-conorm on this lattice")]
    NotAPartialTconorm,
    #[error("structure is not a lattice effect algebra")]
    NotAnLea,
    #[error("input is not a partial fuzzy implication")]
    InputNotPfi,
    #[error("input is not a negation")]
    InputNotNegation,
    #[error("structure is not a zL-PRL")]
    NotZlPrl,
    #[error("splice point must lie strictly between 0 and 1")]
    BadSplicePoint,
    #[error(transparent)]
    Grid(#[from] GridError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Diagnostic {
    /// The supremum (or infimum) exists but is not a member of the set.
    SupNotAttained,
    InfNotAttained,
    /// The set was empty.
    SEmpty,
    IEmpty,
}

impl Diagnostic {
    pub fn as_str(self) -> &'static str {
        match self {
            Diagnostic::SupNotAttained => "sup-not-attained",
            Diagnostic::InfNotAttained => "inf-not-attained",
            Diagnostic::SEmpty => "S-empty",
            Diagnostic::IEmpty => "I-empty",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellNote {
    pub x: Elem,
    pub y: Elem,
    pub note: Diagnostic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationOutcome {
    pub op: PartialOp,
    pub diagnostics: Vec<CellNote>,
}

impl DerivationOutcome {
    pub fn notes_at(&self, x: Elem, y: Elem) -> Vec<Diagnostic> {
        self.diagnostics
            .iter()
            .filter(|c| c.x == x && c.y == y)
            .map(|c| c.note)
            .collect()
    }
}

/// What an empty set of candidates produces.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EmptySup {
    #[default]
    Undefined,
    /// The order-theoretic convention `sup {} = 0`.
    Bottom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeriveOptions {
    pub empty_sup: EmptySup,
    /// Reject inputs that fail their class check.
    pub check_input: bool,
}

impl Default for DeriveOptions {
    fn default() -> Self {
        DeriveOptions {
            empty_sup: EmptySup::Undefined,
            check_input: true,
        }
    }
}

impl DeriveOptions {
    /// Runs the construction without validating the input operation.
    pub fn unchecked() -> Self {
        DeriveOptions {
            check_input: false,
            ..Self::default()
        }
    }
}

/// `a -> b = sup {x | a*x defined, a*x <= b}`.
pub fn derive_pri(l: &Lattice, tnorm: &PartialOp, opts: DeriveOptions) -> Result<DerivationOutcome, DeriveError> {
    if opts.check_input && !checkers::passes(ClassTag::Ptnorm, l, Operands::one(tnorm)) {
        return Err(DeriveError::NotAPartialTnorm);
    }
    let n = l.len();
    let mut op = PartialOp::undefined(n);
    let mut diagnostics = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let s: Vec<Elem> = l
                .elements()
                .filter(|&x| matches!(tnorm.apply(a, x), Some(v) if l.leq(v, b)))
                .collect();
            if s.is_empty() {
                diagnostics.push(CellNote { x: a, y: b, note: Diagnostic::SEmpty });
                if opts.empty_sup == EmptySup::Bottom {
                    op.set(a, b, Some(l.bottom()));
                }
                continue;
            }
            let sup = l.join_all(s.iter().copied()).expect("nonempty");
            if !s.contains(&sup) {
                diagnostics.push(CellNote { x: a, y: b, note: Diagnostic::SupNotAttained });
            }
            op.set(a, b, Some(sup));
        }
    }
    Ok(DerivationOutcome { op, diagnostics })
}

/// `a -> b = inf {x | a*x defined, a*x >= b}` for a partial t-conorm.
pub fn derive_prci(l: &Lattice, tconorm: &PartialOp, opts: DeriveOptions) -> Result<DerivationOutcome, DeriveError> {
    if opts.check_input && !checkers::passes(ClassTag::Ptconorm, l, Operands::one(tconorm)) {
        return Err(DeriveError::NotAPartialTconorm);
    }
    let n = l.len();
    let mut op = PartialOp::undefined(n);
    let mut diagnostics = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let set: Vec<Elem> = l
                .elements()
                .filter(|&x| matches!(tconorm.apply(a, x), Some(v) if l.leq(b, v)))
                .collect();
            if set.is_empty() {
                diagnostics.push(CellNote { x: a, y: b, note: Diagnostic::IEmpty });
                continue;
            }
            let inf = l.meet_all(set.iter().copied()).expect("nonempty");
            if !set.contains(&inf) {
                diagnostics.push(CellNote { x: a, y: b, note: Diagnostic::InfNotAttained });
            }
            op.set(a, b, Some(inf));
        }
    }
    Ok(DerivationOutcome { op, diagnostics })
}

// ---- lattice effect algebras ------------------------------------------------

/// A validated lattice effect algebra.
#[derive(Clone, Copy, Debug)]
pub struct Lea<'a> {
    pub lattice: &'a Lattice,
    pub plus: &'a PartialOp,
    pub comp: &'a UnaryOp,
}

impl<'a> Lea<'a> {
    pub fn new(lattice: &'a Lattice, plus: &'a PartialOp, comp: &'a UnaryOp) -> Result<Self, DeriveError> {
        if !checkers::passes(ClassTag::Lea, lattice, Operands::one(plus).with_unary(comp)) {
            return Err(DeriveError::NotAnLea);
        }
        Ok(Lea { lattice, plus, comp })
    }

    /// Uses the operands of the bundle's `lea` (or else `ea`) claim.
    pub fn from_bundle(b: &'a StructureBundle) -> Result<Self, DeriveError> {
        let claim = b
            .claim_of(ClassTag::Lea)
            .or_else(|| b.claim_of(ClassTag::Ea))
            .ok_or(DeriveError::NotAnLea)?;
        let ops = b.operands(claim).map_err(|_| DeriveError::NotAnLea)?;
        Lea::new(&b.lattice, ops.bin(0), ops.un())
    }

    fn c(&self, x: Elem) -> Elem {
        self.comp.apply(x)
    }

    /// `x - w`: the `z` with `w + z = x`, if any.
    pub fn minus(&self, x: Elem, w: Elem) -> Option<Elem> {
        self.lattice.elements().find(|&z| self.plus.apply(w, z) == Some(x))
    }
}

/// `x * y = (x' + y')'`, defined iff `x' <= y`.
pub fn lea_tnorm(e: Lea<'_>) -> PartialOp {
    let l = e.lattice;
    PartialOp::from_fn(l.len(), |x, y| {
        if !l.leq(e.c(x), y) {
            return None;
        }
        e.plus.apply(e.c(x), e.c(y)).map(|s| e.c(s))
    })
}

/// `x -> y = x' + y`, defined iff `y <= x`.
pub fn lea_arrow(e: Lea<'_>) -> PartialOp {
    let l = e.lattice;
    PartialOp::from_fn(l.len(), |x, y| if l.leq(y, x) { e.plus.apply(e.c(x), y) } else { None })
}

/// The bundle carrying `lea_tnorm` and `lea_arrow`, claimed to be a PRL.
pub fn lea_prl(e: Lea<'_>, name: &str) -> StructureBundle {
    StructureBundle::new(name, e.lattice.clone())
        .with_op("otimes", lea_tnorm(e))
        .with_op("to", lea_arrow(e))
        .with_claim(ClassTag::Prl, &["otimes", "to"])
}

/// The Sasaki arrow `x' + (x /\ y)`.
pub fn sasaki_arrow(e: Lea<'_>) -> PartialOp {
    let l = e.lattice;
    PartialOp::from_fn(l.len(), |x, y| e.plus.apply(e.c(x), l.meet(x, y)))
}

/// `I_S`: `1` when `x <= y`; `a'` when `[0, x]` is a chain with atom `a`
/// and `x - (x /\ y) = a`; `0` otherwise.
pub fn is_implication(e: Lea<'_>) -> PartialOp {
    let l = e.lattice;
    PartialOp::from_fn(l.len(), |x, y| {
        if l.leq(x, y) {
            return Some(l.top());
        }
        if l.interval_is_chain(x) {
            if let [a] = l.atoms_below(x)[..] {
                if e.minus(x, l.meet(x, y)) == Some(a) {
                    return Some(e.c(a));
                }
            }
        }
        Some(l.bottom())
    })
}

// ---- partial fuzzy implication generators ------------------------------------

fn require_pfi_and_negation(l: &Lattice, pi: &PartialOp, n: &UnaryOp) -> Result<(), DeriveError> {
    if !checkers::passes(ClassTag::Pfi, l, Operands::one(pi)) {
        return Err(DeriveError::InputNotPfi);
    }
    if !checkers::passes(ClassTag::Negation, l, Operands::unary(n)) {
        return Err(DeriveError::InputNotNegation);
    }
    Ok(())
}

/// `PI_N(u, v) = PI(N(v), N(u))`.
pub fn pfi_reciprocal(l: &Lattice, pi: &PartialOp, n: &UnaryOp) -> Result<PartialOp, DeriveError> {
    require_pfi_and_negation(l, pi, n)?;
    Ok(reciprocal(pi, n))
}

fn reciprocal(pi: &PartialOp, n: &UnaryOp) -> PartialOp {
    PartialOp::from_fn(pi.size(), |u, v| pi.apply(n.apply(v), n.apply(u)))
}

/// `min{PI(x, y) \/ N(x), PI_N(x, y) \/ y}` where both cells are defined.
pub fn pfi_min_combine(l: &Lattice, pi: &PartialOp, n: &UnaryOp) -> Result<PartialOp, DeriveError> {
    require_pfi_and_negation(l, pi, n)?;
    let pin = reciprocal(pi, n);
    Ok(PartialOp::from_fn(l.len(), |x, y| {
        let p = pi.apply(x, y)?;
        let q = pin.apply(x, y)?;
        Some(l.meet(l.join(p, n.apply(x)), l.join(q, y)))
    }))
}

/// Splices two implications on a grid at `a`:
/// `1` for `u = 0`; `a * PI1(u, v/a)` for `v <= a`;
/// `a + (1 - a) * PI2(u, (v - a)/(1 - a))` for `v > a`.
///
/// Inner arguments and results must land on the grid.
pub fn pfi_vertical_splice(grid: Grid, pi1: &PartialOp, pi2: &PartialOp, a: Q) -> Result<PartialOp, DeriveError> {
    let zero = Q::from_integer(0);
    let one = Q::from_integer(1);
    if a <= zero || a >= one {
        return Err(DeriveError::BadSplicePoint);
    }
    grid.expect_on(a)?;
    let n = grid.len();
    let mut out = PartialOp::undefined(n);
    for u in 0..n {
        for v in 0..n {
            let (uq, vq) = (grid.value(u), grid.value(v));
            let cell = if uq == zero {
                Some(one)
            } else if vq <= a {
                let inner = grid.expect_on(vq / a)?;
                pi1.apply(u, inner).map(|r| a * grid.value(r))
            } else {
                let inner = grid.expect_on((vq - a) / (one - a))?;
                pi2.apply(u, inner).map(|r| a + (one - a) * grid.value(r))
            };
            if let Some(q) = cell {
                out.set(u, v, Some(grid.expect_on(q)?));
            }
        }
    }
    Ok(out)
}

// ---- dualization ---------------------------------------------------------------

/// Reverses the order of a zL-PRL `(+, -)` and reads it as a candidate
/// PcRL `(odot, leadsto)` with `odot = +` and `z leadsto y = y - z`.
///
/// The result is returned whatever its verdict; callers check it.
pub fn dualize_to_pcrl(b: &StructureBundle) -> Result<StructureBundle, DeriveError> {
    let claim = b.claim_of(ClassTag::Zlprl).ok_or(DeriveError::NotZlPrl)?;
    let ops = b.operands(claim).map_err(|_| DeriveError::NotZlPrl)?;
    if !checkers::passes(ClassTag::Zlprl, &b.lattice, ops) {
        return Err(DeriveError::NotZlPrl);
    }
    Ok(dualize_ops(&b.lattice, ops.bin(0), ops.bin(1), &format!("{}-dual", b.name)))
}

/// The construction behind [`dualize_to_pcrl`] without the input check.
pub fn dualize_ops(l: &Lattice, oplus: &PartialOp, ominus: &PartialOp, name: &str) -> StructureBundle {
    let leadsto = PartialOp::from_fn(l.len(), |z, y| ominus.apply(y, z));
    StructureBundle::new(name, l.dual())
        .with_op("odot", oplus.clone())
        .with_op("leadsto", leadsto)
        .with_claim(ClassTag::Pcrl, &["odot", "leadsto"])
}
