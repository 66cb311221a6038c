//! The builtin registry: the worked examples as frozen bundles, small
//! parametric families, a few lattice effect algebras, and rational-grid
//! versions of the unit-interval examples.
//!
//! The figure orders are not recoverable from the text of the examples.
//! Each `figN` below is the order fixed by the order search in
//! [`crate::infer`]; the choice among tied candidates is documented next to
//! each one and re-checked by the test suite.

use thiserror::Error;

use crate::bundle::{ClassTag, StructureBundle};
use crate::grid::{GridError, GridSpec, Q};
use crate::lattice::{Elem, Lattice};
use crate::partial::{PartialOp, UnaryOp};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("bad parameters for `{id}`: {reason}")]
    BadParams { id: String, reason: String },
    #[error(transparent)]
    GridNotClosed(#[from] GridError),
}

fn bad(id: &str, reason: impl Into<String>) -> FamilyError {
    FamilyError::BadParams {
        id: id.to_string(),
        reason: reason.into(),
    }
}

fn numbered(n: usize, covers: &[(Elem, Elem)]) -> Lattice {
    let labels = (0..n).map(|i| i.to_string()).collect();
    Lattice::from_pairs(labels, covers).expect("frozen order is a lattice")
}

/// `fig1`: the pentagon `0 < 1 < 2 < 4`, `0 < 3 < 4`. The only order with
/// zero failures for `ex2.11` and `ex5.10` and at most one failing axiom
/// for `ex4.12`, `ex4.21` and `ex5.16`. It also gives the expected filter
/// lists of `ex4.21`.
pub fn fig1() -> Lattice {
    numbered(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
}

/// `fig2`: `M3` with atoms 1, 2, 3. Nineteen orders fit `ex2.12` and
/// `ex5.11`; this is the first in enumeration order.
pub fn fig2() -> Lattice {
    numbered(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
}

/// `fig3`: `0 < 3 < 1, 2 < 4`. The unique order under which the
/// supremum construction turns the `odot` table of `ex3.4` into its `to`.
pub fn fig3() -> Lattice {
    numbered(5, &[(0, 3), (3, 1), (3, 2), (1, 4), (2, 4)])
}

/// `fig4`: the diamond `0 < 1, 2 < 3`; forced by `ex4.11`.
pub fn fig4() -> Lattice {
    numbered(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
}

/// `fig5`: `0 < 1, 2, 3`, `3 < 4`, `1, 2, 4 < 5`. First of the orders
/// passing `ex4.22` whose coatoms are 1, 2 and 4, which its expected
/// filter list needs.
pub fn fig5() -> Lattice {
    numbered(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (1, 5), (2, 5), (4, 5)])
}

/// `fig6`: `0 < 1 < 2 < 5`, `0 < 3 < 5`, `0 < 4 < 5`. First of the
/// least-failing orders for `ex4.23` whose strong filters are exactly
/// `{5}` and `{2,5}`.
pub fn fig6() -> Lattice {
    numbered(6, &[(0, 1), (1, 2), (2, 5), (0, 3), (3, 5), (0, 4), (4, 5)])
}

fn blocks(labels: &[&str], covers: &[(Elem, Elem)]) -> Lattice {
    let labels = labels.iter().map(|s| s.to_string()).collect();
    Lattice::from_pairs(labels, covers).expect("frozen order is a lattice")
}

/// `fig7`: `[0] < [3]`.
pub fn fig7() -> Lattice {
    blocks(&["[0]", "[3]"], &[(0, 1)])
}

/// `fig8`: the chain `[0] < [3] < [4]`.
pub fn fig8() -> Lattice {
    blocks(&["[0]", "[3]", "[4]"], &[(0, 1), (1, 2)])
}

/// `fig9`: `[0] < [3], [4] < [5]`.
pub fn fig9() -> Lattice {
    blocks(&["[0]", "[3]", "[4]", "[5]"], &[(0, 1), (0, 2), (1, 3), (2, 3)])
}

fn t(s: &str) -> PartialOp {
    PartialOp::parse_compact(s).expect("builtin table is well formed")
}

/// Parses a table written with block names such as `[0]`.
fn tb(s: &str, names: &[&str]) -> PartialOp {
    let mut s = s.to_string();
    for (i, name) in names.iter().enumerate() {
        s = s.replace(name, &i.to_string());
    }
    t(&s)
}

fn pair(name: &str, l: Lattice, ot: &str, to: &str, class: ClassTag) -> StructureBundle {
    StructureBundle::new(name, l)
        .with_op("otimes", t(ot))
        .with_op("to", t(to))
        .with_claim(class, &["otimes", "to"])
}

fn single(name: &str, l: Lattice, op: &str, opname: &str, class: ClassTag) -> StructureBundle {
    StructureBundle::new(name, l)
        .with_op(opname, t(op))
        .with_claim(class, &[opname])
}

fn co_pair(name: &str, l: Lattice, odot: &str, leadsto: &str) -> StructureBundle {
    StructureBundle::new(name, l)
        .with_op("odot", t(odot))
        .with_op("leadsto", t(leadsto))
        .with_claim(ClassTag::Pcrl, &["odot", "leadsto"])
}

/// Ids of the non-parametric builtins, in a fixed order.
pub const FIXED_IDS: &[&str] = &[
    "ex2.11",
    "ex2.12",
    "ex3.4",
    "ex4.11",
    "ex4.12",
    "ex4.20",
    "ex4.21",
    "ex4.22",
    "ex4.23",
    "ex5.10",
    "ex5.11",
    "ex5.15",
    "ex5.16",
    "ex6.10",
    "ex6.22",
    "ex6.23",
    "ex6.24",
    "intro-conj-unary",
    "intro-conj-binary",
    "lea:boolean2",
    "lea:chain3",
    "lea:chain4",
    "lea:diamond",
    "lea:mo2",
    "lea:chain3x2",
    "quasires:chain3",
];

/// The worked examples: bundles whose claims are given with the tables,
/// not constructed here.
pub const EXAMPLE_IDS: &[&str] = &[
    "ex2.11", "ex2.12", "ex3.4", "ex4.11", "ex4.12", "ex4.20", "ex4.21", "ex4.22", "ex4.23",
    "ex5.10", "ex5.11", "ex5.15", "ex5.16", "ex6.10", "ex6.22", "ex6.23", "ex6.24",
];

/// Parametric families, spelled `family:param[:param]`.
pub const PARAMETRIC: &[&str] = &[
    "chain:N",
    "goedel:N",
    "lukasiewicz:N",
    "coresiduated:N",
    "zlprl:N",
    "grid:ex2.6:D",
    "grid:ex2.7:D",
    "grid:ex2.8:D",
    "grid:ex2.9:D",
    "grid:ex2.10:D:ALPHA",
    "grid:ex5.5:D",
    "grid:ex5.6:D",
    "grid:ex5.7:D",
    "grid:ex5.8:D",
    "grid:ex5.9:D:ALPHA",
    "grid:ex6.5:D",
    "grid:ex6.6:D",
    "grid:ex6.7:D:ALPHA",
];

/// Resolves a fixed id or a parametric spelling such as `chain:3` or
/// `grid:ex2.10:8:1/2`.
pub fn builtin(id: &str) -> Result<StructureBundle, FamilyError> {
    if let Some(b) = fixed(id) {
        return Ok(b);
    }
    let parts: Vec<&str> = id.split(':').collect();
    match parts.as_slice() {
        [fam @ ("chain" | "goedel" | "lukasiewicz" | "coresiduated" | "zlprl"), n] => {
            let n: usize = n.parse().map_err(|_| bad(id, "size must be a positive integer"))?;
            if n == 0 {
                return Err(bad(id, "size must be a positive integer"));
            }
            Ok(match *fam {
                "chain" => chain(n),
                "goedel" => goedel(n),
                "lukasiewicz" => lukasiewicz(n),
                "zlprl" => zl_prl(n),
                _ => coresiduated(n),
            })
        }
        ["grid", ex, rest @ ..] if !rest.is_empty() && rest.len() <= 2 => {
            let d: u32 = rest[0].parse().map_err(|_| bad(id, "denominator must be a positive integer"))?;
            let mut spec = GridSpec::new(d)?;
            if let Some(a) = rest.get(1) {
                let alpha: Q = a.parse().map_err(|_| bad(id, "alpha must be a fraction like 1/2"))?;
                spec = spec.with_alpha(alpha)?;
            }
            let ex = format!("ex{}", ex.trim_start_matches("ex"));
            if matches!(ex.as_str(), "ex6.5" | "ex6.6" | "ex6.7") {
                builtin_grid_pair(&ex, &spec)
            } else {
                builtin_grid(&ex, &spec)
            }
        }
        _ => Err(FamilyError::UnknownBuiltin(id.to_string())),
    }
}

/// The frozen figure orders by name, `fig1` to `fig9`.
pub fn figure(id: &str) -> Option<Lattice> {
    Some(match id {
        "fig1" => fig1(),
        "fig2" => fig2(),
        "fig3" => fig3(),
        "fig4" => fig4(),
        "fig5" => fig5(),
        "fig6" => fig6(),
        "fig7" => fig7(),
        "fig8" => fig8(),
        "fig9" => fig9(),
        _ => return None,
    })
}

/// Every fixed builtin, in registry order.
pub fn all_fixed() -> Vec<StructureBundle> {
    FIXED_IDS.iter().map(|id| fixed(id).expect("registered")).collect()
}

/// Spellings used when the whole registry is scanned: every parametric
/// family at a small size, grids at step `1/4` and `alpha = 1/2`.
pub const SAMPLE_PARAMETRIC: &[&str] = &[
    "chain:3",
    "goedel:4",
    "lukasiewicz:4",
    "coresiduated:3",
    "zlprl:3",
    "grid:ex2.6:4",
    "grid:ex2.7:4",
    "grid:ex2.8:4",
    "grid:ex2.9:4",
    "grid:ex2.10:4:1/2",
    "grid:ex5.5:4",
    "grid:ex5.6:4",
    "grid:ex5.7:4",
    "grid:ex5.8:4",
    "grid:ex5.9:4:1/2",
    "grid:ex6.5:4",
    "grid:ex6.6:4",
    "grid:ex6.7:4:1/2",
];

/// The fixed builtins followed by [`SAMPLE_PARAMETRIC`].
pub fn registry() -> Vec<StructureBundle> {
    let mut out = all_fixed();
    out.extend(SAMPLE_PARAMETRIC.iter().map(|id| builtin(id).expect("sample spellings resolve")));
    out
}

fn fixed(id: &str) -> Option<StructureBundle> {
    use ClassTag::*;
    let b = match id {
        "ex2.11" => single(id, fig1(), "- - - - 0 / - - 0 - 1 / - 0 1 - 2 / - - - 0 3 / 0 1 2 3 4", "odot", Ptnorm),
        "ex2.12" => single(id, fig2(), "- - - - 0 / - - - 0 1 / - - 0 - 2 / - 0 - - 3 / 0 1 2 3 4", "odot", Ptnorm),
        "ex3.4" => StructureBundle::new(id, fig3())
            .with_op("odot", t("- - - - 0 / - 3 3 2 1 / - 3 3 2 2 / - 2 2 3 3 / 0 1 2 3 4"))
            .with_op("to", t("4 4 4 4 4 / - 4 4 4 4 / - 4 4 4 4 / - 4 4 4 4 / 0 1 2 3 4"))
            .with_claim(Ptnorm, &["odot"]),
        "ex4.11" => pair(id, fig4(), "- - 0 0 / - 1 - 1 / 0 - 2 2 / 0 1 2 3", "3 - - - / 2 3 - - / 0 - - - / 0 1 - -", Prl),
        "ex4.12" => pair(
            id,
            fig1(),
            "- - - - 0 / - - - 0 1 / - - 2 - 2 / - 0 - 3 3 / 0 1 2 3 4",
            "4 4 4 4 4 / 3 4 4 - 4 / 3 - 4 - 4 / 2 2 - 4 4 / 0 1 2 3 4",
            Prl,
        ),
        "ex4.20" => pair(id, fig4(), "- - - 0 / - - 0 1 / - 0 - 2 / 0 1 2 3", "3 - - 3 / - 3 - 3 / - 1 3 3 / 0 1 2 3", Wprl),
        "ex4.21" => pair(
            id,
            fig1(),
            "- - - - 0 / - - - 0 1 / - - 2 0 2 / - 0 0 3 3 / 0 1 2 3 4",
            "4 4 4 4 4 / 3 4 4 - 4 / 3 - 4 - 4 / - - - 4 4 / 0 1 2 3 4",
            Wprl,
        ),
        "ex4.22" => pair(
            id,
            fig5(),
            "0 - - 0 0 0 / - - - - - 1 / - - - - - 2 / 0 - - 0 0 3 / 0 - - 0 4 4 / 0 1 2 3 4 5",
            "5 5 5 5 5 5 / - 5 - - - 5 / - - 5 - - 5 / 4 - - 5 5 5 / 3 - - 3 5 5 / 0 1 2 3 4 5",
            Wprl,
        ),
        "ex4.23" => pair(
            id,
            fig6(),
            "- - - - - 0 / - - 0 - - 1 / - 0 2 - - 2 / 0 - - 0 - 3 / 0 - - - 0 4 / 0 1 2 3 4 5",
            "5 5 5 5 5 5 / 2 5 - - - 5 / 1 1 5 - - 5 / 3 - - 5 - 5 / 4 - - - 5 5 / 0 1 2 3 4 5",
            Wprl,
        ),
        "ex5.10" => single(id, fig1(), "0 1 2 3 4 / 1 2 2 - - / 2 2 2 - - / 3 - - 3 - / 4 - - - -", "oplus", Ptconorm),
        "ex5.11" => single(id, fig2(), "0 1 2 3 4 / 1 1 - - - / 2 - 2 - - / 3 - - 3 - / 4 - - - -", "oplus", Ptconorm),
        "ex5.15" => co_pair(id, fig4(), "0 1 2 3 / 1 - - - / 2 - - - / 3 - - 3", "0 - - - / - 1 3 1 / - 3 2 2 / - - - 3"),
        "ex5.16" => co_pair(
            id,
            fig1(),
            "0 1 2 3 4 / 1 - - - - / 2 - - - - / 3 - - - - / 4 - - - -",
            "0 0 0 0 0 / - 1 - - - / - - 2 - 2 / - 2 2 3 0 / - - - - 4",
        ),
        "ex6.10" => pair(id, fig4(), "- - - 0 / - 1 0 1 / - 0 - 2 / 0 1 2 3", "3 3 - 3 / 2 3 - 3 / 1 - 3 3 / 0 1 2 3", Wprl),
        "ex6.22" => {
            let n = ["[0]", "[3]"];
            StructureBundle::new(id, fig7())
                .with_op("otimes", tb("- [0] / [0] [3]", &n))
                .with_op("to", tb("[3] - / - [3]", &n))
                .with_claim(Prl, &["otimes", "to"])
        }
        "ex6.23" => {
            let n = ["[0]", "[3]", "[4]"];
            StructureBundle::new(id, fig8())
                .with_op("otimes", tb("- - [0] / - [0] [3] / [0] [3] [4]", &n))
                .with_op("to", tb("- - - / - [4] - / [0] - [4]", &n))
                .with_claim(Prl, &["otimes", "to"])
        }
        "ex6.24" => {
            let n = ["[0]", "[3]", "[4]", "[5]"];
            StructureBundle::new(id, fig9())
                .with_op("otimes", tb("- - - [0] / - [0] - [3] / - - [0] [4] / [0] [3] [4] [5]", &n))
                .with_op("to", tb("[5] - - - / - [5] - - / - - [5] - / [0] - - [5]", &n))
                .with_claim(Prl, &["otimes", "to"])
        }
        "intro-conj-unary" => intro_unary(),
        "intro-conj-binary" => intro_binary(),
        "lea:boolean2" => lea_chain(id, 2),
        "lea:chain3" => lea_chain(id, 3),
        "lea:chain4" => lea_chain(id, 4),
        "lea:diamond" => lea_diamond(),
        "lea:mo2" => lea_mo2(),
        "lea:chain3x2" => lea_product(),
        "quasires:chain3" => quasires_chain3(),
        _ => return None,
    };
    Some(b)
}

// ---- parametric chains ---------------------------------------------------------

/// `n`-chain with total `min` claimed a partial t-norm.
pub fn chain(n: usize) -> StructureBundle {
    let l = Lattice::chain(n);
    let min = PartialOp::from_fn(n, |x, y| Some(x.min(y)));
    StructureBundle::new(format!("chain:{n}"), l)
        .with_op("odot", min)
        .with_claim(ClassTag::Ptnorm, &["odot"])
}

fn residuated_chain(name: String, n: usize, ot: PartialOp, to: PartialOp) -> StructureBundle {
    StructureBundle::new(name, Lattice::chain(n))
        .with_op("otimes", ot)
        .with_op("to", to)
        .with_claim(ClassTag::Rl, &["otimes", "to"])
        .with_claim(ClassTag::Prl, &["otimes", "to"])
        .with_claim(ClassTag::Sprl, &["otimes", "to"])
        .with_claim(ClassTag::Wprl, &["otimes", "to"])
}

/// `n`-chain with `min` and its residuum.
pub fn goedel(n: usize) -> StructureBundle {
    let top = n - 1;
    residuated_chain(
        format!("goedel:{n}"),
        n,
        PartialOp::from_fn(n, |x, y| Some(x.min(y))),
        PartialOp::from_fn(n, |x, y| Some(if x <= y { top } else { y })),
    )
}

/// `n`-chain `0 < 1 < ... < n-1` read as `{k/(n-1)}` with the
/// Lukasiewicz t-norm and implication.
pub fn lukasiewicz(n: usize) -> StructureBundle {
    let top = n - 1;
    residuated_chain(
        format!("lukasiewicz:{n}"),
        n,
        PartialOp::from_fn(n, |x, y| Some((x + y).saturating_sub(top))),
        PartialOp::from_fn(n, |x, y| Some((top - x + y).min(top))),
    )
}

/// `n`-chain with `max` and the dual Goedel co-implication
/// (`z - y = z` if `z > y`, else `0`), a co-residuated lattice and so
/// also a partial one.
pub fn coresiduated(n: usize) -> StructureBundle {
    let max = PartialOp::from_fn(n, |x, y| Some(x.max(y)));
    let minus = PartialOp::from_fn(n, |z, y| Some(if z > y { z } else { 0 }));
    StructureBundle::new(format!("coresiduated:{n}"), Lattice::chain(n))
        .with_op("oplus", max.clone())
        .with_op("ominus", minus)
        .with_claim(ClassTag::Corl, &["oplus", "ominus"])
        .with_claim(ClassTag::Pcrl, &["oplus", "ominus"])
        .with_claim(ClassTag::Ptconorm, &["oplus"])
}

/// `n`-chain with `max` (unit `0`) and its partial residuum
/// `x - z = z` for `x <= z`, undefined otherwise.
pub fn zl_prl(n: usize) -> StructureBundle {
    let max = PartialOp::from_fn(n, |x, y| Some(x.max(y)));
    let minus = PartialOp::from_fn(n, |x, z| (x <= z).then_some(z));
    StructureBundle::new(format!("zlprl:{n}"), Lattice::chain(n))
        .with_op("oplus", max)
        .with_op("ominus", minus)
        .with_claim(ClassTag::Zlprl, &["oplus", "ominus"])
}

// ---- the motivating tables ---------------------------------------------------

/// Carrier `0 < * < 1`. Cells whose value is `*` are undefined; `*` also
/// appears as an argument, as in the original tables. No class is claimed.
fn intro_carrier() -> Lattice {
    Lattice::labelled_chain(&["0", "*", "1"])
}

const STAR: Elem = 1;

fn intro_unary() -> StructureBundle {
    // rows alpha / *, columns beta / *: alpha c beta, alpha c * = 0, * c _ = *
    let op = PartialOp::from_fn(3, |a, b| match (a == STAR, b == STAR) {
        (false, false) => Some(a.min(b)),
        (false, true) => Some(0),
        (true, _) => None,
    });
    StructureBundle::new("intro-conj-unary", intro_carrier()).with_op("c", op)
}

fn intro_binary() -> StructureBundle {
    // 0 absorbs on either side; gamma /\ delta for defined values; * otherwise
    let op = PartialOp::from_fn(3, |a, b| {
        if a == 0 || b == 0 {
            Some(0)
        } else if a == STAR || b == STAR {
            None
        } else {
            Some(a.min(b))
        }
    });
    StructureBundle::new("intro-conj-binary", intro_carrier()).with_op("and", op)
}

// ---- lattice effect algebras ---------------------------------------------------

fn lea_bundle(name: &str, l: Lattice, plus: PartialOp, comp: Vec<Elem>) -> StructureBundle {
    StructureBundle::new(name, l)
        .with_op("plus", plus)
        .with_unary("comp", UnaryOp::new(comp).expect("complement in range"))
        .with_claim(ClassTag::Lea, &["plus", "comp"])
}

/// The `n`-chain `{k/(n-1)}` with truncated-free addition.
fn lea_chain(name: &str, n: usize) -> StructureBundle {
    let top = n - 1;
    let labels: Vec<String> = match n {
        2 => vec!["0".into(), "1".into()],
        3 => vec!["0".into(), "a".into(), "1".into()],
        _ => (0..n).map(|k| if k == 0 { "0".into() } else if k == top { "1".into() } else { format!("{k}/{top}") }).collect(),
    };
    let plus = PartialOp::from_fn(n, |x, y| if x + y <= top { Some(x + y) } else { None });
    lea_bundle(name, Lattice::labelled_chain(&labels), plus, (0..n).map(|x| top - x).collect())
}

/// The four-element Boolean algebra `0 < a, b < 1` with `a + b = 1`.
fn lea_diamond() -> StructureBundle {
    let l = Lattice::build(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]).expect("diamond");
    lea_bundle("lea:diamond", l, orthocomplemented_sum(4, &[(1, 2)]), vec![3, 2, 1, 0])
}

/// `MO2`: `0 < a, a', b, b' < 1` with `a + a' = b + b' = 1`.
fn lea_mo2() -> StructureBundle {
    let labels = ["0", "a", "a'", "b", "b'", "1"];
    let pairs: Vec<(&str, &str)> = ["a", "a'", "b", "b'"].iter().flat_map(|&m| [("0", m), (m, "1")]).collect();
    let l = Lattice::build(&labels, &pairs).expect("MO2");
    lea_bundle("lea:mo2", l, orthocomplemented_sum(6, &[(1, 2), (3, 4)]), vec![5, 2, 1, 4, 3, 0])
}

/// `0 + x = x`, and `p + q = 1` for each complementary pair of atoms.
fn orthocomplemented_sum(n: usize, pairs: &[(Elem, Elem)]) -> PartialOp {
    let top = n - 1;
    PartialOp::from_fn(n, |x, y| {
        if x == 0 {
            Some(y)
        } else if y == 0 {
            Some(x)
        } else if pairs.iter().any(|&(p, q)| (x, y) == (p, q) || (x, y) == (q, p)) {
            Some(top)
        } else {
            None
        }
    })
}

/// Product of the 3-chain and the 2-chain effect algebras; element `(i, j)`
/// has index `2i + j`.
fn lea_product() -> StructureBundle {
    let idx = |i: usize, j: usize| 2 * i + j;
    let labels: Vec<String> = (0..3).flat_map(|i| (0..2).map(move |j| format!("{i}{j}"))).collect();
    let mut covers = Vec::new();
    for i in 0..3 {
        for j in 0..2 {
            if i + 1 < 3 {
                covers.push((idx(i, j), idx(i + 1, j)));
            }
            if j + 1 < 2 {
                covers.push((idx(i, j), idx(i, j + 1)));
            }
        }
    }
    let l = Lattice::from_pairs(labels, &covers).expect("product of chains");
    let plus = PartialOp::from_fn(6, |x, y| {
        let (i, j) = (x / 2 + y / 2, x % 2 + y % 2);
        (i < 3 && j < 2).then(|| idx(i, j))
    });
    let comp = (0..6).map(|x| idx(2 - x / 2, 1 - x % 2)).collect();
    lea_bundle("lea:chain3x2", l, plus, comp)
}

/// The 3-chain effect algebra with `x * y = (x' + y')'` (defined iff
/// `x' <= y`) and the Sasaki arrow, claimed commutative quasiresiduated.
fn quasires_chain3() -> StructureBundle {
    let l = Lattice::labelled_chain(&["0", "a", "1"]);
    let comp = UnaryOp::new(vec![2, 1, 0]).expect("in range");
    let plus = PartialOp::from_fn(3, |x, y| if x + y <= 2 { Some(x + y) } else { None });
    let odot = PartialOp::from_fn(3, |x, y| {
        if comp.apply(x) <= y {
            plus.apply(comp.apply(x), comp.apply(y)).map(|s| comp.apply(s))
        } else {
            None
        }
    });
    let sasaki = PartialOp::from_fn(3, |x, y| plus.apply(comp.apply(x), x.min(y)));
    StructureBundle::new("quasires:chain3", l)
        .with_op("odot", odot)
        .with_op("to", sasaki)
        .with_unary("comp", comp)
        .with_claim(ClassTag::Quasires, &["odot", "to", "comp"])
        .with_claim(ClassTag::Ptnorm, &["odot"])
}

// ---- rational grids ----------------------------------------------------------

fn need_alpha(id: &str, spec: &GridSpec) -> Result<Q, FamilyError> {
    spec.alpha.ok_or_else(|| bad(id, "this family needs a parameter alpha"))
}

/// Grid restriction of one of the unit-interval partial t-norms
/// (`ex2.6` to `ex2.10`) or t-conorms (`ex5.5` to `ex5.9`).
pub fn builtin_grid(id: &str, spec: &GridSpec) -> Result<StructureBundle, FamilyError> {
    let g = spec.grid();
    let n = g.len();
    let top = n - 1;
    let half = Q::new(1, 2);
    let one = Q::from_integer(1);
    let v = |k: Elem| g.value(k);
    let min = |x: Elem, y: Elem| Some(x.min(y));
    let max = |x: Elem, y: Elem| Some(x.max(y));
    let (op, class): (PartialOp, ClassTag) = match id {
        "ex2.6" => (
            PartialOp::from_fn(n, |x, y| if v(x) <= half && v(y) <= half { None } else { min(x, y) }),
            ClassTag::Ptnorm,
        ),
        "ex2.7" => (
            PartialOp::from_fn(n, |x, y| {
                if (v(x) >= half && v(y) >= half) || x == top || y == top { min(x, y) } else { None }
            }),
            ClassTag::Ptnorm,
        ),
        "ex2.8" | "ex2.9" | "ex2.10" => {
            let bound = match id {
                "ex2.8" => one,
                "ex2.9" => half,
                _ => need_alpha(id, spec)?,
            };
            (
                PartialOp::from_fn(n, |x, y| {
                    if v(x) + v(y) <= bound || x == top || y == top { min(x, y) } else { None }
                }),
                ClassTag::Ptnorm,
            )
        }
        "ex5.5" => (
            PartialOp::from_fn(n, |x, y| if v(x) >= half && v(y) >= half { None } else { max(x, y) }),
            ClassTag::Ptconorm,
        ),
        "ex5.6" => (
            PartialOp::from_fn(n, |x, y| {
                if (v(x) <= half && v(y) <= half) || x == 0 || y == 0 { max(x, y) } else { None }
            }),
            ClassTag::Ptconorm,
        ),
        "ex5.7" | "ex5.8" | "ex5.9" => {
            let bound = match id {
                "ex5.7" => one,
                "ex5.8" => half,
                _ => need_alpha(id, spec)?,
            };
            (
                PartialOp::from_fn(n, |x, y| {
                    if v(x) + v(y) <= bound || x == 0 || y == 0 { max(x, y) } else { None }
                }),
                ClassTag::Ptconorm,
            )
        }
        _ => return Err(FamilyError::UnknownBuiltin(format!("grid:{id}"))),
    };
    let opname = if class == ClassTag::Ptnorm { "odot" } else { "oplus" };
    Ok(StructureBundle::new(grid_name(id, spec), g.lattice())
        .with_op(opname, op)
        .with_claim(class, &[opname]))
}

fn grid_name(id: &str, spec: &GridSpec) -> String {
    match spec.alpha {
        Some(a) => format!("grid:{id}:{}:{a}", spec.denominator),
        None => format!("grid:{id}:{}", spec.denominator),
    }
}

/// Grid restriction of the `(otimes, ->)` pairs `ex6.5` to `ex6.7`.
/// In `ex6.7` the value `alpha - a` is clamped at `0`.
pub fn builtin_grid_pair(id: &str, spec: &GridSpec) -> Result<StructureBundle, FamilyError> {
    let g = spec.grid();
    let n = g.len();
    let top = n - 1;
    let half = Q::new(1, 2);
    let zero = Q::from_integer(0);
    let one = Q::from_integer(1);
    let v = |k: Elem| g.value(k);
    let goedel_like = |shift: Option<Q>| -> Result<PartialOp, FamilyError> {
        let mut out = PartialOp::undefined(n);
        for a in 0..n {
            for b in 0..n {
                let cell = if a <= b {
                    top
                } else {
                    match shift {
                        None => b,
                        Some(s) => {
                            let d = (s - v(a)).max(zero);
                            g.expect_on(d)?.max(b)
                        }
                    }
                };
                out.set(a, b, Some(cell));
            }
        }
        Ok(out)
    };
    let sum_bounded = |bound: Q| {
        PartialOp::from_fn(n, move |x, y| {
            if v(x) + v(y) <= bound || x == top || y == top { Some(x.min(y)) } else { None }
        })
    };
    let (ot, to) = match id {
        "ex6.5" => (
            PartialOp::from_fn(n, |x, y| if v(x) <= half && v(y) <= half { None } else { Some(x.min(y)) }),
            goedel_like(None)?,
        ),
        "ex6.6" => (sum_bounded(one), goedel_like(Some(one))?),
        "ex6.7" => {
            let alpha = need_alpha(id, spec)?;
            (sum_bounded(alpha), goedel_like(Some(alpha))?)
        }
        _ => return Err(FamilyError::UnknownBuiltin(format!("grid:{id}"))),
    };
    Ok(StructureBundle::new(grid_name(id, spec), g.lattice())
        .with_op("otimes", ot)
        .with_op("to", to)
        .with_claim(ClassTag::Prl, &["otimes", "to"]))
}
