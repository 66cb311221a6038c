//! Partial binary operation tables and unary operation tables.

use serde::Serialize;
use thiserror::Error;

use crate::axiom::{scan, AxiomEntry};
use crate::lattice::{Elem, Lattice};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("table row {row} has {found} cells, expected {expected}")]
    Ragged {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("cell value {0} is out of range")]
    OutOfRange(Elem),
}

/// An `n x n` table whose cells are either a defined element or undefined.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialOp {
    n: usize,
    cells: Vec<Option<Elem>>,
}

impl PartialOp {
    pub fn undefined(n: usize) -> Self {
        PartialOp {
            n,
            cells: vec![None; n * n],
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(Elem, Elem) -> Option<Elem>) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                cells.push(f(x, y));
            }
        }
        let op = PartialOp { n, cells };
        debug_assert!(op.cells.iter().flatten().all(|&v| v < n));
        op
    }

    pub fn from_rows(rows: Vec<Vec<Option<Elem>>>) -> Result<Self, TableError> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(TableError::Ragged {
                    row,
                    found: r.len(),
                    expected: n,
                });
            }
            for v in r {
                if let Some(e) = v {
                    if e >= n {
                        return Err(TableError::OutOfRange(e));
                    }
                }
                cells.push(v);
            }
        }
        Ok(PartialOp { n, cells })
    }

    /// Compact notation used by tests and the builtin registry: rows
    /// separated by `/`, cells by whitespace, `-` for undefined.
    pub fn parse_compact(s: &str) -> Result<Self, TableError> {
        let rows = s
            .split('/')
            .map(|row| {
                row.split_whitespace()
                    .map(|c| if c == "-" { None } else { Some(c.parse::<Elem>().expect("numeric cell")) })
                    .collect()
            })
            .collect();
        Self::from_rows(rows)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// The cell `(x, y)` verbatim.
    pub fn apply(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.cells[x * self.n + y]
    }

    pub fn is_defined(&self, x: Elem, y: Elem) -> bool {
        self.apply(x, y).is_some()
    }

    pub fn set(&mut self, x: Elem, y: Elem, v: Option<Elem>) {
        self.cells[x * self.n + y] = v;
    }

    pub fn is_total(&self) -> bool {
        self.cells.iter().all(Option::is_some)
    }

    pub fn defined_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> &[Option<Elem>] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<Option<Elem>>> {
        self.cells.chunks(self.n).map(<[_]>::to_vec).collect()
    }

    /// `(x, y) -> op(y, x)`.
    pub fn transpose(&self) -> Self {
        PartialOp::from_fn(self.n, |x, y| self.apply(y, x))
    }

    /// Renames elements through the permutation `p` (element `x` becomes `p[x]`).
    pub fn permute(&self, p: &[Elem]) -> Self {
        let mut out = PartialOp::undefined(self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                out.set(p[x], p[y], self.apply(x, y).map(|v| p[v]));
            }
        }
        out
    }

    /// Restriction to the elements of `sub` (listed in their new index
    /// order). Cells whose value leaves `sub` become undefined and are
    /// reported in `dropped` as original-index pairs.
    pub fn restrict(&self, sub: &[Elem]) -> Restriction {
        let m = sub.len();
        let mut op = PartialOp::undefined(m);
        let mut dropped = Vec::new();
        for (i, &x) in sub.iter().enumerate() {
            for (j, &y) in sub.iter().enumerate() {
                if let Some(v) = self.apply(x, y) {
                    match sub.iter().position(|&s| s == v) {
                        Some(k) => op.set(i, j, Some(k)),
                        None => dropped.push((x, y)),
                    }
                }
            }
        }
        Restriction { op, dropped }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub op: PartialOp,
    pub dropped: Vec<(Elem, Elem)>,
}

/// A total unary operation such as a negation or an effect-algebra complement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct UnaryOp {
    image: Vec<Elem>,
}

impl UnaryOp {
    pub fn new(image: Vec<Elem>) -> Result<Self, TableError> {
        let n = image.len();
        if let Some(&bad) = image.iter().find(|&&v| v >= n) {
            return Err(TableError::OutOfRange(bad));
        }
        Ok(UnaryOp { image })
    }

    pub fn from_fn(n: usize, f: impl Fn(Elem) -> Elem) -> Self {
        UnaryOp {
            image: (0..n).map(f).collect(),
        }
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x]
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[Elem] {
        &self.image
    }
}

/// Definedness of `(x, y)` forces definedness of `(y, x)` with the same value.
pub fn is_commutative_partial(op: &PartialOp, axiom: &'static str) -> AxiomEntry {
    scan(op.size(), 2, axiom, |t| commutes_at(op, t[0], t[1]))
}

pub(crate) fn commutes_at(op: &PartialOp, x: Elem, y: Elem) -> bool {
    match op.apply(x, y) {
        None => true,
        Some(v) => op.apply(y, x) == Some(v),
    }
}

/// If `y*z` and `x*(y*z)` are defined then `x*y` and `(x*y)*z` are defined
/// and equal to it.
pub fn is_associative_directional(op: &PartialOp, axiom: &'static str) -> AxiomEntry {
    scan(op.size(), 3, axiom, |t| assoc_directional_at(op, t[0], t[1], t[2]))
}

pub(crate) fn assoc_directional_at(op: &PartialOp, x: Elem, y: Elem, z: Elem) -> bool {
    let Some(yz) = op.apply(y, z) else { return true };
    let Some(right) = op.apply(x, yz) else { return true };
    match op.apply(x, y).and_then(|xy| op.apply(xy, z)) {
        Some(left) => left == right,
        None => false,
    }
}

/// `x*y` and `(x*y)*z` are defined iff `y*z` and `x*(y*z)` are, and then
/// the two values agree.
pub fn is_associative_symmetric(op: &PartialOp, axiom: &'static str) -> AxiomEntry {
    scan(op.size(), 3, axiom, |t| assoc_symmetric_at(op, t[0], t[1], t[2]))
}

pub(crate) fn assoc_symmetric_at(op: &PartialOp, x: Elem, y: Elem, z: Elem) -> bool {
    let left = op.apply(x, y).and_then(|xy| op.apply(xy, z));
    let right = op.apply(y, z).and_then(|yz| op.apply(x, yz));
    left == right
}

/// `x <= y`, `h <= k` with both cells defined gives `x*h <= y*k`.
pub fn is_monotone_partial(l: &Lattice, op: &PartialOp, axiom: &'static str) -> AxiomEntry {
    scan(op.size(), 4, axiom, |t| monotone_at(l, op, t[0], t[1], t[2], t[3]))
}

pub(crate) fn monotone_at(l: &Lattice, op: &PartialOp, x: Elem, y: Elem, h: Elem, k: Elem) -> bool {
    if !(l.leq(x, y) && l.leq(h, k)) {
        return true;
    }
    match (op.apply(x, h), op.apply(y, k)) {
        (Some(a), Some(b)) => l.leq(a, b),
        _ => true,
    }
}

pub fn is_total(op: &PartialOp) -> bool {
    op.is_total()
}
