//! Finite bounded lattices stored as index-based tables.
//!
//! Elements are the integers `0..n`; each carries a display label. The
//! order relation, meet and join are computed once when the lattice is
//! built and never change afterwards.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Index of an element inside a lattice of size `n`.
pub type Elem = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("order is not antisymmetric: {0} <= {1} and {1} <= {0}")]
    NotAPoset(String, String),
    #[error("order is not reflexive and transitive")]
    NotTransitive,
    #[error("missing bound: {0}")]
    MissingBound(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("a lattice needs at least one element")]
    Empty,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    labels: Vec<String>,
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        f.debug_struct("Lattice")
            .field("labels", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

impl Lattice {
    /// Builds a lattice from labels and `(lower, upper)` label pairs. The
    /// reflexive-transitive closure of the pairs is taken.
    pub fn build<S: AsRef<str>>(labels: &[S], pairs: &[(S, S)]) -> Result<Self, LatticeError> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let lookup = |l: &str| {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| LatticeError::UnknownLabel(l.to_string()))
        };
        let mut idx = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            idx.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Self::from_pairs(labels, &idx)
    }

    pub fn from_pairs(labels: Vec<String>, pairs: &[(Elem, Elem)]) -> Result<Self, LatticeError> {
        let n = labels.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in pairs {
            leq[a * n + b] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Self::from_leq(labels, leq)
    }

    /// Builds from a full `n*n` order matrix, which must already be
    /// reflexive and transitive (this is checked).
    pub fn from_leq(labels: Vec<String>, leq: Vec<bool>) -> Result<Self, LatticeError> {
        let n = labels.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(LatticeError::DuplicateLabel(l.clone()));
            }
        }
        assert_eq!(leq.len(), n * n, "order matrix must be n*n");
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(LatticeError::NotAPoset(labels[i].clone(), labels[j].clone()));
                }
            }
        }
        let le = |a: Elem, b: Elem| leq[a * n + b];
        let closed = (0..n).all(|a| {
            le(a, a) && (0..n).all(|b| !le(a, b) || (0..n).all(|c| !le(b, c) || le(a, c)))
        });
        if !closed {
            return Err(LatticeError::NotTransitive);
        }
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| le(b, x)))
            .ok_or_else(|| LatticeError::MissingBound("no least element".into()))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| le(x, t)))
            .ok_or_else(|| LatticeError::MissingBound("no greatest element".into()))?;

        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let lower: Vec<Elem> = (0..n).filter(|&z| le(z, x) && le(z, y)).collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|&g| lower.iter().all(|&z| le(z, g)))
                    .ok_or_else(|| {
                        LatticeError::MissingBound(format!(
                            "{} and {} have no meet",
                            labels[x], labels[y]
                        ))
                    })?;
                let upper: Vec<Elem> = (0..n).filter(|&z| le(x, z) && le(y, z)).collect();
                let lub = upper
                    .iter()
                    .copied()
                    .find(|&g| upper.iter().all(|&z| le(g, z)))
                    .ok_or_else(|| {
                        LatticeError::MissingBound(format!(
                            "{} and {} have no join",
                            labels[x], labels[y]
                        ))
                    })?;
                meet[x * n + y] = glb;
                meet[y * n + x] = glb;
                join[x * n + y] = lub;
                join[y * n + x] = lub;
            }
        }
        Ok(Lattice {
            labels,
            leq,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// The chain `0 < 1 < ... < n-1` labelled by its indices.
    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let pairs: Vec<(Elem, Elem)> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_pairs(labels, &pairs).expect("chains are lattices")
    }

    /// A chain with the given labels, listed from bottom to top.
    pub fn labelled_chain<S: AsRef<str>>(labels: &[S]) -> Self {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let pairs: Vec<(Elem, Elem)> = (1..labels.len()).map(|i| (i - 1, i)).collect();
        Self::from_pairs(labels, &pairs).expect("chains are lattices")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.len() + y]
    }

    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: Elem, y: Elem) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.len() + y]
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.len() + y]
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    /// The order as a flat `n*n` matrix.
    pub fn order_matrix(&self) -> &[bool] {
        &self.leq
    }

    /// Join of a finite set; `None` for the empty set.
    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Option<Elem> {
        xs.into_iter().fold(None, |acc, x| match acc {
            None => Some(x),
            Some(a) => Some(self.join(a, x)),
        })
    }

    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Option<Elem> {
        xs.into_iter().fold(None, |acc, x| match acc {
            None => Some(x),
            Some(a) => Some(self.meet(a, x)),
        })
    }

    /// Covering pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn down_set(&self, x: Elem) -> Vec<Elem> {
        self.elements().filter(|&z| self.leq(z, x)).collect()
    }

    pub fn up_set(&self, x: Elem) -> Vec<Elem> {
        self.elements().filter(|&z| self.leq(x, z)).collect()
    }

    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.comparable(x, y)))
    }

    /// True iff the interval `[bottom, x]` is totally ordered.
    pub fn interval_is_chain(&self, x: Elem) -> bool {
        let down = self.down_set(x);
        down.iter()
            .all(|&a| down.iter().all(|&b| self.comparable(a, b)))
    }

    /// Atoms of the lattice lying below `x`.
    pub fn atoms_below(&self, x: Elem) -> Vec<Elem> {
        let bot = self.bottom;
        self.elements()
            .filter(|&a| self.lt(bot, a) && self.leq(a, x))
            .filter(|&a| !self.elements().any(|b| self.lt(bot, b) && self.lt(b, a)))
            .collect()
    }

    /// The order dual: same labels, reversed order.
    pub fn dual(&self) -> Self {
        let n = self.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.leq[j * n + i];
            }
        }
        Lattice {
            labels: self.labels.clone(),
            leq,
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Same order with the labels replaced.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Self, LatticeError> {
        assert_eq!(labels.len(), self.len());
        Self::from_leq(labels, self.leq.clone())
    }

    /// Automorphisms of the order, as permutations `p` with
    /// `x <= y` iff `p[x] <= p[y]`. Brute force; intended for n <= 8.
    pub fn automorphisms(&self) -> Vec<Vec<Elem>> {
        let n = self.len();
        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_automorphism(0, &mut perm, &mut used, &mut out);
        out
    }

    fn extend_automorphism(
        &self,
        i: usize,
        perm: &mut Vec<Elem>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<Elem>>,
    ) {
        let n = self.len();
        if i == n {
            out.push(perm.clone());
            return;
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            let ok = (0..i).all(|j| {
                self.leq(j, i) == self.leq(perm[j], c) && self.leq(i, j) == self.leq(c, perm[j])
            });
            if ok {
                perm[i] = c;
                used[c] = true;
                self.extend_automorphism(i + 1, perm, used, out);
                used[c] = false;
                perm[i] = usize::MAX;
            }
        }
    }
}

/// Every bounded lattice order on `n` labelled points, in a deterministic
/// order. A bottom and a top label are chosen, the remaining points get an
/// arbitrary partial order, and the result is kept when meets and joins
/// exist.
pub fn all_lattice_orders(n: usize) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    match n {
        0 => return out,
        1 => return vec![vec![true]],
        _ => {}
    }
    let m = n - 2;
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| ((i + 1)..m).map(move |j| (i, j)))
        .collect();
    let mut middle_orders = Vec::new();
    let mut rel = vec![false; m * m];
    for i in 0..m {
        rel[i * m + i] = true;
    }
    enumerate_posets(m, &pairs, 0, &mut rel, &mut |r| middle_orders.push(r.to_vec()));

    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    for bot in 0..n {
        for top in 0..n {
            if top == bot {
                continue;
            }
            let middle: Vec<usize> = (0..n).filter(|&x| x != bot && x != top).collect();
            for mo in &middle_orders {
                let mut leq = vec![false; n * n];
                for x in 0..n {
                    leq[bot * n + x] = true;
                    leq[x * n + top] = true;
                    leq[x * n + x] = true;
                }
                for (a, &x) in middle.iter().enumerate() {
                    for (b, &y) in middle.iter().enumerate() {
                        if mo[a * m + b] {
                            leq[x * n + y] = true;
                        }
                    }
                }
                if Lattice::from_leq(labels.clone(), leq.clone()).is_ok() {
                    out.push(leq);
                }
            }
        }
    }
    out
}

fn enumerate_posets(
    n: usize,
    pairs: &[(usize, usize)],
    k: usize,
    rel: &mut Vec<bool>,
    emit: &mut dyn FnMut(&[bool]),
) {
    if k == pairs.len() {
        if is_transitive(n, rel) {
            emit(rel);
        }
        return;
    }
    let (i, j) = pairs[k];
    // 0: incomparable, 1: i < j, 2: j < i
    for choice in 0..3 {
        match choice {
            1 => rel[i * n + j] = true,
            2 => rel[j * n + i] = true,
            _ => {}
        }
        if partial_consistent(n, rel, pairs, k) {
            enumerate_posets(n, pairs, k + 1, rel, emit);
        }
        rel[i * n + j] = false;
        rel[j * n + i] = false;
    }
}

/// Transitivity restricted to the pairs decided so far (indices `0..=k`).
fn partial_consistent(n: usize, rel: &[bool], pairs: &[(usize, usize)], k: usize) -> bool {
    let decided = |a: usize, b: usize| {
        if a == b {
            return true;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        pairs[..=k].contains(&(lo, hi))
    };
    for a in 0..n {
        for b in 0..n {
            if a == b || !rel[a * n + b] {
                continue;
            }
            for c in 0..n {
                if c == b || c == a || !rel[b * n + c] {
                    continue;
                }
                if decided(a, c) && !rel[a * n + c] {
                    return false;
                }
            }
        }
    }
    true
}

fn is_transitive(n: usize, rel: &[bool]) -> bool {
    for a in 0..n {
        for b in 0..n {
            if !rel[a * n + b] {
                continue;
            }
            for c in 0..n {
                if rel[b * n + c] && !rel[a * n + c] {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Lattice {
        Lattice::build(
            &["0", "1", "2", "3"],
            &[("0", "1"), ("0", "2"), ("1", "3"), ("2", "3")],
        )
        .unwrap()
    }

    #[test]
    fn two_chain() {
        let l = Lattice::build(&["0", "1"], &[("0", "1")]).unwrap();
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 1);
        assert!(l.is_chain());
    }

    #[test]
    fn diamond_meet_join() {
        let l = diamond();
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(1, 2), 3);
        assert!(!l.interval_is_chain(l.top()));
        assert_eq!(l.atoms_below(3), vec![1, 2]);
    }

    #[test]
    fn missing_top() {
        let err = Lattice::build(&["0", "1", "2"], &[("0", "1"), ("0", "2")]).unwrap_err();
        assert!(matches!(err, LatticeError::MissingBound(_)));
    }

    #[test]
    fn cycle_is_not_a_poset() {
        let err = Lattice::build(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, LatticeError::NotAPoset(_, _)));
    }

    #[test]
    fn unknown_label() {
        let err = Lattice::build(&["a"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, LatticeError::UnknownLabel("z".into()));
    }

    #[test]
    fn chain_atoms_and_intervals() {
        let l = Lattice::labelled_chain(&["0", "a", "1"]);
        assert_eq!(l.atoms_below(2), vec![1]);
        assert!(l.elements().all(|x| l.interval_is_chain(x)));
        let two = Lattice::chain(2);
        assert_eq!(two.atoms_below(1), vec![1]);
    }

    #[test]
    fn dual_is_involution() {
        let l = diamond();
        assert_eq!(l.dual().dual(), l);
        let d = Lattice::chain(2).dual();
        assert_eq!(d.bottom(), 1);
        assert_eq!(d.top(), 0);
    }

    #[test]
    fn single_element() {
        let l = Lattice::chain(1);
        assert_eq!(l.bottom(), l.top());
        assert_eq!(l.covers(), vec![]);
    }

    #[test]
    fn diamond_has_two_automorphisms() {
        assert_eq!(diamond().automorphisms().len(), 2);
        assert_eq!(Lattice::chain(4).automorphisms().len(), 1);
    }

    #[test]
    fn labelled_lattice_counts() {
        // n=1..4 bounded lattices on labelled points: 1, 2, 6, 36
        // (one chain shape for n<=3 plus the diamond and 4-chain for n=4:
        // 4!/1 chains = 24 plus 4!/2 diamonds = 12).
        let counts: Vec<usize> = (1..=4).map(|n| all_lattice_orders(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 36]);
    }

    #[test]
    fn meet_is_greatest_lower_bound() {
        for leq in all_lattice_orders(5) {
            let labels = (0..5).map(|i| i.to_string()).collect();
            let l = Lattice::from_leq(labels, leq).unwrap();
            for x in l.elements() {
                for y in l.elements() {
                    let m = l.meet(x, y);
                    assert!(l.leq(m, x) && l.leq(m, y));
                    for z in l.elements() {
                        if l.leq(z, x) && l.leq(z, y) {
                            assert!(l.leq(z, m));
                        }
                        if l.leq(x, z) && l.leq(y, z) {
                            assert!(l.leq(l.join(x, y), z));
                        }
                    }
                }
            }
        }
    }
}
