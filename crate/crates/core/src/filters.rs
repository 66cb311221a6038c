//! Filters and strong filters of a partial residuated lattice, the relation
//! `x ~F y iff x -> y in F and y -> x in F`, congruences and quotients.

use serde::Serialize;
use thiserror::Error;

use crate::axiom::{scan, AxiomEntry};
use crate::bundle::{ClassTag, StructureBundle};
use crate::checkers;
use crate::lattice::{Elem, Lattice, LatticeError};
use crate::partial::PartialOp;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FilterError {
    #[error("bundle has no {0} claim with resolvable operations")]
    NoPair(ClassTag),
    #[error("the pair is not a {0}")]
    ClassCheckFailed(ClassTag),
    #[error("set is not a filter")]
    NotAFilter,
    #[error("relation is not an equivalence: {0:?}")]
    NotEquivalence(AxiomEntry),
    #[error("partition is not a congruence")]
    NotACongruence,
    #[error("representative-wise quotient order is not a bounded lattice: {0}")]
    QuotientOrderNotLattice(LatticeError),
}

/// Which class the pair must belong to before filters are considered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Base {
    #[default]
    Wprl,
    Prl,
}

/// A residuated pair `(otimes, to)` over a lattice, validated once.
#[derive(Clone, Copy, Debug)]
pub struct Pair<'a> {
    pub lattice: &'a Lattice,
    pub otimes: &'a PartialOp,
    pub arrow: &'a PartialOp,
}

impl<'a> Pair<'a> {
    /// Resolves the bundle's wPRL claim (or PRL claim for [`Base::Prl`]) and
    /// checks it.
    pub fn from_bundle(b: &'a StructureBundle, base: Base) -> Result<Self, FilterError> {
        let pair = Self::from_bundle_unchecked(b)?;
        let class = match base {
            Base::Wprl => ClassTag::Wprl,
            Base::Prl => ClassTag::Prl,
        };
        if !checkers::passes(
            class,
            pair.lattice,
            crate::bundle::Operands::two(pair.otimes, pair.arrow),
        ) {
            return Err(FilterError::ClassCheckFailed(class));
        }
        Ok(pair)
    }

    /// Resolves the pair from the first wPRL, PRL or sPRL claim without
    /// checking it.
    pub fn from_bundle_unchecked(b: &'a StructureBundle) -> Result<Self, FilterError> {
        let claim = [ClassTag::Wprl, ClassTag::Prl, ClassTag::Sprl]
            .into_iter()
            .find_map(|c| b.claim_of(c))
            .ok_or(FilterError::NoPair(ClassTag::Wprl))?;
        let ops = b.operands(claim).map_err(|_| FilterError::NoPair(claim.class))?;
        Ok(Pair {
            lattice: &b.lattice,
            otimes: ops.bin(0),
            arrow: ops.bin(1),
        })
    }

    pub fn new(lattice: &'a Lattice, otimes: &'a PartialOp, arrow: &'a PartialOp) -> Self {
        Pair { lattice, otimes, arrow }
    }

    pub fn n(&self) -> usize {
        self.lattice.len()
    }

    pub fn to(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.arrow.apply(x, y)
    }

    pub fn ot(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.otimes.apply(x, y)
    }
}

/// An element subset kept sorted, with a flag for `F != L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FilterSet {
    pub members: Vec<Elem>,
    pub proper: bool,
}

impl FilterSet {
    pub fn new(mut members: Vec<Elem>, n: usize) -> Self {
        members.sort_unstable();
        members.dedup();
        let proper = members.len() != n;
        FilterSet { members, proper }
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

fn member(f: &[bool], v: Option<Elem>) -> bool {
    matches!(v, Some(x) if f[x])
}

fn mask(n: usize, set: &[Elem]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &x in set {
        m[x] = true;
    }
    m
}

/// F1-F3 as axiom entries.
pub fn filter_axioms(p: Pair<'_>, set: &[Elem]) -> Vec<AxiomEntry> {
    let (l, n) = (p.lattice, p.n());
    let f = mask(n, set);
    vec![
        scan(n, 0, "F1", |_| f[l.top()]),
        scan(n, 2, "F2", |t| !(f[t[0]] && l.leq(t[0], t[1])) || f[t[1]]),
        scan(n, 2, "F3", |t| match p.ot(t[0], t[1]) {
            Some(v) if f[t[0]] && f[t[1]] => f[v],
            _ => true,
        }),
    ]
}

pub fn is_filter(p: Pair<'_>, set: &[Elem]) -> bool {
    !set.is_empty() && filter_axioms(p, set).iter().all(AxiomEntry::passed)
}

/// Every filter (proper or not), by size and then lexicographically.
///
/// Candidates are the up-sets, grown from the principal up-set of each
/// seed by adding further principal up-sets.
pub fn enumerate_filters(p: Pair<'_>) -> Vec<FilterSet> {
    let (l, n) = (p.lattice, p.n());
    let mut upsets: std::collections::BTreeSet<Vec<Elem>> = std::collections::BTreeSet::new();
    let mut frontier: Vec<Vec<bool>> = l.elements().map(|x| mask(n, &l.up_set(x))).collect();
    while let Some(m) = frontier.pop() {
        let set: Vec<Elem> = (0..n).filter(|&i| m[i]).collect();
        if !upsets.insert(set) {
            continue;
        }
        for x in l.elements().filter(|&x| !m[x]) {
            let mut next = m.clone();
            for y in l.up_set(x) {
                next[y] = true;
            }
            frontier.push(next);
        }
    }
    let mut out: Vec<FilterSet> = upsets
        .into_iter()
        .filter(|s| is_filter(p, s))
        .map(|s| FilterSet::new(s, n))
        .collect();
    out.sort_by(|a, b| (a.members.len(), &a.members).cmp(&(b.members.len(), &b.members)));
    out
}

pub fn enumerate_proper_filters(p: Pair<'_>) -> Vec<FilterSet> {
    enumerate_filters(p).into_iter().filter(|f| f.proper).collect()
}

/// (s1)-(s4) with their definedness guards. A required membership fails
/// when the cell in question is undefined.
pub fn strong_filter_axioms(p: Pair<'_>, set: &[Elem]) -> Vec<AxiomEntry> {
    let n = p.n();
    let f = mask(n, set);
    let f = &f;
    vec![
        scan(n, 3, "s1", |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            match (p.to(z, x), p.to(z, y)) {
                (Some(zx), Some(zy)) if member(f, p.to(x, y)) => member(f, p.to(zx, zy)),
                _ => true,
            }
        }),
        scan(n, 3, "s2", |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            match (p.to(y, z), p.to(x, z)) {
                (Some(yz), Some(xz)) if member(f, p.to(x, y)) => member(f, p.to(yz, xz)),
                _ => true,
            }
        }),
        scan(n, 3, "s3", |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let lhs = p.ot(x, y).and_then(|xy| p.to(xy, z));
            let curried = p.to(y, z).and_then(|yz| p.to(x, yz));
            match lhs {
                Some(v) if member(f, curried) => f[v],
                _ => true,
            }
        }),
        scan(n, 3, "s4", |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            match (p.ot(x, z), p.ot(y, z)) {
                (Some(xz), Some(yz)) if member(f, p.to(x, y)) => member(f, p.to(xz, yz)),
                _ => true,
            }
        }),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongVerdict {
    pub filter: FilterSet,
    pub strong: bool,
    pub entries: Vec<AxiomEntry>,
}

impl StrongVerdict {
    pub fn failed_axioms(&self) -> Vec<&'static str> {
        self.entries.iter().filter(|e| !e.passed()).map(|e| e.axiom).collect()
    }
}

pub fn is_strong_filter(p: Pair<'_>, set: &[Elem]) -> Result<StrongVerdict, FilterError> {
    if !is_filter(p, set) {
        return Err(FilterError::NotAFilter);
    }
    let entries = strong_filter_axioms(p, set);
    Ok(StrongVerdict {
        filter: FilterSet::new(set.to_vec(), p.n()),
        strong: entries.iter().all(AxiomEntry::passed),
        entries,
    })
}

/// Strong-filter verdicts for every proper filter.
pub fn strong_verdicts(p: Pair<'_>) -> Vec<StrongVerdict> {
    enumerate_proper_filters(p)
        .into_iter()
        .map(|f| is_strong_filter(p, &f.members).expect("enumerated filters are filters"))
        .collect()
}

pub fn enumerate_strong_filters(p: Pair<'_>) -> Vec<FilterSet> {
    strong_verdicts(p)
        .into_iter()
        .filter(|v| v.strong)
        .map(|v| v.filter)
        .collect()
}

/// `x in F`, `x -> y` defined and in `F` give `y in F`.
pub fn mp_closed(p: Pair<'_>, set: &[Elem]) -> AxiomEntry {
    let f = mask(p.n(), set);
    scan(p.n(), 2, "MP", |t| !(f[t[0]] && member(&f, p.to(t[0], t[1]))) || f[t[1]])
}

/// `(x * y) -> z in F` gives `x -> (y -> z) in F` whenever both sides are
/// defined.
pub fn mp_implies_currying(p: Pair<'_>, set: &[Elem]) -> AxiomEntry {
    let f = mask(p.n(), set);
    scan(p.n(), 3, "CURRY", |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = p.ot(x, y).and_then(|xy| p.to(xy, z));
        let rhs = p.to(y, z).and_then(|yz| p.to(x, yz));
        match (lhs, rhs) {
            (Some(a), Some(b)) if f[a] => f[b],
            _ => true,
        }
    })
}

// ---- the relation ~F and partitions -------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub blocks: Vec<Vec<Elem>>,
    pub block_of: Vec<usize>,
}

impl Partition {
    /// Blocks ordered by their least element.
    pub fn from_blocks(mut blocks: Vec<Vec<Elem>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        let n = blocks.iter().map(Vec::len).sum();
        let mut block_of = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                block_of[x] = i;
            }
        }
        Partition { blocks, block_of }
    }

    /// The same partition with its blocks reordered by `key`.
    pub fn sorted_by_key<K: Ord>(&self, key: impl Fn(&[Elem]) -> K) -> Self {
        let mut blocks = self.blocks.clone();
        blocks.sort_by_key(|b| key(b));
        let mut block_of = vec![0; self.block_of.len()];
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                block_of[x] = i;
            }
        }
        Partition { blocks, block_of }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_blocks((0..n).map(|x| vec![x]).collect())
    }

    pub fn related(&self, x: Elem, y: Elem) -> bool {
        self.block_of[x] == self.block_of[y]
    }
}

/// `x ~F y` for the given set, counting an undefined arrow as outside `F`.
pub fn sim_holds(p: Pair<'_>, set: &[Elem], x: Elem, y: Elem) -> bool {
    let f = mask(p.n(), set);
    member(&f, p.to(x, y)) && member(&f, p.to(y, x))
}

/// The partition induced by `~F`, or a witness that it is not an
/// equivalence (reflexivity `EQ-refl` or transitivity `EQ-trans`).
pub fn sim_relation(p: Pair<'_>, set: &[Elem]) -> Result<Partition, FilterError> {
    let n = p.n();
    let f = mask(n, set);
    let rel = |x: Elem, y: Elem| member(&f, p.to(x, y)) && member(&f, p.to(y, x));
    let refl = scan(n, 1, "EQ-refl", |t| rel(t[0], t[0]));
    if !refl.passed() {
        return Err(FilterError::NotEquivalence(refl));
    }
    let trans = scan(n, 3, "EQ-trans", |t| !(rel(t[0], t[1]) && rel(t[1], t[2])) || rel(t[0], t[2]));
    if !trans.passed() {
        return Err(FilterError::NotEquivalence(trans));
    }
    let mut blocks: Vec<Vec<Elem>> = Vec::new();
    for x in 0..n {
        match blocks.iter_mut().find(|b| rel(b[0], x)) {
            Some(b) => b.push(x),
            None => blocks.push(vec![x]),
        }
    }
    Ok(Partition::from_blocks(blocks))
}

/// (C2) and (C3) over a partition.
pub fn congruence_axioms(p: Pair<'_>, part: &Partition) -> Vec<AxiomEntry> {
    let n = p.n();
    let compat = |op: &PartialOp, t: &[Elem]| {
        let (x, y, x1, y1) = (t[0], t[1], t[2], t[3]);
        if !(part.related(x, x1) && part.related(y, y1)) {
            return true;
        }
        match (op.apply(x, y), op.apply(x1, y1)) {
            (Some(a), Some(b)) => part.related(a, b),
            _ => true,
        }
    };
    vec![
        scan(n, 4, "C2", |t| compat(p.otimes, t)),
        scan(n, 4, "C3", |t| compat(p.arrow, t)),
    ]
}

pub fn is_congruence(p: Pair<'_>, part: &Partition) -> bool {
    congruence_axioms(p, part).iter().all(AxiomEntry::passed)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientStructure {
    pub bundle: StructureBundle,
    pub partition: Partition,
    pub filter: Vec<Elem>,
}

/// Block label: `[1]` style for the block of the top element (named after
/// the top), `[r]` for the least element `r` of any other block.
fn block_label(l: &Lattice, block: &[Elem]) -> String {
    format!("[{}]", l.label(block_rep(l, block)))
}

fn block_rep(l: &Lattice, block: &[Elem]) -> Elem {
    if block.contains(&l.top()) {
        l.top()
    } else {
        block[0]
    }
}

/// Builds `L/~F`, blocks ordered by their label element. The order is representative-wise, then checked to be a
/// bounded lattice. Quotient `*` takes `[x]` when `[y] = [1]` (and `[y]`
/// when `[x] = [1]`), `[x * y]` when every pair of representatives is
/// defined, and is undefined otherwise; quotient `->` has only the last
/// two cases.
pub fn build_quotient(p: Pair<'_>, set: &[Elem]) -> Result<QuotientStructure, FilterError> {
    if !is_filter(p, set) {
        return Err(FilterError::NotAFilter);
    }
    let part = sim_relation(p, set)?;
    if !is_congruence(p, &part) {
        return Err(FilterError::NotACongruence);
    }
    let l = p.lattice;
    let part = part.sorted_by_key(|b| block_rep(l, b));
    let m = part.blocks.len();
    let mut leq = vec![false; m * m];
    for (i, bi) in part.blocks.iter().enumerate() {
        for (j, bj) in part.blocks.iter().enumerate() {
            leq[i * m + j] = i == j || bi.iter().any(|&a| bj.iter().any(|&b| l.leq(a, b)));
        }
    }
    let labels: Vec<String> = part.blocks.iter().map(|b| block_label(l, b)).collect();
    let ql = representative_order(labels, leq)?;
    let one = part.block_of[l.top()];
    let all_defined = |op: &PartialOp, i: usize, j: usize| -> Option<usize> {
        let mut val = None;
        for &a in &part.blocks[i] {
            for &b in &part.blocks[j] {
                let v = op.apply(a, b)?;
                val.get_or_insert(part.block_of[v]);
            }
        }
        val
    };
    let qot = PartialOp::from_fn(m, |i, j| {
        if j == one {
            Some(i)
        } else if i == one {
            Some(j)
        } else {
            all_defined(p.otimes, i, j)
        }
    });
    let qto = PartialOp::from_fn(m, |i, j| all_defined(p.arrow, i, j));
    let bundle = StructureBundle::new("quotient", ql)
        .with_op("otimes", qot)
        .with_op("to", qto)
        .with_claim(ClassTag::Prl, &["otimes", "to"]);
    Ok(QuotientStructure {
        bundle,
        partition: part,
        filter: FilterSet::new(set.to_vec(), p.n()).members,
    })
}

fn representative_order(labels: Vec<String>, leq: Vec<bool>) -> Result<Lattice, FilterError> {
    Lattice::from_leq(labels, leq).map_err(FilterError::QuotientOrderNotLattice)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn goedel_chain(n: usize) -> (Lattice, PartialOp, PartialOp) {
        let l = Lattice::chain(n);
        let min = PartialOp::from_fn(n, |x, y| Some(l.meet(x, y)));
        let g = PartialOp::from_fn(n, |x, y| Some(if x <= y { n - 1 } else { y }));
        (l, min, g)
    }

    #[test]
    fn goedel_filters_are_up_sets_with_top() {
        let (l, min, g) = goedel_chain(4);
        let p = Pair::new(&l, &min, &g);
        let fs = enumerate_filters(p);
        let sets: Vec<Vec<Elem>> = fs.iter().map(|f| f.members.clone()).collect();
        assert_eq!(sets, vec![vec![3], vec![2, 3], vec![1, 2, 3], vec![0, 1, 2, 3]]);
        assert!(!fs.last().unwrap().proper);
        for f in &fs {
            assert!(mp_closed(p, &f.members).passed());
        }
    }

    #[test]
    fn enumeration_matches_subset_scan() {
        let (l, min, g) = goedel_chain(4);
        let p = Pair::new(&l, &min, &g);
        let mut brute = Vec::new();
        for mask_bits in 1u32..16 {
            let set: Vec<Elem> = (0..4).filter(|i| mask_bits >> i & 1 == 1).collect();
            if is_filter(p, &set) {
                brute.push(set);
            }
        }
        brute.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let got: Vec<Vec<Elem>> = enumerate_filters(p).into_iter().map(|f| f.members).collect();
        assert_eq!(got, brute);
    }

    #[test]
    fn trivial_partitions_are_congruences() {
        let (l, min, g) = goedel_chain(3);
        let p = Pair::new(&l, &min, &g);
        assert!(is_congruence(p, &Partition::identity(3)));
        assert!(is_congruence(p, &Partition::from_blocks(vec![vec![0, 1, 2]])));
    }

    #[test]
    fn top_filter_on_chain_gives_identity_quotient() {
        let (l, min, g) = goedel_chain(3);
        let p = Pair::new(&l, &min, &g);
        let q = build_quotient(p, &[2]).unwrap();
        assert_eq!(q.partition, Partition::identity(3));
        assert_eq!(q.bundle.op("otimes").unwrap(), &min);
        assert!(checkers::check_claim(&q.bundle, &q.bundle.claims[0]).unwrap().passed());
    }
}
