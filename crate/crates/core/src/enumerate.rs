//! Exhaustive enumeration of the partial operations of a class on a small
//! lattice.
//!
//! Tables are completed cell by cell, depth first. Cells are visited in
//! row-major order and their values tried as `Undefined < 0 < 1 < ...`, so
//! the output order is lexicographic and stable. Every emitted structure
//! passes the full class check; pruning only removes dead branches early.

use rayon::prelude::*;
use thiserror::Error;

use crate::bundle::{ClassTag, Operands, StructureBundle};
use crate::checkers;
use crate::lattice::{Elem, Lattice};
use crate::partial::{is_associative_directional, PartialOp};

/// Largest lattice enumerated without an explicit cap.
pub const DEFAULT_MAX_SIZE: usize = 5;

/// Plain PRLs leave almost every arrow cell free to be undefined; on four
/// elements there are already hundreds of thousands of them.
pub const PRL_MAX_SIZE: usize = 3;

/// Size bound without a cap for `class`.
pub fn max_uncapped_size(class: ClassTag) -> usize {
    if class == ClassTag::Prl {
        PRL_MAX_SIZE
    } else {
        DEFAULT_MAX_SIZE
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("enumeration is not implemented for class `{0}`")]
    UnsupportedClass(ClassTag),
    #[error("lattice has {got} elements; enumeration without a cap stops at {max}")]
    TooLarge { max: usize, got: usize },
    #[error("cap must be at least 1")]
    ZeroCap,
}

/// Classes [`enumerate_class`] can generate.
pub const SUPPORTED: &[ClassTag] = &[
    ClassTag::Ptnorm,
    ClassTag::Ptconorm,
    ClassTag::Tnorm,
    ClassTag::Tconorm,
    ClassTag::Prl,
    ClassTag::Sprl,
    ClassTag::Wprl,
    ClassTag::Rl,
];

#[derive(Clone, Debug)]
pub struct EnumerationTask {
    pub lattice: Lattice,
    pub class: ClassTag,
    pub cap: Option<usize>,
    /// Emit one structure per orbit of the lattice automorphism group.
    /// `count` still counts every structure.
    pub symmetry: bool,
}

impl EnumerationTask {
    pub fn new(lattice: Lattice, class: ClassTag) -> Self {
        EnumerationTask {
            lattice,
            class,
            cap: None,
            symmetry: false,
        }
    }

    pub fn chain(n: usize, class: ClassTag) -> Self {
        Self::new(Lattice::chain(n), class)
    }

    pub fn with_cap(mut self, cap: usize) -> Result<Self, EnumerateError> {
        if cap == 0 {
            return Err(EnumerateError::ZeroCap);
        }
        self.cap = Some(cap);
        Ok(self)
    }

    pub fn with_symmetry(mut self, on: bool) -> Self {
        self.symmetry = on;
        self
    }
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub structures: Vec<StructureBundle>,
    /// Number of structures found, orbits expanded. Exact unless
    /// `cap_exceeded`.
    pub count: usize,
    pub cap_exceeded: bool,
}

/// Worker count: `PLW_JOBS` if set to a positive integer, otherwise the
/// available parallelism.
pub fn worker_count() -> usize {
    std::env::var("PLW_JOBS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&k| k > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |k| k.get()))
}

fn with_pool<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(worker_count()).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

pub fn enumerate_class(task: &EnumerationTask) -> Result<Enumeration, EnumerateError> {
    use ClassTag::*;
    if !SUPPORTED.contains(&task.class) {
        return Err(EnumerateError::UnsupportedClass(task.class));
    }
    let n = task.lattice.len();
    let max = max_uncapped_size(task.class);
    if task.cap.is_none() && n > max {
        return Err(EnumerateError::TooLarge {
            max,
            got: n,
        });
    }
    if task.cap == Some(0) {
        return Err(EnumerateError::ZeroCap);
    }
    let limit = task.cap.map_or(usize::MAX, |c| c + 1);
    let l = &task.lattice;
    let autos = if task.symmetry { l.automorphisms() } else { vec![] };
    let found: Vec<(Vec<PartialOp>, usize)> = with_pool(|| match task.class {
        Ptnorm | Ptconorm | Tnorm | Tconorm => single_ops(l, task.class, &autos, limit),
        _ => pairs(l, task.class, &autos, limit),
    });
    let cap_exceeded = found.len() >= limit;
    let kept: Vec<_> = found.into_iter().take(task.cap.unwrap_or(usize::MAX)).collect();
    let count = kept.iter().map(|(_, orbit)| orbit).sum();
    let structures = kept
        .into_iter()
        .enumerate()
        .map(|(k, (ops, _))| to_bundle(l, task.class, k, ops))
        .collect();
    Ok(Enumeration {
        structures,
        count,
        cap_exceeded,
    })
}

fn to_bundle(l: &Lattice, class: ClassTag, k: usize, ops: Vec<PartialOp>) -> StructureBundle {
    let name = format!("{class}#{k}");
    let mut ops = ops.into_iter();
    let first = ops.next().expect("at least one op");
    match ops.next() {
        None => {
            let opname = if matches!(class, ClassTag::Ptconorm | ClassTag::Tconorm) { "oplus" } else { "odot" };
            StructureBundle::new(name, l.clone())
                .with_op(opname, first)
                .with_claim(class, &[opname])
        }
        Some(arrow) => StructureBundle::new(name, l.clone())
            .with_op("otimes", first)
            .with_op("to", arrow)
            .with_claim(class, &["otimes", "to"]),
    }
}

// ---- symmetry ----------------------------------------------------------------

fn key(ops: &[PartialOp]) -> Vec<Option<Elem>> {
    ops.iter().flat_map(|o| o.cells().iter().copied()).collect()
}

/// `Some(orbit size)` when `ops` is the least member of its orbit, else
/// `None`. With no automorphisms every structure is its own orbit.
fn canonical_orbit(ops: &[PartialOp], autos: &[Vec<Elem>]) -> Option<usize> {
    if autos.is_empty() {
        return Some(1);
    }
    let own = key(ops);
    let mut images: Vec<Vec<Option<Elem>>> = Vec::with_capacity(autos.len());
    for p in autos {
        let img: Vec<PartialOp> = ops.iter().map(|o| o.permute(p)).collect();
        let k = key(&img);
        if k < own {
            return None;
        }
        images.push(k);
    }
    images.sort();
    images.dedup();
    Some(images.len())
}

// ---- the multiplication ------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mono {
    /// `x <= y, h <= k` gives `x*h <= y*k` on defined cells.
    TwoSided,
    /// Only one argument moves.
    OneSided,
    /// One argument moves, and definedness propagates upwards.
    Propagating,
}

struct MulShape {
    unit: Elem,
    dual: bool,
    partial: bool,
    mono: Mono,
    free: Vec<(Elem, Elem)>,
}

impl MulShape {
    fn new(l: &Lattice, class: ClassTag) -> Self {
        use ClassTag::*;
        let dual = matches!(class, Ptconorm | Tconorm);
        let unit = if dual { l.bottom() } else { l.top() };
        let partial = !matches!(class, Tnorm | Tconorm | Rl);
        let mono = match class {
            Ptnorm | Ptconorm | Tnorm | Tconorm | Rl => Mono::TwoSided,
            Sprl => Mono::Propagating,
            _ => Mono::OneSided,
        };
        let n = l.len();
        let free = (0..n)
            .flat_map(|x| (x..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != unit && y != unit)
            .collect();
        MulShape {
            unit,
            dual,
            partial,
            mono,
            free,
        }
    }

    fn seed(&self, n: usize) -> PartialOp {
        let mut op = PartialOp::undefined(n);
        for x in 0..n {
            op.set(x, self.unit, Some(x));
            op.set(self.unit, x, Some(x));
        }
        op
    }

    /// Candidate values for a free cell: undefined first (if allowed), then
    /// the elements below the meet (above the join for co-operations).
    fn options(&self, l: &Lattice, x: Elem, y: Elem) -> Vec<Option<Elem>> {
        let mut v = Vec::new();
        if self.partial {
            v.push(None);
        }
        let bound = if self.dual { l.join(x, y) } else { l.meet(x, y) };
        for e in l.elements() {
            let ok = if self.dual { l.leq(bound, e) } else { l.leq(e, bound) };
            if ok {
                v.push(Some(e));
            }
        }
        v
    }

    /// Monotonicity between cell `(x, y)` and the already assigned cells.
    fn consistent(&self, l: &Lattice, op: &PartialOp, assigned: &[bool], x: Elem, y: Elem) -> bool {
        let n = l.len();
        let v = op.apply(x, y);
        for a in 0..n {
            for b in 0..n {
                if !assigned[a * n + b] || (a, b) == (x, y) {
                    continue;
                }
                let related = match self.mono {
                    Mono::TwoSided => true,
                    _ => a == x || b == y,
                };
                if !related {
                    continue;
                }
                let w = op.apply(a, b);
                let below = l.leq(a, x) && l.leq(b, y);
                let above = l.leq(x, a) && l.leq(y, b);
                if let (Some(v), Some(w)) = (v, w) {
                    if (below && !l.leq(w, v)) || (above && !l.leq(v, w)) {
                        return false;
                    }
                }
                if self.mono == Mono::Propagating
                    && ((below && w.is_some() && v.is_none()) || (above && v.is_some() && w.is_none()))
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Depth-first completion of the free cells of a commutative table.
struct MulSearch<'a> {
    l: &'a Lattice,
    shape: MulShape,
    options: Vec<Vec<Option<Elem>>>,
}

impl<'a> MulSearch<'a> {
    fn new(l: &'a Lattice, class: ClassTag) -> Self {
        let shape = MulShape::new(l, class);
        let options = shape.free.iter().map(|&(x, y)| shape.options(l, x, y)).collect();
        MulSearch { l, shape, options }
    }

    fn assigned_seed(&self) -> Vec<bool> {
        let n = self.l.len();
        let u = self.shape.unit;
        (0..n * n).map(|i| i / n == u || i % n == u).collect()
    }

    /// All completions, with the subtree under each option of the first free
    /// cell searched by a separate worker. Stops each branch after `limit`
    /// accepted tables.
    fn run(&self, accept: &(dyn Fn(&PartialOp) -> bool + Sync), limit: usize) -> Vec<PartialOp> {
        let n = self.l.len();
        let seed = self.shape.seed(n);
        if self.shape.free.is_empty() {
            return if accept(&seed) { vec![seed] } else { vec![] };
        }
        let (x, y) = self.shape.free[0];
        let branches: Vec<Vec<PartialOp>> = self.options[0]
            .par_iter()
            .map(|&v| {
                let mut op = seed.clone();
                let mut assigned = self.assigned_seed();
                op.set(x, y, v);
                op.set(y, x, v);
                assigned[x * n + y] = true;
                assigned[y * n + x] = true;
                let mut out = Vec::new();
                if self.shape.consistent(self.l, &op, &assigned, x, y) {
                    self.dfs(1, &mut op, &mut assigned, accept, limit, &mut out);
                }
                out
            })
            .collect();
        let mut all: Vec<PartialOp> = branches.into_iter().flatten().collect();
        all.truncate(limit);
        all
    }

    fn dfs(
        &self,
        k: usize,
        op: &mut PartialOp,
        assigned: &mut Vec<bool>,
        accept: &(dyn Fn(&PartialOp) -> bool + Sync),
        limit: usize,
        out: &mut Vec<PartialOp>,
    ) {
        if out.len() >= limit {
            return;
        }
        if k == self.shape.free.len() {
            if accept(op) {
                out.push(op.clone());
            }
            return;
        }
        let n = self.l.len();
        let (x, y) = self.shape.free[k];
        for &v in &self.options[k] {
            op.set(x, y, v);
            op.set(y, x, v);
            assigned[x * n + y] = true;
            assigned[y * n + x] = true;
            if self.shape.consistent(self.l, op, assigned, x, y) {
                self.dfs(k + 1, op, assigned, accept, limit, out);
            }
        }
        op.set(x, y, None);
        op.set(y, x, None);
        assigned[x * n + y] = false;
        assigned[y * n + x] = false;
    }
}

fn single_ops(l: &Lattice, class: ClassTag, autos: &[Vec<Elem>], limit: usize) -> Vec<(Vec<PartialOp>, usize)> {
    let search = MulSearch::new(l, class);
    let accept = |op: &PartialOp| checkers::passes(class, l, Operands::one(op)) && canonical_orbit(std::slice::from_ref(op), autos).is_some();
    search
        .run(&accept, limit)
        .into_iter()
        .map(|op| {
            let orbit = canonical_orbit(std::slice::from_ref(&op), autos).unwrap_or(1);
            (vec![op], orbit)
        })
        .collect()
}

// ---- the implication ---------------------------------------------------------

/// Candidate values of `x -> z` given the multiplication, from the
/// residuation axiom of the class restricted to that cell.
fn arrow_options(l: &Lattice, class: ClassTag, o: &PartialOp, x: Elem, z: Elem) -> Vec<Option<Elem>> {
    use ClassTag::*;
    let top = l.top();
    let below_z = |y: Elem| matches!(o.apply(x, y), Some(p) if l.leq(p, z));
    let mut v = Vec::new();
    let undefined_ok = match class {
        Prl => true,
        Wprl => x != z && z != top,
        Sprl => !l.elements().any(below_z),
        _ => false,
    };
    if undefined_ok {
        v.push(None);
    }
    for c in l.elements() {
        let ok = match class {
            Prl | Wprl => {
                l.elements().all(|y| match o.apply(x, y) {
                    Some(p) => l.leq(p, z) == l.leq(y, c),
                    None => true,
                }) && (class == Prl || o.is_defined(x, c))
            }
            _ => l.elements().all(|y| below_z(y) == l.leq(y, c)),
        };
        if ok {
            v.push(Some(c));
        }
    }
    v
}

fn pairs(l: &Lattice, class: ClassTag, autos: &[Vec<Elem>], limit: usize) -> Vec<(Vec<PartialOp>, usize)> {
    let search = MulSearch::new(l, class);
    let mult_ok = |op: &PartialOp| is_associative_directional(op, "assoc").passed();
    let mults = search.run(&mult_ok, usize::MAX);
    let per: Vec<Vec<(Vec<PartialOp>, usize)>> = mults
        .par_iter()
        .map(|o| {
            let mut out = Vec::new();
            arrows_for(l, class, o, autos, limit, &mut out);
            out
        })
        .collect();
    let mut all: Vec<_> = per.into_iter().flatten().collect();
    all.truncate(limit);
    all
}

fn arrows_for(
    l: &Lattice,
    class: ClassTag,
    o: &PartialOp,
    autos: &[Vec<Elem>],
    limit: usize,
    out: &mut Vec<(Vec<PartialOp>, usize)>,
) {
    let n = l.len();
    let cells: Vec<(Elem, Elem)> = (0..n).flat_map(|x| (0..n).map(move |z| (x, z))).collect();
    let options: Vec<Vec<Option<Elem>>> = cells.iter().map(|&(x, z)| arrow_options(l, class, o, x, z)).collect();
    if options.iter().any(Vec::is_empty) {
        return;
    }
    let mut a = PartialOp::undefined(n);
    arrow_dfs(l, class, o, &cells, &options, 0, &mut a, autos, limit, out);
}

#[allow(clippy::too_many_arguments)]
fn arrow_dfs(
    l: &Lattice,
    class: ClassTag,
    o: &PartialOp,
    cells: &[(Elem, Elem)],
    options: &[Vec<Option<Elem>>],
    k: usize,
    a: &mut PartialOp,
    autos: &[Vec<Elem>],
    limit: usize,
    out: &mut Vec<(Vec<PartialOp>, usize)>,
) {
    if out.len() >= limit {
        return;
    }
    if k == cells.len() {
        if checkers::passes(class, l, Operands::two(o, a)) {
            let ops = vec![o.clone(), a.clone()];
            if let Some(orbit) = canonical_orbit(&ops, autos) {
                out.push((ops, orbit));
            }
        }
        return;
    }
    let (x, z) = cells[k];
    for &v in &options[k] {
        a.set(x, z, v);
        if arrow_consistent(l, a, cells, k) {
            arrow_dfs(l, class, o, cells, options, k + 1, a, autos, limit, out);
        }
    }
    a.set(x, z, None);
}

/// Antitone in the first argument, isotone in the second, against the
/// cells assigned so far.
fn arrow_consistent(l: &Lattice, a: &PartialOp, cells: &[(Elem, Elem)], k: usize) -> bool {
    let (x, z) = cells[k];
    let Some(v) = a.apply(x, z) else { return true };
    cells[..k].iter().all(|&(p, q)| {
        let Some(w) = a.apply(p, q) else { return true };
        if q == z {
            (!l.leq(p, x) || l.leq(v, w)) && (!l.leq(x, p) || l.leq(w, v))
        } else if p == x {
            (!l.leq(q, z) || l.leq(w, v)) && (!l.leq(z, q) || l.leq(v, w))
        } else {
            true
        }
    })
}

// ---- the naive oracle --------------------------------------------------------

/// Counts the single-operation structures of `class` by trying every
/// value (undefined included) in every cell off the unit row and column,
/// with no pruning and no use of commutativity. Exponential; meant for
/// chains of size at most 4.
pub fn naive_count(l: &Lattice, class: ClassTag) -> Result<usize, EnumerateError> {
    use ClassTag::*;
    if !matches!(class, Ptnorm | Ptconorm | Tnorm | Tconorm) {
        return Err(EnumerateError::UnsupportedClass(class));
    }
    let n = l.len();
    let unit = if matches!(class, Ptconorm | Tconorm) { l.bottom() } else { l.top() };
    let mut op = PartialOp::undefined(n);
    for x in 0..n {
        op.set(x, unit, Some(x));
        op.set(unit, x, Some(x));
    }
    let cells: Vec<(Elem, Elem)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != unit && y != unit)
        .collect();
    // digit n stands for undefined
    let mut digits = vec![0usize; cells.len()];
    let decode = |d: usize| if d == n { None } else { Some(d) };
    let mut count = 0;
    loop {
        for (&(x, y), &d) in cells.iter().zip(&digits) {
            op.set(x, y, decode(d));
        }
        if checkers::passes(class, l, Operands::one(&op)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(count);
            }
            digits[i] += 1;
            if digits[i] <= n {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_element_lattice_has_one_partial_tnorm() {
        let e = enumerate_class(&EnumerationTask::chain(1, ClassTag::Ptnorm)).unwrap();
        assert_eq!(e.count, 1);
    }

    #[test]
    fn two_chain_partial_tnorms() {
        let e = enumerate_class(&EnumerationTask::chain(2, ClassTag::Ptnorm)).unwrap();
        let tables: Vec<Vec<Option<Elem>>> = e.structures.iter().map(|b| b.op("odot").unwrap().cells().to_vec()).collect();
        assert!(tables.contains(&vec![None, Some(0), Some(0), Some(1)]));
        assert!(tables.contains(&vec![Some(0), Some(0), Some(0), Some(1)]));
        assert_eq!(e.count, naive_count(&Lattice::chain(2), ClassTag::Ptnorm).unwrap());
    }

    #[test]
    fn emitted_structures_pass_their_class() {
        for class in SUPPORTED {
            let e = enumerate_class(&EnumerationTask::chain(3, *class)).unwrap();
            assert!(e.count > 0, "{class}");
            for b in &e.structures {
                let claim = b.claim_of(*class).unwrap();
                assert!(checkers::check_claim(b, claim).unwrap().passed(), "{class} {}", b.name);
            }
        }
    }

    #[test]
    fn pruned_counts_match_the_naive_oracle() {
        for n in 2..=3 {
            let e = enumerate_class(&EnumerationTask::chain(n, ClassTag::Ptnorm)).unwrap();
            assert_eq!(e.count, naive_count(&Lattice::chain(n), ClassTag::Ptnorm).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn cap_flags_and_truncates() {
        let full = enumerate_class(&EnumerationTask::chain(3, ClassTag::Ptnorm)).unwrap();
        let capped = enumerate_class(&EnumerationTask::chain(3, ClassTag::Ptnorm).with_cap(2).unwrap()).unwrap();
        assert!(full.count > 2 && !full.cap_exceeded);
        assert!(capped.cap_exceeded);
        assert_eq!(capped.structures.len(), 2);
        assert_eq!(capped.structures[0].op("odot").unwrap(), full.structures[0].op("odot").unwrap());
        assert!(EnumerationTask::chain(3, ClassTag::Ptnorm).with_cap(0).is_err());
    }

    #[test]
    fn symmetry_reduction_keeps_the_count() {
        let diamond = Lattice::from_pairs(
            (0..4).map(|i| i.to_string()).collect(),
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        for class in [ClassTag::Ptnorm, ClassTag::Wprl] {
            let plain = enumerate_class(&EnumerationTask::new(diamond.clone(), class)).unwrap();
            let reduced = enumerate_class(&EnumerationTask::new(diamond.clone(), class).with_symmetry(true)).unwrap();
            assert_eq!(plain.count, reduced.count, "{class}");
            assert!(reduced.structures.len() < plain.structures.len(), "{class}");
        }
    }

    #[test]
    fn unsupported_and_oversized() {
        assert!(matches!(
            enumerate_class(&EnumerationTask::chain(3, ClassTag::Lea)),
            Err(EnumerateError::UnsupportedClass(_))
        ));
        assert!(matches!(
            enumerate_class(&EnumerationTask::chain(6, ClassTag::Ptnorm)),
            Err(EnumerateError::TooLarge { .. })
        ));
        assert!(matches!(
            enumerate_class(&EnumerationTask::chain(4, ClassTag::Prl)),
            Err(EnumerateError::TooLarge { max: 3, .. })
        ));
    }
}
