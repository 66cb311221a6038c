//! Recovering lattice orders from operation tables.
//!
//! Given bundles that share a carrier of `n` labelled points, every bounded
//! lattice order on those points is tried and kept when all claims of all
//! bundles hold under it.

use thiserror::Error;

use crate::bundle::StructureBundle;
use crate::checkers;
use crate::lattice::{all_lattice_orders, Lattice};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InferError {
    #[error("no bounded lattice order satisfies every claim")]
    NoConsistentOrder,
    #[error("bundles must share the same element labels")]
    LabelMismatch,
    #[error("order search is limited to at most {max} elements, got {got}")]
    TooLarge { max: usize, got: usize },
}

/// Largest carrier for which the full order search runs.
pub const MAX_INFER_SIZE: usize = 7;

/// All bounded lattice orders on the shared labels under which every claim
/// of every bundle passes.
pub fn infer_orders(bundles: &[StructureBundle]) -> Result<Vec<Lattice>, InferError> {
    let Some(first) = bundles.first() else {
        return Err(InferError::NoConsistentOrder);
    };
    let labels = first.lattice.labels().to_vec();
    if bundles.iter().any(|b| b.lattice.labels() != labels.as_slice()) {
        return Err(InferError::LabelMismatch);
    }
    let n = labels.len();
    if n > MAX_INFER_SIZE {
        return Err(InferError::TooLarge {
            max: MAX_INFER_SIZE,
            got: n,
        });
    }
    let found = consistent_among(bundles, all_lattice_orders(n).into_iter().map(|leq| {
        Lattice::from_leq(labels.clone(), leq).expect("enumerated orders are lattices")
    }));
    if found.is_empty() {
        Err(InferError::NoConsistentOrder)
    } else {
        Ok(found)
    }
}

/// Filters candidate lattices down to those under which all claims pass.
pub fn consistent_among(
    bundles: &[StructureBundle],
    candidates: impl IntoIterator<Item = Lattice>,
) -> Vec<Lattice> {
    candidates
        .into_iter()
        .filter(|l| bundles.iter().all(|b| claims_hold_under(b, l)))
        .collect()
}

fn claims_hold_under(bundle: &StructureBundle, l: &Lattice) -> bool {
    bundle.claims.iter().all(|c| match bundle.operands(c) {
        Ok(ops) => checkers::passes(c.class, l, ops),
        Err(_) => false,
    })
}
