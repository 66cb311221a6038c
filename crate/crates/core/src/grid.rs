//! Finite rational grids `{k/d : 0 <= k <= d}` standing in for the unit
//! interval. All arithmetic is exact.

use num_rational::Ratio;
use thiserror::Error;

use crate::lattice::{Elem, Lattice};

pub type Q = Ratio<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("grid denominator must be at least 1")]
    ZeroDenominator,
    #[error("parameter {0} is not a point of the grid")]
    OffGrid(String),
    #[error("value {0} produced by the formula is not on the grid")]
    NotClosed(String),
}

/// A grid of denominator `d` plus an optional on-grid parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub denominator: u32,
    pub alpha: Option<Q>,
}

impl GridSpec {
    pub fn new(denominator: u32) -> Result<Self, GridError> {
        if denominator == 0 {
            return Err(GridError::ZeroDenominator);
        }
        Ok(GridSpec {
            denominator,
            alpha: None,
        })
    }

    pub fn with_alpha(mut self, alpha: Q) -> Result<Self, GridError> {
        if self.grid().index_of(alpha).is_none() {
            return Err(GridError::OffGrid(alpha.to_string()));
        }
        self.alpha = Some(alpha);
        Ok(self)
    }

    pub fn grid(&self) -> Grid {
        Grid {
            d: i64::from(self.denominator),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    d: i64,
}

impl Grid {
    pub fn new(denominator: u32) -> Result<Self, GridError> {
        GridSpec::new(denominator).map(|s| s.grid())
    }

    pub fn len(&self) -> usize {
        self.d as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn value(&self, k: Elem) -> Q {
        Q::new(k as i64, self.d)
    }

    pub fn index_of(&self, q: Q) -> Option<Elem> {
        let k = q * Q::from_integer(self.d);
        if k.is_integer() && *k.numer() >= 0 && *k.numer() <= self.d {
            Some(*k.numer() as Elem)
        } else {
            None
        }
    }

    /// Like [`Grid::index_of`] but reports the offending value.
    pub fn expect_on(&self, q: Q) -> Result<Elem, GridError> {
        self.index_of(q).ok_or_else(|| GridError::NotClosed(q.to_string()))
    }

    pub fn values(&self) -> impl Iterator<Item = Q> + '_ {
        (0..self.len()).map(move |k| self.value(k))
    }

    /// The grid as a chain, labelled by reduced fractions (`0`, `1/4`, ...).
    pub fn lattice(&self) -> Lattice {
        let labels: Vec<String> = self.values().map(|q| q.to_string()).collect();
        Lattice::labelled_chain(&labels)
    }
}
