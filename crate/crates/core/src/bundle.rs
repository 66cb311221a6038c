//! A lattice together with named operations and class claims.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::Lattice;
use crate::partial::{PartialOp, UnaryOp};

/// The structure classes the checkers know about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassTag {
    Ptnorm,
    Ptconorm,
    Tnorm,
    Tconorm,
    Negation,
    Fi,
    Pfi,
    Ea,
    Lea,
    Quasires,
    Pap,
    Prl,
    Sprl,
    Wprl,
    Coap,
    Corl,
    Pcrl,
    Zlprl,
    Rl,
}

/// How many binary and unary operations a class is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arity {
    pub binary: usize,
    pub unary: usize,
}

impl ClassTag {
    pub const ALL: [ClassTag; 19] = [
        ClassTag::Ptnorm,
        ClassTag::Ptconorm,
        ClassTag::Tnorm,
        ClassTag::Tconorm,
        ClassTag::Negation,
        ClassTag::Fi,
        ClassTag::Pfi,
        ClassTag::Ea,
        ClassTag::Lea,
        ClassTag::Quasires,
        ClassTag::Pap,
        ClassTag::Prl,
        ClassTag::Sprl,
        ClassTag::Wprl,
        ClassTag::Coap,
        ClassTag::Corl,
        ClassTag::Pcrl,
        ClassTag::Zlprl,
        ClassTag::Rl,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::Ptnorm => "ptnorm",
            ClassTag::Ptconorm => "ptconorm",
            ClassTag::Tnorm => "tnorm",
            ClassTag::Tconorm => "tconorm",
            ClassTag::Negation => "negation",
            ClassTag::Fi => "fi",
            ClassTag::Pfi => "pfi",
            ClassTag::Ea => "ea",
            ClassTag::Lea => "lea",
            ClassTag::Quasires => "quasires",
            ClassTag::Pap => "pap",
            ClassTag::Prl => "prl",
            ClassTag::Sprl => "sprl",
            ClassTag::Wprl => "wprl",
            ClassTag::Coap => "coap",
            ClassTag::Corl => "corl",
            ClassTag::Pcrl => "pcrl",
            ClassTag::Zlprl => "zlprl",
            ClassTag::Rl => "rl",
        }
    }

    pub fn arity(self) -> Arity {
        use ClassTag::*;
        let (binary, unary) = match self {
            Ptnorm | Ptconorm | Tnorm | Tconorm | Fi | Pfi => (1, 0),
            Negation => (0, 1),
            Ea | Lea => (1, 1),
            Quasires => (2, 1),
            Pap | Prl | Sprl | Wprl | Coap | Corl | Pcrl | Zlprl | Rl => (2, 0),
        };
        Arity { binary, unary }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown class tag `{0}`")]
pub struct UnknownClass(pub String);

impl FromStr for ClassTag {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassTag::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| UnknownClass(s.to_string()))
    }
}

/// A claim that named operations of a bundle form a structure of a class.
/// Binary operation names come first, then unary ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub class: ClassTag,
    pub args: Vec<String>,
}

impl Claim {
    pub fn new<S: AsRef<str>>(class: ClassTag, args: &[S]) -> Self {
        Claim {
            class,
            args: args.iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BundleError {
    #[error("operation `{0}` is defined twice")]
    DuplicateOpName(String),
    #[error("no operation named `{0}`")]
    UnknownOp(String),
    #[error("operation `{name}` has size {found}, lattice has {expected} elements")]
    SizeMismatch {
        name: String,
        found: usize,
        expected: usize,
    },
    #[error("class `{class}` takes {binary} binary and {unary} unary operations, got {got:?}")]
    WrongArity {
        class: ClassTag,
        binary: usize,
        unary: usize,
        got: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureBundle {
    pub name: String,
    pub lattice: Lattice,
    ops: Vec<(String, PartialOp)>,
    unaries: Vec<(String, UnaryOp)>,
    pub claims: Vec<Claim>,
}

/// Operations resolved from a claim, in claim order.
#[derive(Clone, Copy, Debug)]
pub struct Operands<'a> {
    pub binary: [Option<&'a PartialOp>; 2],
    pub unary: Option<&'a UnaryOp>,
}

impl<'a> Operands<'a> {
    pub fn one(op: &'a PartialOp) -> Self {
        Operands {
            binary: [Some(op), None],
            unary: None,
        }
    }

    pub fn two(a: &'a PartialOp, b: &'a PartialOp) -> Self {
        Operands {
            binary: [Some(a), Some(b)],
            unary: None,
        }
    }

    pub fn unary(u: &'a UnaryOp) -> Self {
        Operands {
            binary: [None, None],
            unary: Some(u),
        }
    }

    pub fn with_unary(mut self, u: &'a UnaryOp) -> Self {
        self.unary = Some(u);
        self
    }

    pub fn bin(&self, i: usize) -> &'a PartialOp {
        self.binary[i].expect("operand arity checked by caller")
    }

    pub fn un(&self) -> &'a UnaryOp {
        self.unary.expect("operand arity checked by caller")
    }
}

impl StructureBundle {
    pub fn new(name: impl Into<String>, lattice: Lattice) -> Self {
        StructureBundle {
            name: name.into(),
            lattice,
            ops: Vec::new(),
            unaries: Vec::new(),
            claims: Vec::new(),
        }
    }

    pub fn with_op(mut self, name: &str, op: PartialOp) -> Self {
        self.add_op(name, op).expect("builtin op is well formed");
        self
    }

    pub fn with_unary(mut self, name: &str, u: UnaryOp) -> Self {
        self.add_unary(name, u).expect("builtin unary op is well formed");
        self
    }

    pub fn with_claim<S: AsRef<str>>(mut self, class: ClassTag, args: &[S]) -> Self {
        self.claims.push(Claim::new(class, args));
        self
    }

    fn name_taken(&self, name: &str) -> bool {
        self.ops.iter().any(|(n, _)| n == name) || self.unaries.iter().any(|(n, _)| n == name)
    }

    pub fn add_op(&mut self, name: &str, op: PartialOp) -> Result<(), BundleError> {
        if self.name_taken(name) {
            return Err(BundleError::DuplicateOpName(name.to_string()));
        }
        if op.size() != self.lattice.len() {
            return Err(BundleError::SizeMismatch {
                name: name.to_string(),
                found: op.size(),
                expected: self.lattice.len(),
            });
        }
        self.ops.push((name.to_string(), op));
        Ok(())
    }

    pub fn add_unary(&mut self, name: &str, u: UnaryOp) -> Result<(), BundleError> {
        if self.name_taken(name) {
            return Err(BundleError::DuplicateOpName(name.to_string()));
        }
        if u.size() != self.lattice.len() {
            return Err(BundleError::SizeMismatch {
                name: name.to_string(),
                found: u.size(),
                expected: self.lattice.len(),
            });
        }
        self.unaries.push((name.to_string(), u));
        Ok(())
    }

    pub fn op(&self, name: &str) -> Result<&PartialOp, BundleError> {
        self.ops
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, o)| o)
            .ok_or_else(|| BundleError::UnknownOp(name.to_string()))
    }

    pub fn unary(&self, name: &str) -> Result<&UnaryOp, BundleError> {
        self.unaries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, o)| o)
            .ok_or_else(|| BundleError::UnknownOp(name.to_string()))
    }

    pub fn ops(&self) -> &[(String, PartialOp)] {
        &self.ops
    }

    pub fn unaries(&self) -> &[(String, UnaryOp)] {
        &self.unaries
    }

    /// Resolves a claim's operation names against this bundle.
    pub fn operands(&self, claim: &Claim) -> Result<Operands<'_>, BundleError> {
        let arity = claim.class.arity();
        if claim.args.len() != arity.binary + arity.unary {
            return Err(BundleError::WrongArity {
                class: claim.class,
                binary: arity.binary,
                unary: arity.unary,
                got: claim.args.clone(),
            });
        }
        let mut binary = [None, None];
        for (slot, name) in binary.iter_mut().zip(&claim.args[..arity.binary]) {
            *slot = Some(self.op(name)?);
        }
        let unary = if arity.unary == 1 {
            Some(self.unary(&claim.args[arity.binary])?)
        } else {
            None
        };
        Ok(Operands { binary, unary })
    }

    /// The first claim of the given class, if any.
    pub fn claim_of(&self, class: ClassTag) -> Option<&Claim> {
        self.claims.iter().find(|c| c.class == class)
    }

    /// Same structure over a relabelled or reordered lattice of equal size.
    pub fn with_lattice(&self, lattice: Lattice) -> Self {
        assert_eq!(lattice.len(), self.lattice.len());
        StructureBundle {
            lattice,
            ..self.clone()
        }
    }
}
