use alloc::string::String;
use thiserror::Error;

use crate::core_engine::BasisViolation;

/// Partial-order axioms checked by [`crate::poset::Poset::from_relation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderAxiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
}

/// Involution axioms; `I3` is the strong (fixed-point free) condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvolutionAxiom {
    /// `c` is not a permutation of the element indices.
    NotAPermutation,
    I1,
    I2,
    I3,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("partial order violation ({axiom:?}) at elements {x}, {y}")]
    PartialOrderViolation {
        axiom: OrderAxiom,
        x: usize,
        y: usize,
    },

    #[error("involution violation ({axiom:?}) at element {x}")]
    InvolutionViolation { axiom: InvolutionAxiom, x: usize },

    #[error("invalid parameters: n = {n}, r = {r} (need 1 <= r <= n)")]
    InvalidParams { n: usize, r: usize },

    #[error("{what} = {value} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("map is not a member of the required weighted family")]
    NotWeighted,

    #[error("pair is not a basis: {0}")]
    NotABasis(BasisViolation),

    #[error("map is not in B(n,r): {0}")]
    NotInBnr(String),

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("invalid weight function: {0}")]
    InvalidWeightFunction(String),

    #[error("system is not compatible")]
    Incompatible,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
