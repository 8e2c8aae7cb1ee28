//! Boolean maps on strongly involution posets and subset-sum inequality
//! systems.
//!
//! The lattice S(n,r) of padded strings encodes the subsets of
//! `{r~, .., 1~, 1-, .., (n-r)-}`; a boolean map on it assigns a sign to every
//! subset-sum `Σ_{w*} t` of a system over the chain
//! `x_r >= .. >= x_1 >= 0 > y_1 >= .. >= y_{n-r}`. This crate builds the
//! lattice, computes fundamental cores of weighted maps, spans maps from
//! bases, and decides compatibility of systems exactly with Fourier–Motzkin
//! elimination over arbitrary-precision rationals.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod core_engine;
pub mod error;
pub mod feasibility;
pub mod formal;
pub mod maps;
pub mod partition;
pub mod poset;
pub mod set;
pub mod snr;
pub mod system;
pub mod weights;

pub use core_engine::{
    check_w_basis, enumerate_extensions, enumerate_family, enumerate_weighted, fundamental_core,
    fundamental_core_minus, fundamental_core_plus, h, is_core_brute, is_w_basis_minus,
    is_w_basis_plus, n_core, span, span_minus, span_plus, BasisViolation, CoreOracle, CorePair,
    CoreReport, FamilyIter, DEFAULT_ENUMERATION_CAP,
};
pub use error::{Error, InvolutionAxiom, OrderAxiom, Result};
pub use feasibility::{
    check_witness, feasible, feasible_with, implies, to_linear, FeasibilityResult, FmOptions,
    LinearConstraint, LinearSystem, Rational, Relation, Verdict,
};
pub use formal::{
    conjecture_scan, in_fc, in_fc_minus, in_fc_plus, is_complemented_pointwise, ConjectureReport,
    PointwiseViolation, Question, ScanVerdict,
};
pub use maps::{classify, complemented_elements, in_bnr, MapFamily, PartialMap, Polarity, Sign};
pub use poset::{validate_involution, Involution, Poset, Sip};
pub use set::ElementSet;
pub use snr::{SnrLattice, SnrParams, SnrString, Symbol};
pub use system::{
    chi, classify_system, compatible, equivalent, is_generative, nlc_check, plc_check,
    subsystem_leq, tau, Compatibility, Generativity, LocalCriterionReport, NrSystem, RowRelation,
    SystemClass,
};
pub use weights::{WeightClass, WeightFunction};
