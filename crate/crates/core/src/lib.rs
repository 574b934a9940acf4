//! A toolkit for the largeness calculus on finite sets of naturals.
//!
//! The crate provides exact arithmetic for ordinals below `w^w` in Cantor
//! normal form, the alpha-largeness and sparseness algebra on finite sets,
//! pair colourings with homogeneity and transitivity predicates, the
//! constructive extraction procedures built on top of them (stabilization,
//! groupings, prehomogeneous sequences, transitive-subset and
//! homogeneous-chain extraction, and the composed two-colour pipeline), and
//! independent brute-force oracles that verify everything verifiable at desk
//! scale.
//!
//! Extractors come in two modes: [`Mode::Strict`] checks the stated largeness
//! and sparseness preconditions and is then guaranteed to succeed, while
//! [`Mode::Permissive`] runs the same constructions on arbitrary input,
//! degrading internal headroom where the input is too small, and validates
//! every output before returning it. Sets that genuinely satisfy the strict
//! hypotheses are astronomically large, so permissive mode is how the
//! algorithms are exercised in practice; soundness is unconditional either
//! way because nothing is returned unvalidated.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod colouring;
pub mod extract;
pub mod ordinal;
pub mod sets;
pub mod verify;

pub use colouring::{ColouringError, ColouringSpec, GeneratorKind, PairColouring};
pub use extract::{ExtractError, Grouping};
pub use ordinal::{Ordinal, OrdinalError};
pub use sets::{FiniteSet, SetError};

/// Precondition handling for the extraction operations.
///
/// Strict mode rejects inputs that fail the stated largeness and sparseness
/// hypotheses and is then guaranteed to succeed. Permissive mode skips those
/// checks, runs the same constructions with whatever headroom the input
/// actually has, and reports failure when a stage cannot deliver. Outputs are
/// validated before being returned in both modes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Mode {
    Strict,
    #[default]
    Permissive,
}

impl Mode {
    pub fn is_strict(self) -> bool {
        matches!(self, Mode::Strict)
    }
}
