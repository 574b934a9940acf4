//! Constructive extraction procedures for pair colourings: colour
//! stabilization, groupings, prehomogeneous sequences and their descent
//! bookkeeping, transitive-subset extraction, homogeneous chains for
//! transitive colourings, and the composed two-colour pipeline.
//!
//! Every extractor validates its own output before returning, so a success
//! is trustworthy regardless of mode; completeness is guaranteed under the
//! strict preconditions and best-effort otherwise.

mod ads;
mod descent;
mod em;
mod grouping;
mod hmph;
mod rt22;
mod stabilize;

pub use ads::{ads_homogeneous, is_long};
pub use descent::{ks_descent_trace, DegreeEntry, DescentRow, DescentTrace};
pub use em::{em_transitive_subset, EmResult};
pub use grouping::{grouping, grouping_fixed, grouping_omega};
pub use hmph::{hmph, ks_homogeneous, ks_homogeneous_with, HmphRecord, KsOptions};
pub use rt22::{rt22_homogeneous, Rt22Result};
pub use stabilize::{stabilize_above, stabilize_below};

use thiserror::Error;

use crate::colouring::{ColouringError, PairColouring};
use crate::ordinal::Ordinal;
use crate::sets::{is_large, FiniteSet, SetError};

/// Errors from the extraction procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("stage {stage} failed: {reason}")]
    Stage { stage: String, reason: String },
    #[error("colouring is not transitive")]
    NotTransitive,
    #[error("no {target}-large candidate found")]
    NoCandidate { target: Ordinal },
    #[error("descent bookkeeping undefined at index {index}, degree {degree}: the coefficient would be negative")]
    TraceUndefined { index: usize, degree: u32 },
    #[error("internal validation failed (implementation bug): {0}")]
    Internal(String),
}

/// First grouping clause that fails, reported by [`validate_grouping`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupingViolation {
    #[error("block {index} is empty")]
    EmptyBlock { index: usize },
    #[error("block {index} does not lie below block {}", index + 1)]
    NotSeparated { index: usize },
    #[error("block {index} contains {element}, which is outside the colouring's base")]
    OutsideBase { index: usize, element: u64 },
    #[error("block {index} is not {alpha}-large")]
    BlockNotLarge { index: usize, alpha: Ordinal },
    #[error("the set of block maxima is not {beta}-large")]
    MaximaNotLarge { beta: Ordinal },
    #[error("pair ({x}, {y}) has colour {got}, but blocks {i} and {j} are recorded as colour {want}")]
    ColourMismatch { i: usize, j: usize, x: u64, y: u64, got: u8, want: u8 },
    #[error("blocks {i} and {j} have colour {got}, but the strong colour is {want}")]
    StrongMismatch { i: usize, j: usize, got: u8, want: u8 },
}

/// An ordered family of blocks whose between-block pair colours are constant
/// per block pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Grouping {
    blocks: Vec<FiniteSet>,
    /// Upper-triangular by block index pair.
    between: Vec<u8>,
    strong_colour: Option<u8>,
}

impl Grouping {
    /// Assembles a grouping from separated nonempty blocks, reading the
    /// between-block colours off representatives of `p`. Colour constancy is
    /// a [`validate_grouping`] concern, not checked here.
    pub fn from_blocks(blocks: Vec<FiniteSet>, p: &PairColouring) -> Result<Grouping, ExtractError> {
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(ExtractError::Internal(format!("grouping block {i} is empty")));
            }
            if let Some(e) = b.iter().find(|&e| !p.base().contains(e)) {
                return Err(ExtractError::Input(format!("block element {e} outside colouring base")));
            }
            if i + 1 < blocks.len() {
                let hi = b.max_elem().unwrap();
                let lo = blocks[i + 1].min_elem().unwrap_or(0);
                if hi >= lo {
                    return Err(ExtractError::Internal(format!(
                        "grouping blocks {i} and {} are not separated",
                        i + 1
                    )));
                }
            }
        }
        let n = blocks.len();
        let mut between = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                let x = blocks[i].min_elem().unwrap();
                let y = blocks[j].min_elem().unwrap();
                between.push(p.colour(x, y)?);
            }
        }
        let strong_colour = if n >= 2 && between.windows(2).all(|w| w[0] == w[1]) {
            between.first().copied()
        } else {
            None
        };
        Ok(Grouping { blocks, between, strong_colour })
    }

    pub fn blocks(&self) -> &[FiniteSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Recorded colour between blocks `i < j`.
    pub fn between(&self, i: usize, j: usize) -> u8 {
        let n = self.blocks.len();
        self.between[i * n - i * (i + 1) / 2 + (j - i - 1)]
    }

    /// The one colour appearing between all block pairs, when there is one.
    pub fn strong_colour(&self) -> Option<u8> {
        self.strong_colour
    }

    /// The set of block maxima.
    pub fn maxima(&self) -> FiniteSet {
        FiniteSet::from_sorted(self.blocks.iter().map(|b| b.max_elem().unwrap()).collect())
    }

    /// The subgrouping of the given (increasing) block indices.
    pub fn subgrouping(&self, indices: &[usize], p: &PairColouring) -> Result<Grouping, ExtractError> {
        let blocks = indices.iter().map(|&i| self.blocks[i].clone()).collect();
        Grouping::from_blocks(blocks, p)
    }

    /// The union of all blocks.
    pub fn union(&self) -> FiniteSet {
        let mut out = FiniteSet::empty();
        for b in &self.blocks {
            out = out.union(b);
        }
        out
    }
}

/// Checks all grouping clauses: block separation, each block `alpha`-large,
/// the maxima `beta`-large, between-block colour constancy, and agreement
/// with the recorded strong colour when one is present. Returns the first
/// violation found.
pub fn validate_grouping(
    g: &Grouping,
    p: &PairColouring,
    alpha: &Ordinal,
    beta: &Ordinal,
) -> Result<(), GroupingViolation> {
    let blocks = g.blocks();
    for (i, b) in blocks.iter().enumerate() {
        if b.is_empty() {
            return Err(GroupingViolation::EmptyBlock { index: i });
        }
        if let Some(e) = b.iter().find(|&e| !p.base().contains(e)) {
            return Err(GroupingViolation::OutsideBase { index: i, element: e });
        }
        if i + 1 < blocks.len() && b.max_elem().unwrap() >= blocks[i + 1].min_elem().unwrap() {
            return Err(GroupingViolation::NotSeparated { index: i });
        }
        if !is_large(b, alpha) {
            return Err(GroupingViolation::BlockNotLarge { index: i, alpha: alpha.clone() });
        }
    }
    if !blocks.is_empty() && !is_large(&g.maxima(), beta) {
        return Err(GroupingViolation::MaximaNotLarge { beta: beta.clone() });
    }
    if blocks.is_empty() && !beta.is_zero() {
        return Err(GroupingViolation::MaximaNotLarge { beta: beta.clone() });
    }
    for i in 0..blocks.len() {
        for j in (i + 1)..blocks.len() {
            let want = g.between(i, j);
            for x in blocks[i].iter() {
                for y in blocks[j].iter() {
                    let got = p.colour(x, y).expect("blocks checked against base");
                    if got != want {
                        return Err(GroupingViolation::ColourMismatch { i, j, x, y, got, want });
                    }
                }
            }
            if let Some(c) = g.strong_colour() {
                if want != c {
                    return Err(GroupingViolation::StrongMismatch { i, j, got: want, want: c });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::PairColouring;
    use crate::sets::FiniteSet;

    fn set(s: &str) -> FiniteSet {
        FiniteSet::parse(s).unwrap()
    }

    #[test]
    fn single_block_is_vacuously_valid() {
        let p = PairColouring::random(set("3..10"), 2, 1).unwrap();
        let g = Grouping::from_blocks(vec![set("3")], &p).unwrap();
        assert!(validate_grouping(&g, &p, &Ordinal::one(), &Ordinal::one()).is_ok());
        assert_eq!(g.strong_colour(), None);
    }

    #[test]
    fn mixed_cross_colours_fail_clause_four() {
        // P(3, y) differs across block {5, 6}.
        let p = PairColouring::from_fn(set("3, 5, 6"), 2, |x, y| u8::from((x, y) == (3, 6))).unwrap();
        let g = Grouping::from_blocks(vec![set("3"), set("5, 6")], &p).unwrap();
        assert!(matches!(
            validate_grouping(&g, &p, &Ordinal::one(), &Ordinal::one()),
            Err(GroupingViolation::ColourMismatch { .. })
        ));
    }

    #[test]
    fn block_largeness_and_maxima_are_checked() {
        let p = PairColouring::constant(set("3..20"), 2, 0).unwrap();
        let g = Grouping::from_blocks(vec![set("3..6"), set("8..16")], &p).unwrap();
        assert!(validate_grouping(&g, &p, &Ordinal::omega(), &Ordinal::nat(2)).is_ok());
        assert_eq!(g.strong_colour(), Some(0));
        assert_eq!(g.maxima(), set("6, 16"));
        assert!(matches!(
            validate_grouping(&g, &p, &Ordinal::power(2), &Ordinal::nat(2)),
            Err(GroupingViolation::BlockNotLarge { index: 0, .. })
        ));
        assert!(matches!(
            validate_grouping(&g, &p, &Ordinal::omega(), &Ordinal::omega()),
            Err(GroupingViolation::MaximaNotLarge { .. })
        ));
    }

    #[test]
    fn unordered_blocks_are_rejected_at_assembly() {
        let p = PairColouring::constant(set("3..20"), 2, 0).unwrap();
        assert!(Grouping::from_blocks(vec![set("3..8"), set("5..10")], &p).is_err());
        assert!(Grouping::from_blocks(vec![FiniteSet::empty()], &p).is_err());
    }
}
