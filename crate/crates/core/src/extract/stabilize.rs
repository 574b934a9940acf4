//! Colour stabilization against a fixed finite set, from below and above.
//!
//! Given a set `w` entirely below (or above) `x`, successive majority
//! halvings thin `x` to a subset on which the colour against each element of
//! `w` no longer depends on the chosen representative. Each halving costs a
//! factor 4 of largeness coefficient, which is why the strict mode demands
//! `4^|w| <= min x` and an exp-sparse `w^{n+1}`-large input.

use crate::bounds::{EXP_SPARSE_BASE, STABILIZE_MARGIN};
use crate::colouring::PairColouring;
use crate::extract::ExtractError;
use crate::ordinal::Ordinal;
use crate::sets::{is_exp_sparse, is_large, majority_select, FiniteSet};
use crate::Mode;

/// Thins `x` to a subset `Y` with `P(w, y)` constant in `y` for every
/// `w` in `w`; `w` must lie entirely below `x`.
///
/// The construction drops `min x` and runs one majority halving per element
/// of `w` (enumerated increasingly), keeping the whole winning side each
/// time. Strict mode guarantees the result is `w^n`-large; permissive mode
/// retries each halving at coefficient 1 before giving up, and fails when
/// neither side of some halving is even `w^n`-large. Colour constancy is
/// re-checked before returning in both modes.
pub fn stabilize_below(
    w: &FiniteSet,
    x: &FiniteSet,
    p: &PairColouring,
    n: u32,
    mode: Mode,
) -> Result<FiniteSet, ExtractError> {
    stabilize(w, x, p, n, mode, Direction::Below, true)
}

/// Mirror image of [`stabilize_below`]: `w` lies entirely above `x` and the
/// colour `P(y, w)` is stabilized in the left argument.
pub fn stabilize_above(
    x: &FiniteSet,
    w: &FiniteSet,
    p: &PairColouring,
    n: u32,
    mode: Mode,
) -> Result<FiniteSet, ExtractError> {
    stabilize(w, x, p, n, mode, Direction::Above, true)
}

/// Halving selection without the leading drop. The drop funds the ladder
/// coefficients, which zero-margin grouping attempts cannot afford; they
/// validate the surviving blocks instead.
pub(super) fn settle_below(
    w: &FiniteSet,
    x: &FiniteSet,
    p: &PairColouring,
    n: u32,
) -> Result<FiniteSet, ExtractError> {
    stabilize(w, x, p, n, Mode::Permissive, Direction::Below, false)
}

/// See [`settle_below`].
pub(super) fn settle_above(
    x: &FiniteSet,
    w: &FiniteSet,
    p: &PairColouring,
    n: u32,
) -> Result<FiniteSet, ExtractError> {
    stabilize(w, x, p, n, Mode::Permissive, Direction::Above, false)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Below,
    Above,
}

impl Direction {
    fn colour(self, p: &PairColouring, anchor: u64, e: u64) -> Result<u8, ExtractError> {
        Ok(match self {
            Direction::Below => p.colour(anchor, e)?,
            Direction::Above => p.colour(e, anchor)?,
        })
    }
}

fn stabilize(
    w: &FiniteSet,
    x: &FiniteSet,
    p: &PairColouring,
    n: u32,
    mode: Mode,
    dir: Direction,
    drop_min: bool,
) -> Result<FiniteSet, ExtractError> {
    for e in w.iter().chain(x.iter()) {
        if !p.base().contains(e) {
            return Err(ExtractError::Input(format!("element {e} outside colouring base")));
        }
    }
    match (dir, w.max_elem(), x.min_elem(), w.min_elem(), x.max_elem()) {
        (Direction::Below, Some(hi), Some(lo), _, _) if hi >= lo => {
            return Err(ExtractError::Input(format!(
                "stabilizing set must lie below the target set ({hi} >= {lo})"
            )));
        }
        (Direction::Above, _, _, Some(lo), Some(hi)) if hi >= lo => {
            return Err(ExtractError::Input(format!(
                "stabilizing set must lie above the target set ({hi} >= {lo})"
            )));
        }
        _ => {}
    }
    if mode.is_strict() {
        let need = Ordinal::power(n + STABILIZE_MARGIN);
        if !is_large(x, &need) {
            return Err(ExtractError::Precondition(format!("input is not {need}-large")));
        }
        if !is_exp_sparse(x)? {
            return Err(ExtractError::Precondition("input is not exp-sparse".into()));
        }
        let min = x.min_elem().unwrap_or(0);
        let fits = u32::try_from(w.len())
            .ok()
            .and_then(|c| EXP_SPARSE_BASE.checked_pow(c))
            .is_some_and(|bound| bound <= min);
        if !fits {
            return Err(ExtractError::Precondition(format!(
                "4^|w| must not exceed min x = {min} (|w| = {})",
                w.len()
            )));
        }
    }

    let mut y = if drop_min { x.without_min() } else { x.clone() };
    let count = w.len();
    for (i, anchor) in w.iter().enumerate() {
        let mut side0 = Vec::new();
        let mut side1 = Vec::new();
        for e in y.iter() {
            if dir.colour(p, anchor, e)? == 0 {
                side0.push(e);
            } else {
                side1.push(e);
            }
        }
        let side0 = FiniteSet::from_sorted(side0);
        let side1 = FiniteSet::from_sorted(side1);
        // Ladder coefficient 4^(remaining-1); saturates harmlessly since an
        // oversized target just fails over to the retry below.
        let steps_left = (count - i - 1) as u32;
        let k = EXP_SPARSE_BASE.checked_pow(steps_left).unwrap_or(u64::MAX);
        let choice = match majority_select(&side0, &side1, n, k, mode) {
            Ok(c) => c,
            Err(e) if mode.is_strict() => {
                return Err(ExtractError::Stage {
                    stage: format!("stabilize halving {i}"),
                    reason: e.to_string(),
                })
            }
            Err(_) => majority_select(&side0, &side1, n, 1, Mode::Permissive).map_err(|_| {
                ExtractError::Stage {
                    stage: format!("stabilize halving {i}"),
                    reason: format!("no side is w^{n}-large against {anchor}"),
                }
            })?,
        };
        y = if choice.side == 0 { side0 } else { side1 };
    }

    for anchor in w.iter() {
        let mut colours = y.iter().map(|e| dir.colour(p, anchor, e));
        if let Some(first) = colours.next().transpose()? {
            for c in colours {
                if c? != first {
                    return Err(ExtractError::Internal(format!(
                        "stabilized set is not colour-constant against {anchor}"
                    )));
                }
            }
        }
    }
    if mode.is_strict() && !is_large(&y, &Ordinal::power(n)) {
        return Err(ExtractError::Internal(format!(
            "strict stabilization produced a set that is not w^{n}-large"
        )));
    }
    Ok(y)
}
