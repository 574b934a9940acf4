//! Grouping extraction: fixed-length, omega-length, and `w^k`-length
//! groupings.
//!
//! A `(w^n, b)`-grouping is an ordered family of `w^n`-large blocks whose
//! maxima form a `b`-large set, with the pair colour constant between any
//! two fixed blocks. Fixed-length groupings come from two stabilization
//! passes over a block decomposition; omega-length groupings compose two
//! fixed ones; higher powers recurse blockwise.
//!
//! Permissive mode keeps the same shape but walks the headroom down: the
//! block decomposition margin, the elevation of the first stage, and the
//! level ladder all shrink until an attempt validates or everything is
//! exhausted. Strict mode uses the stated margins only.

use crate::bounds::{GROUPING_FIXED_MARGIN, GROUPING_LEVEL_MARGIN};
use crate::colouring::PairColouring;
use crate::extract::{validate_grouping, ExtractError, Grouping};
use crate::ordinal::Ordinal;
use crate::sets::{is_exp_sparse, is_large, partition_decompose, restrict, FiniteSet};
use crate::Mode;

use super::stabilize::{settle_above, settle_below, stabilize_above, stabilize_below};

fn check_strict_entry(x: &FiniteSet, exponent: u32) -> Result<(), ExtractError> {
    let need = Ordinal::power(exponent);
    if !is_large(x, &need) {
        return Err(ExtractError::Precondition(format!("input is not {need}-large")));
    }
    if !is_exp_sparse(x)? {
        return Err(ExtractError::Precondition("input is not exp-sparse".into()));
    }
    Ok(())
}

/// Extracts a `(w^n, d)`-grouping with exactly `d` blocks.
///
/// Strict mode needs the input `w^{n+3}`-large, exp-sparse, and `d <= min x`.
/// The two-phase construction splits off `min x`, decomposes the rest into
/// `d` consecutive blocks two powers above the target, stabilizes each block
/// from below against everything preceding it, then from above against the
/// minima of the later blocks.
pub fn grouping_fixed(
    x: &FiniteSet,
    p: &PairColouring,
    n: u32,
    d: u64,
    mode: Mode,
) -> Result<Grouping, ExtractError> {
    x.require_paper_min().map_err(ExtractError::from)?;
    if mode.is_strict() {
        check_strict_entry(x, n + GROUPING_FIXED_MARGIN)?;
        if d > x.min_elem().unwrap_or(0) {
            return Err(ExtractError::Precondition(format!(
                "block count {d} exceeds min x = {}",
                x.min_elem().unwrap_or(0)
            )));
        }
    }
    if d == 0 {
        return Grouping::from_blocks(Vec::new(), p);
    }
    let margins: &[u32] = if mode.is_strict() { &[2] } else { &[2, 1, 0] };
    let mut last_err = None;
    for &s in margins {
        match fixed_attempt(x, p, n, d, s, mode) {
            Ok(g) => return Ok(g),
            Err(e) => last_err = Some(e),
        }
    }
    let last = last_err.expect("at least one margin attempted");
    if mode.is_strict() {
        Err(last)
    } else {
        Err(ExtractError::Stage {
            stage: "grouping-fixed".into(),
            reason: format!("all margins exhausted; last: {last}"),
        })
    }
}

fn fixed_attempt(
    x: &FiniteSet,
    p: &PairColouring,
    n: u32,
    d: u64,
    margin: u32,
    mode: Mode,
) -> Result<Grouping, ExtractError> {
    let body = x.without_min();
    if (body.len() as u64) < d {
        return Err(ExtractError::Precondition(format!(
            "cannot split {} elements into {d} blocks",
            body.len()
        )));
    }
    let parts = vec![Ordinal::power(n + margin); d as usize];
    let blocks = partition_decompose(&body, &parts)?;

    // Phase one: make each block's colours constant from below, against every
    // input element preceding it. With no margin left the leading drop of
    // the stabilization is unaffordable, so the halvings run bare.
    let below_level = n + margin.saturating_sub(1);
    let mut stabilized = vec![blocks[0].clone()];
    for i in 1..blocks.len() {
        let anchors = x.window(0, blocks[i - 1].max_elem().unwrap());
        let y = if margin == 0 {
            settle_below(&anchors, &blocks[i], p, below_level)?
        } else {
            stabilize_below(&anchors, &blocks[i], p, below_level, mode)?
        };
        stabilized.push(y);
    }

    // Phase two: constant from above, against the minima of the later blocks.
    let count = stabilized.len();
    let mut final_blocks = stabilized.clone();
    for i in 0..count.saturating_sub(1) {
        let anchors =
            FiniteSet::from_sorted(stabilized[i + 1..].iter().map(|b| b.min_elem().unwrap()).collect());
        final_blocks[i] = if margin == 0 {
            settle_above(&stabilized[i], &anchors, p, n)?
        } else {
            stabilize_above(&stabilized[i], &anchors, p, n, mode)?
        };
    }

    let g = Grouping::from_blocks(final_blocks, p)?;
    match validate_grouping(&g, p, &Ordinal::power(n), &Ordinal::nat(d)) {
        Ok(()) => Ok(g),
        Err(v) if mode.is_strict() => Err(ExtractError::Internal(format!(
            "strict fixed grouping failed validation: {v}"
        ))),
        Err(v) => Err(ExtractError::Stage {
            stage: "grouping-fixed validation".into(),
            reason: v.to_string(),
        }),
    }
}

/// Extracts a `(w^n, w)`-grouping: one fixed grouping of length two, then a
/// second of length `max Y_0` inside the upper block, so the maxima set is
/// exactly omega-large.
///
/// Strict mode needs `w^{n+6}`-largeness and exp-sparseness; permissive mode
/// lowers the elevation of the first stage from 3 to 0 until something
/// validates.
pub fn grouping_omega(
    x: &FiniteSet,
    p: &PairColouring,
    n: u32,
    mode: Mode,
) -> Result<Grouping, ExtractError> {
    x.require_paper_min().map_err(ExtractError::from)?;
    if mode.is_strict() {
        check_strict_entry(x, n + 2 * GROUPING_FIXED_MARGIN)?;
    }
    let elevations: &[u32] = if mode.is_strict() {
        &[GROUPING_FIXED_MARGIN]
    } else {
        &[3, 2, 1, 0]
    };
    let mut last_err = None;
    for &t in elevations {
        match omega_attempt(x, p, n, t, mode) {
            Ok(g) => return Ok(g),
            Err(e) => last_err = Some(e),
        }
    }
    let last = last_err.expect("at least one elevation attempted");
    if mode.is_strict() {
        Err(last)
    } else {
        Err(ExtractError::Stage {
            stage: "grouping-omega".into(),
            reason: format!("all elevations exhausted; last: {last}"),
        })
    }
}

fn omega_attempt(
    x: &FiniteSet,
    p: &PairColouring,
    n: u32,
    elevation: u32,
    mode: Mode,
) -> Result<Grouping, ExtractError> {
    let first = grouping_fixed(x, p, n + elevation, 2, mode)?;
    let lead = first.blocks()[0].clone();
    let upper = first.blocks()[1].clone();
    let d = lead.max_elem().expect("blocks are nonempty");
    let second = grouping_fixed(&upper, p, n, d, mode)?;
    let mut blocks = vec![lead];
    blocks.extend(second.blocks().iter().cloned());
    let g = Grouping::from_blocks(blocks, p)?;
    match validate_grouping(&g, p, &Ordinal::power(n), &Ordinal::omega()) {
        Ok(()) => Ok(g),
        Err(v) if mode.is_strict() => Err(ExtractError::Internal(format!(
            "strict omega grouping failed validation: {v}"
        ))),
        Err(v) => Err(ExtractError::Stage {
            stage: "grouping-omega validation".into(),
            reason: v.to_string(),
        }),
    }
}

/// Extracts a `(w^n, w^k)`-grouping.
///
/// `k = 0` is a single restricted block, `k = 1` is [`grouping_omega`], and
/// higher `k` takes an omega-length grouping six powers up per remaining
/// level, refines every block after the first with a `(w^n, w^{k-1})`
/// grouping, and concatenates.
pub fn grouping(
    x: &FiniteSet,
    p: &PairColouring,
    n: u32,
    k: u32,
    mode: Mode,
) -> Result<Grouping, ExtractError> {
    x.require_paper_min().map_err(ExtractError::from)?;
    match k {
        0 => {
            let block = restrict(x, &Ordinal::power(n))?;
            let g = Grouping::from_blocks(vec![block], p)?;
            validate_grouping(&g, p, &Ordinal::power(n), &Ordinal::one())
                .map_err(|v| ExtractError::Internal(format!("trivial grouping invalid: {v}")))?;
            Ok(g)
        }
        1 => grouping_omega(x, p, n, mode),
        _ => {
            if mode.is_strict() {
                check_strict_entry(x, n + GROUPING_LEVEL_MARGIN * k)?;
                return levels_attempt(x, p, n, k, GROUPING_LEVEL_MARGIN * (k - 1), mode);
            }
            let mut last_err = None;
            for e in (0..=GROUPING_LEVEL_MARGIN * (k - 1)).rev() {
                match levels_attempt(x, p, n, k, e, mode) {
                    Ok(g) => return Ok(g),
                    Err(err) => last_err = Some(err),
                }
            }
            let last = last_err.expect("at least one elevation attempted");
            Err(ExtractError::Stage {
                stage: format!("grouping level {k}"),
                reason: format!("all elevations exhausted; last: {last}"),
            })
        }
    }
}

fn levels_attempt(
    x: &FiniteSet,
    p: &PairColouring,
    n: u32,
    k: u32,
    elevation: u32,
    mode: Mode,
) -> Result<Grouping, ExtractError> {
    let outer = grouping_omega(x, p, n + elevation, mode)?;
    let mut blocks = vec![outer.blocks()[0].clone()];
    for inner_block in &outer.blocks()[1..] {
        let refined = grouping(inner_block, p, n, k - 1, mode)?;
        blocks.extend(refined.blocks().iter().cloned());
    }
    let g = Grouping::from_blocks(blocks, p)?;
    match validate_grouping(&g, p, &Ordinal::power(n), &Ordinal::power(k)) {
        Ok(()) => Ok(g),
        Err(v) if mode.is_strict() => Err(ExtractError::Internal(format!(
            "strict level-{k} grouping failed validation: {v}"
        ))),
        Err(v) => Err(ExtractError::Stage {
            stage: format!("grouping level {k} validation"),
            reason: v.to_string(),
        }),
    }
}
