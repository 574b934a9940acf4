//! Homogeneous chains for transitive colourings.
//!
//! For a transitive 2-colouring the homogeneous sets are exactly the
//! monochromatic chains, so extraction is a search over chains weighted by
//! the residual ordinal of the target. When the target's maximal coefficient
//! is below the minimum of the set, keeping only the minimal residual per
//! endpoint is a sound dominance rule and a forward pass decides
//! feasibility; otherwise an exact memoized backtracking search runs
//! instead. Witnesses are lexicographically smallest in both regimes.

use std::collections::HashSet;

use crate::bounds::ads_exponent;
use crate::colouring::{is_homogeneous, is_transitive, PairColouring};
use crate::extract::ExtractError;
use crate::ordinal::Ordinal;
use crate::sets::{is_large, FiniteSet};
use crate::Mode;

/// True when the interval `[x, y]` carries an `a`-large homogeneous set of
/// colour `colour` containing both endpoints (and `P(x, y)` is that colour).
///
/// This is the interval classification the chain argument colours intervals
/// with; it is exposed for diagnostics.
pub fn is_long(
    x: u64,
    y: u64,
    colour: u8,
    a: &Ordinal,
    p: &PairColouring,
) -> Result<bool, ExtractError> {
    if !is_transitive(p)? {
        return Err(ExtractError::NotTransitive);
    }
    if x >= y {
        return Err(ExtractError::Input(format!("need x < y, got {x} >= {y}")));
    }
    if p.colour(x, y)? != colour {
        return Ok(false);
    }
    let window = p.base().window(x, y);
    let elems = window.elements();
    let start = window.position(x).expect("x is in the window");
    let end = window.position(y).expect("y is in the window");
    let mut failed = HashSet::new();
    let res = a.step(x);
    Ok(reach_endpoint(elems, p, colour, start, end, &res, &mut Vec::new(), &mut failed).is_some())
}

/// Depth-first search for a chain from `from` to exactly `end` whose
/// residual hits zero; returns the chain's interior in lexicographic order.
fn reach_endpoint(
    elems: &[u64],
    p: &PairColouring,
    colour: u8,
    from: usize,
    end: usize,
    res: &Ordinal,
    chain: &mut Vec<u64>,
    failed: &mut HashSet<(usize, Ordinal)>,
) -> Option<Vec<u64>> {
    if from == end {
        return res.is_zero().then(|| chain.clone());
    }
    if failed.contains(&(from, res.clone())) {
        return None;
    }
    for j in (from + 1)..=end {
        if p.colour(elems[from], elems[j]).expect("window pairs") != colour {
            continue;
        }
        let next = res.step(elems[j]);
        chain.push(elems[j]);
        if let Some(found) = reach_endpoint(elems, p, colour, j, end, &next, chain, failed) {
            return Some(found);
        }
        chain.pop();
    }
    failed.insert((from, res.clone()));
    None
}

/// Extracts a `target`-large homogeneous subset of a transitive 2-colouring,
/// returning the witness chain and its colour.
///
/// Strict mode accepts targets of the form `w^n` and requires the input
/// `w^{4n+4}`-large, under which success is guaranteed; permissive mode
/// reports failure when no chain reaches the target. The search itself is
/// exact in both modes.
pub fn ads_homogeneous(
    x: &FiniteSet,
    p: &PairColouring,
    target: &Ordinal,
    mode: Mode,
) -> Result<(FiniteSet, u8), ExtractError> {
    x.require_paper_min().map_err(ExtractError::from)?;
    let restricted;
    let p = if x == p.base() {
        p
    } else {
        restricted = p.restrict_to(x)?;
        &restricted
    };
    if !is_transitive(p)? {
        return Err(ExtractError::NotTransitive);
    }
    if mode.is_strict() {
        let n = target.as_power().ok_or_else(|| {
            ExtractError::Input("strict mode supports power-of-omega targets only".into())
        })?;
        let need = Ordinal::power(ads_exponent(n));
        if !is_large(x, &need) {
            return Err(ExtractError::Precondition(format!("input is not {need}-large")));
        }
    }
    if target.is_zero() {
        return Ok((FiniteSet::empty(), 0));
    }
    let mut best: Option<(FiniteSet, u8)> = None;
    for colour in 0..2u8 {
        if let Some(chain) = chain_search(x, p, colour, target) {
            match &best {
                Some((b, _)) if b.elements() <= chain.elements() => {}
                _ => best = Some((chain, colour)),
            }
        }
    }
    match best {
        Some((witness, colour)) => {
            if is_homogeneous(&witness, p)?.is_none() || !is_large(&witness, target) {
                return Err(ExtractError::Internal(format!(
                    "chain {witness} failed homogeneity or {target}-largeness"
                )));
            }
            let colour = if witness.len() < 2 { 0 } else { colour };
            Ok((witness, colour))
        }
        None if mode.is_strict() => Err(ExtractError::Internal(format!(
            "strict chain search found no {target}-large chain despite the checked precondition"
        ))),
        None => Err(ExtractError::NoCandidate { target: target.clone() }),
    }
}

/// Lexicographically smallest `target`-large chain of one colour, if any.
fn chain_search(
    x: &FiniteSet,
    p: &PairColouring,
    colour: u8,
    target: &Ordinal,
) -> Option<FiniteSet> {
    let elems = x.elements();
    let dominance_sound = target.max_coeff() < x.min_elem().unwrap_or(0);
    if dominance_sound {
        dp_search(elems, p, colour, target)
    } else {
        dfs_search(elems, p, colour, target)
    }
    .map(FiniteSet::from_sorted)
}

/// Minimal residual per endpoint after any chain of the colour ending there,
/// seeded from `(start_res, start_idx)` or from all starts.
fn dp_pass(
    elems: &[u64],
    p: &PairColouring,
    colour: u8,
    target: &Ordinal,
    seed: Option<(usize, Ordinal)>,
) -> Vec<Option<Ordinal>> {
    let n = elems.len();
    let mut best: Vec<Option<Ordinal>> = vec![None; n];
    let merge = |slot: &mut Option<Ordinal>, candidate: Ordinal| {
        if slot.as_ref().is_none_or(|old| candidate < *old) {
            *slot = Some(candidate);
        }
    };
    let first = match &seed {
        Some((i, res)) => {
            best[*i] = Some(res.clone());
            *i
        }
        None => 0,
    };
    for i in first..n {
        if seed.is_none() {
            merge(&mut best[i], target.step(elems[i]));
        }
        let Some(res) = best[i].clone() else { continue };
        for j in (i + 1)..n {
            if p.colour(elems[i], elems[j]).expect("pairs in base") == colour {
                merge(&mut best[j], res.step(elems[j]));
            }
        }
    }
    best
}

fn dp_feasible(best: &[Option<Ordinal>]) -> bool {
    best.iter().flatten().any(|r| r.is_zero())
}

/// Dominance-DP search with lexicographically greedy reconstruction: fix the
/// smallest viable start, then repeatedly the smallest viable extension.
fn dp_search(
    elems: &[u64],
    p: &PairColouring,
    colour: u8,
    target: &Ordinal,
) -> Option<Vec<u64>> {
    if !dp_feasible(&dp_pass(elems, p, colour, target, None)) {
        return None;
    }
    let feasible_from = |i: usize, res: &Ordinal| -> bool {
        res.is_zero() || dp_feasible(&dp_pass(elems, p, colour, target, Some((i, res.clone()))))
    };
    let mut chain = Vec::new();
    let mut at = usize::MAX;
    let mut res = target.clone();
    loop {
        let lo = if at == usize::MAX { 0 } else { at + 1 };
        let mut advanced = false;
        for j in lo..elems.len() {
            if at != usize::MAX && p.colour(elems[at], elems[j]).expect("pairs") != colour {
                continue;
            }
            let next = res.step(elems[j]);
            if feasible_from(j, &next) {
                chain.push(elems[j]);
                at = j;
                res = next;
                advanced = true;
                break;
            }
        }
        debug_assert!(advanced, "feasible state must extend");
        if !advanced {
            return None;
        }
        if res.is_zero() {
            return Some(chain);
        }
    }
}

/// Exact fallback: depth-first over chains in lexicographic order with
/// failed `(endpoint, residual)` states memoized.
fn dfs_search(
    elems: &[u64],
    p: &PairColouring,
    colour: u8,
    target: &Ordinal,
) -> Option<Vec<u64>> {
    let mut failed: HashSet<(usize, Ordinal)> = HashSet::new();
    fn rec(
        elems: &[u64],
        p: &PairColouring,
        colour: u8,
        at: usize,
        res: &Ordinal,
        chain: &mut Vec<u64>,
        failed: &mut HashSet<(usize, Ordinal)>,
    ) -> bool {
        if res.is_zero() {
            return true;
        }
        if failed.contains(&(at, res.clone())) {
            return false;
        }
        for j in (at + 1)..elems.len() {
            if p.colour(elems[at], elems[j]).expect("pairs") != colour {
                continue;
            }
            let next = res.step(elems[j]);
            chain.push(elems[j]);
            if rec(elems, p, colour, j, &next, chain, failed) {
                return true;
            }
            chain.pop();
        }
        failed.insert((at, res.clone()));
        false
    }
    for i in 0..elems.len() {
        let mut chain = vec![elems[i]];
        let res = target.step(elems[i]);
        if res.is_zero() || rec(elems, p, colour, i, &res, &mut chain, &mut failed) {
            return Some(chain);
        }
    }
    None
}
