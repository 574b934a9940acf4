//! Transitive-subset extraction for 2-colourings.
//!
//! Level 1 is a homogeneous set (trivially transitive). Higher levels build
//! a grouping, pick a strong subgrouping by running the homogeneous-set
//! search on the block maxima under the induced colouring, recurse inside
//! the chosen blocks, and glue: cross-block pairs all carry the strong
//! colour, so transitivity of the parts lifts to the union.

use crate::bounds::{em_exponent, grouping_exponent};
use crate::colouring::{is_transitive, PairColouring};
use crate::extract::{grouping, ks_homogeneous, ExtractError, Grouping};
use crate::ordinal::Ordinal;
use crate::sets::{is_exp_sparse, is_large, FiniteSet};
use crate::Mode;

/// Beta exponent of the grouping used by the strong-subgrouping step.
const SUBGROUPING_BETA: u32 = 6;

/// A transitive subset together with the stages that produced it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EmResult {
    pub subset: FiniteSet,
    pub stages: Vec<String>,
}

/// Extracts a `w^n`-large subset on which the colouring is transitive.
///
/// Strict mode requires the input `w^{36(n-1)+6}`-large and exp-sparse for
/// `n >= 1` and runs the grouping route as stated. Permissive mode tries the
/// grouping route and, when any of its stages fails at desk scale, falls
/// back to searching for a `w^n`-large homogeneous set directly, which is
/// transitive for free. The output is validated for transitivity and target
/// largeness either way.
pub fn em_transitive_subset(
    x: &FiniteSet,
    p: &PairColouring,
    n: u32,
    mode: Mode,
) -> Result<EmResult, ExtractError> {
    x.require_paper_min().map_err(ExtractError::from)?;
    if p.colours() != 2 {
        return Err(ExtractError::Input(format!(
            "transitive-subset extraction needs 2 colours, got {}",
            p.colours()
        )));
    }
    let restricted;
    let p = if x == p.base() {
        p
    } else {
        restricted = p.restrict_to(x)?;
        &restricted
    };
    if mode.is_strict() && n >= 1 {
        let need = Ordinal::power(em_exponent(n));
        if !is_large(x, &need) {
            return Err(ExtractError::Precondition(format!("input is not {need}-large")));
        }
        if !is_exp_sparse(x)? {
            return Err(ExtractError::Precondition("input is not exp-sparse".into()));
        }
    }
    let mut stages = Vec::new();
    let subset = match n {
        0 => {
            stages.push("trivial: singleton".into());
            FiniteSet::singleton(x.min_elem().ok_or_else(|| ExtractError::Input("empty input".into()))?)
        }
        1 => {
            stages.push("homogeneous search at omega".into());
            ks_homogeneous(x, p, &Ordinal::omega(), mode)?.0
        }
        _ => match grouping_route(x, p, n, mode) {
            Ok((subset, mut route_stages)) => {
                stages.append(&mut route_stages);
                subset
            }
            Err(e) if mode.is_strict() => return Err(e),
            Err(e) => {
                stages.push(format!("grouping route failed ({e}); homogeneous fallback"));
                let target = Ordinal::power(n);
                let (subset, _) = ks_homogeneous(x, p, &target, Mode::Permissive).map_err(|_| {
                    ExtractError::Stage {
                        stage: format!("transitive subset at level {n}"),
                        reason: format!(
                            "grouping route failed ({e}) and no {target}-large homogeneous set exists"
                        ),
                    }
                })?;
                subset
            }
        },
    };
    validate(x, p, n, &subset)?;
    Ok(EmResult { subset, stages })
}

fn validate(
    x: &FiniteSet,
    p: &PairColouring,
    n: u32,
    subset: &FiniteSet,
) -> Result<(), ExtractError> {
    if !subset.is_subset_of(x) {
        return Err(ExtractError::Internal("result is not a subset of the input".into()));
    }
    if !is_large(subset, &Ordinal::power(n)) {
        return Err(ExtractError::Internal(format!("result is not w^{n}-large")));
    }
    if subset.len() >= 2 && !is_transitive(&p.restrict_to(subset)?)? {
        return Err(ExtractError::Internal("colouring is not transitive on the result".into()));
    }
    Ok(())
}

fn grouping_route(
    x: &FiniteSet,
    p: &PairColouring,
    n: u32,
    mode: Mode,
) -> Result<(FiniteSet, Vec<String>), ExtractError> {
    let alpha_exponent = em_exponent(n - 1);
    let mut stages = vec![format!(
        "grouping at w^{alpha_exponent} with w^{SUBGROUPING_BETA} maxima (needs w^{})",
        grouping_exponent(alpha_exponent, SUBGROUPING_BETA)
    )];
    let g = grouping(x, p, alpha_exponent, SUBGROUPING_BETA, mode)?;
    let strong = strong_subgrouping(&g, p, mode)?;
    stages.push(format!(
        "strong subgrouping with {} blocks, colour {}",
        strong.len(),
        strong.strong_colour().map_or_else(|| "-".into(), |c| c.to_string())
    ));
    // Recurse inside the blocks; the first contributes only its maximum.
    let blocks = strong.blocks();
    let mut out = FiniteSet::empty();
    for (j, block) in blocks.iter().enumerate() {
        let inner = em_transitive_subset(block, p, n - 1, mode)?;
        if j == 0 {
            out = out.union(&FiniteSet::singleton(inner.subset.max_elem().expect("nonempty")));
        } else {
            out = out.union(&inner.subset);
        }
    }
    stages.push(format!("glued {} blockwise subsets", blocks.len()));
    if !is_large(&out, &Ordinal::power(n)) {
        return Err(ExtractError::Stage {
            stage: "transitive glue".into(),
            reason: format!("glued set is not w^{n}-large"),
        });
    }
    Ok((out, stages))
}

/// Runs the homogeneous-set search on the block maxima under the colouring
/// they induce, and keeps the matching blocks: between those blocks every
/// pair has the one colour the maxima agreed on.
fn strong_subgrouping(
    g: &Grouping,
    p: &PairColouring,
    mode: Mode,
) -> Result<Grouping, ExtractError> {
    let maxima = g.maxima();
    let block_of = |e: u64| maxima.position(e).expect("maxima are block maxima");
    let induced = PairColouring::from_fn(maxima.clone(), 2, |a, b| g.between(block_of(a), block_of(b)))?;
    let (chosen, _) = ks_homogeneous(&maxima, &induced, &Ordinal::omega(), mode)?;
    let indices: Vec<usize> = chosen.iter().map(block_of).collect();
    let sub = g.subgrouping(&indices, p)?;
    if sub.len() >= 2 && sub.strong_colour().is_none() {
        return Err(ExtractError::Internal(
            "subgrouping selected by a homogeneous maxima set is not strong".into(),
        ));
    }
    Ok(sub)
}
