//! The composed two-colour pipeline: sparse core, transitive subset,
//! homogeneous chain.

use crate::bounds::{ads_exponent, rt22_exponent, EM_FACTOR, SPARSE_EXP_MARGIN};
use crate::colouring::{is_homogeneous, PairColouring};
use crate::extract::{ads_homogeneous, em_transitive_subset, ExtractError};
use crate::ordinal::Ordinal;
use crate::sets::{is_large, sparse_subset, FiniteSet};
use crate::Mode;

/// A homogeneous witness with the pipeline's stage log.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rt22Result {
    pub witness: FiniteSet,
    pub colour: u8,
    pub stages: Vec<String>,
}

/// Extracts a `w^n`-large homogeneous subset for an arbitrary 2-colouring.
///
/// The pipeline sparsifies, extracts a transitive subset, then extracts a
/// homogeneous chain. Strict mode requires the input
/// `(w^{(4n+4)*36+3}+1)`-large and runs every stage at its stated level.
/// Permissive mode skips the sparsifying stage when its precondition is out
/// of reach (its only role is to enable the majority bounds, which the
/// permissive stages revalidate anyway) and walks the transitive-subset
/// level down from `4n+4` to `n`, the least level that can still feed the
/// final stage. Each stage is recorded in the result; failures name the
/// stage that gave out.
pub fn rt22_homogeneous(
    x: &FiniteSet,
    p: &PairColouring,
    n: u32,
    mode: Mode,
) -> Result<Rt22Result, ExtractError> {
    x.require_paper_min().map_err(ExtractError::from)?;
    if p.colours() != 2 {
        return Err(ExtractError::Input(format!(
            "the pipeline needs 2 colours, got {}",
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
    let sparse_level = ads_exponent(n) * EM_FACTOR;
    let precondition = Ordinal::power(rt22_exponent(n))
        .sum(&Ordinal::one())
        .expect("power + 1");
    if mode.is_strict() && !is_large(x, &precondition) {
        return Err(ExtractError::Precondition(format!(
            "input is not ({precondition})-large"
        )));
    }

    let mut stages = Vec::new();
    let sparse_core = if is_large(x, &precondition) {
        let core = sparse_subset(x, sparse_level, SPARSE_EXP_MARGIN, mode).map_err(|e| {
            ExtractError::Stage { stage: "sparse core".into(), reason: e.to_string() }
        })?;
        stages.push(format!("sparse core at w^{sparse_level}: {} elements", core.len()));
        core
    } else {
        // Only reachable permissively; sparsifying below the stated level
        // would just discard largeness the later stages need.
        stages.push(format!(
            "sparse core skipped: input is not ({precondition})-large"
        ));
        x.clone()
    };

    let em_target = ads_exponent(n);
    let mut transitive = None;
    if mode.is_strict() {
        let r = em_transitive_subset(&sparse_core, p, em_target, mode)?;
        stages.push(format!("transitive subset at level {em_target}"));
        stages.extend(r.stages.into_iter().map(|s| format!("  {s}")));
        transitive = Some(r.subset);
    } else {
        let mut last_reason = String::new();
        for level in (n..=em_target).rev() {
            match em_transitive_subset(&sparse_core, p, level, Mode::Permissive) {
                Ok(r) => {
                    stages.push(format!("transitive subset at level {level}"));
                    stages.extend(r.stages.into_iter().map(|s| format!("  {s}")));
                    transitive = Some(r.subset);
                    break;
                }
                Err(e) => last_reason = e.to_string(),
            }
        }
        if transitive.is_none() {
            return Err(ExtractError::Stage {
                stage: "transitive subset".into(),
                reason: format!(
                    "no level from {em_target} down to {n} succeeded; last: {last_reason}"
                ),
            });
        }
    }
    let transitive = transitive.expect("set above");

    let target = Ordinal::power(n);
    let (witness, colour) =
        ads_homogeneous(&transitive, p, &target, mode).map_err(|e| match e {
            ExtractError::Precondition(r) => ExtractError::Precondition(r),
            other => ExtractError::Stage {
                stage: "homogeneous chain".into(),
                reason: other.to_string(),
            },
        })?;
    stages.push(format!("homogeneous chain: {} elements, colour {colour}", witness.len()));

    if is_homogeneous(&witness, p)?.is_none() || !is_large(&witness, &target) {
        return Err(ExtractError::Internal(format!(
            "pipeline witness failed validation against {target}"
        )));
    }
    Ok(Rt22Result { witness, colour, stages })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> FiniteSet {
        FiniteSet::parse(s).unwrap()
    }

    #[test]
    fn constant_colourings_pass_the_pipeline() {
        for colour in 0..2 {
            let p = PairColouring::constant(set("3..38"), 2, colour).unwrap();
            let r = rt22_homogeneous(p.base(), &p, 1, Mode::Permissive).unwrap();
            assert!(is_large(&r.witness, &Ordinal::omega()));
            assert_eq!(is_homogeneous(&r.witness, &p).unwrap(), Some(colour));
            assert!(r.stages.iter().any(|s| s.contains("skipped")));
        }
    }

    #[test]
    fn threshold_colourings_pass_the_pipeline() {
        for t in [5, 20, 35] {
            let p = PairColouring::threshold(set("3..38"), t).unwrap();
            let r = rt22_homogeneous(p.base(), &p, 1, Mode::Permissive).unwrap();
            assert!(is_large(&r.witness, &Ordinal::omega()));
            assert!(is_homogeneous(&r.witness, &p).unwrap().is_some());
        }
    }

    #[test]
    fn random_colourings_validate_or_fail_with_stage() {
        let x = set("3..38");
        for seed in 0..20 {
            let p = PairColouring::random(x.clone(), 2, seed).unwrap();
            match rt22_homogeneous(&x, &p, 1, Mode::Permissive) {
                Ok(r) => {
                    assert!(is_large(&r.witness, &Ordinal::omega()));
                    assert!(is_homogeneous(&r.witness, &p).unwrap().is_some());
                }
                Err(ExtractError::Stage { stage, .. }) => {
                    assert!(!stage.is_empty());
                }
                Err(e) => panic!("unexpected error: {e}"),
            }
        }
    }

    #[test]
    fn strict_mode_cites_the_full_bound() {
        let p = PairColouring::constant(set("3..38"), 2, 0).unwrap();
        match rt22_homogeneous(p.base(), &p, 1, Mode::Strict) {
            Err(ExtractError::Precondition(msg)) => {
                assert!(msg.contains("w^291 + 1"), "message was: {msg}");
            }
            other => panic!("expected precondition error, got {other:?}"),
        }
    }
}
