//! Hereditarily minimal prehomogeneous sequences and the homogeneous-set
//! search built on them.
//!
//! For each element `e` of the base, the sequence `sigma_e` starts at the
//! minimum and repeatedly takes the least later element that agrees with `e`
//! on the colours to everything chosen so far, stopping at `e` itself. The
//! entries before `e` split by colour into the `ho` sets, and
//! `ho(sigma_e, c) + {e}` is homogeneous of colour `c`: these are the
//! candidates the extraction searches.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bounds::{ks_exponent, SPARSE_EXP_MARGIN};
use crate::colouring::{is_homogeneous, PairColouring};
use crate::extract::ExtractError;
use crate::ordinal::Ordinal;
use crate::sets::{is_large, restrict, sparse_subset, FiniteSet};
use crate::Mode;

/// The prehomogeneous record of one element.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HmphRecord {
    /// The element `e` the sequence was built for.
    pub owner: u64,
    /// `sigma_e`, in construction order (which is increasing order).
    pub sigma: FiniteSet,
    /// Colours with nonempty `ho` sets, sorted.
    pub col: Vec<u8>,
    /// For each colour in `col`, the entries of `sigma_e` before `e` whose
    /// colour against `e` is that colour.
    pub ho: BTreeMap<u8, FiniteSet>,
    /// The longest proper prefix whose colour set is strictly smaller;
    /// absent for the base minimum.
    pub sigma_minus: Option<FiniteSet>,
}

/// Computes the prehomogeneous record of every element of `x`.
///
/// `x` must be a subset of the colouring's base; a proper subset is handled
/// by restricting the colouring first.
pub fn hmph(x: &FiniteSet, p: &PairColouring) -> Result<Vec<HmphRecord>, ExtractError> {
    let restricted;
    let p = if x == p.base() {
        p
    } else {
        restricted = p.restrict_to(x)?;
        &restricted
    };
    let elems = x.elements();
    let mut records = Vec::with_capacity(elems.len());
    for &owner in elems {
        let mut sigma = vec![elems[0]];
        while *sigma.last().unwrap() != owner {
            let last = *sigma.last().unwrap();
            // The owner itself always qualifies, so the search cannot fail.
            let next = elems
                .iter()
                .copied()
                .filter(|&y| y > last && y <= owner)
                .find(|&y| {
                    sigma
                        .iter()
                        .all(|&s| p.colour(s, y).unwrap() == p.colour(s, owner).unwrap())
                })
                .expect("owner agrees with itself on every colour");
            sigma.push(next);
        }
        let entry_colours: Vec<u8> = sigma[..sigma.len() - 1]
            .iter()
            .map(|&s| p.colour(s, owner).unwrap())
            .collect();
        let mut ho: BTreeMap<u8, Vec<u64>> = BTreeMap::new();
        for (&s, &c) in sigma.iter().zip(&entry_colours) {
            ho.entry(c).or_default().push(s);
        }
        let ho: BTreeMap<u8, FiniteSet> =
            ho.into_iter().map(|(c, v)| (c, FiniteSet::from_sorted(v))).collect();
        let col: Vec<u8> = ho.keys().copied().collect();
        // The colour set of the length-L prefix is the colours of its first
        // L-1 entries, so the longest strictly-smaller prefix cuts just
        // before the last first occurrence of a colour.
        let sigma_minus = if sigma.len() < 2 {
            None
        } else {
            let mut last_new = 0;
            let mut seen: Vec<bool> = vec![false; 256];
            for (i, &c) in entry_colours.iter().enumerate() {
                if !seen[usize::from(c)] {
                    seen[usize::from(c)] = true;
                    last_new = i;
                }
            }
            Some(FiniteSet::from_sorted(sigma[..last_new + 1].to_vec()))
        };
        records.push(HmphRecord {
            owner,
            sigma: FiniteSet::from_sorted(sigma),
            col,
            ho,
            sigma_minus,
        });
    }
    Ok(records)
}

/// Options for [`ks_homogeneous_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct KsOptions {
    /// Run the bound-faithful preprocessing before searching: peel three
    /// `w^{k+3}`-large segments off the input and extract a sparse core.
    /// This only ever succeeds on inputs far beyond desk scale; the direct
    /// search is strictly more complete, so the default skips it.
    pub proof_preprocessing: bool,
}

/// Searches the prehomogeneous candidates for a `target`-large homogeneous
/// subset, returning the witness and its colour.
///
/// Candidates are `ho(sigma_e, c) + {e}` over all elements and colours, plus
/// the singletons. Among target-large candidates the lexicographically
/// smallest element sequence wins. Strict mode accepts only the omega
/// target, requires `min x >= 3` and the input `w^{k+4}`-large for `k`
/// colours, and then cannot fail; permissive mode reports when no candidate
/// is large enough.
pub fn ks_homogeneous(
    x: &FiniteSet,
    p: &PairColouring,
    target: &Ordinal,
    mode: Mode,
) -> Result<(FiniteSet, u8), ExtractError> {
    ks_homogeneous_with(x, p, target, mode, KsOptions::default())
}

/// [`ks_homogeneous`] with explicit options.
pub fn ks_homogeneous_with(
    x: &FiniteSet,
    p: &PairColouring,
    target: &Ordinal,
    mode: Mode,
    options: KsOptions,
) -> Result<(FiniteSet, u8), ExtractError> {
    x.require_paper_min().map_err(ExtractError::from)?;
    if mode.is_strict() {
        if target.as_power() != Some(1) {
            return Err(ExtractError::Input(
                "strict mode supports the omega target only".into(),
            ));
        }
        let need = Ordinal::power(ks_exponent(u32::from(p.colours())));
        if !is_large(x, &need) {
            return Err(ExtractError::Precondition(format!("input is not {need}-large")));
        }
    }
    let search_set = if options.proof_preprocessing {
        proof_preprocessing(x, p, mode)?
    } else {
        x.clone()
    };
    match candidate_search(&search_set, p, target)? {
        Some(found) => Ok(found),
        None if mode.is_strict() => Err(ExtractError::Internal(format!(
            "strict search found no {target}-large candidate despite the checked precondition"
        ))),
        None => Err(ExtractError::NoCandidate { target: target.clone() }),
    }
}

fn candidate_search(
    x: &FiniteSet,
    p: &PairColouring,
    target: &Ordinal,
) -> Result<Option<(FiniteSet, u8)>, ExtractError> {
    if target.is_zero() {
        return Ok(Some((FiniteSet::empty(), 0)));
    }
    let records = hmph(x, p)?;
    let mut best: Option<(FiniteSet, u8)> = None;
    let mut consider = |cand: FiniteSet, colour: u8| {
        if !is_large(&cand, target) {
            return;
        }
        match &best {
            Some((b, _)) if b.elements() <= cand.elements() => {}
            _ => best = Some((cand, colour)),
        }
    };
    for r in &records {
        consider(FiniteSet::singleton(r.owner), 0);
        for (&c, ho) in &r.ho {
            consider(ho.union(&FiniteSet::singleton(r.owner)), c);
        }
    }
    if let Some((cand, colour)) = &best {
        match is_homogeneous(cand, p)? {
            Some(_) => {}
            None => {
                return Err(ExtractError::Internal(format!(
                    "candidate {cand} is not homogeneous of colour {colour}"
                )))
            }
        }
    }
    Ok(best)
}

/// The bound-faithful preprocessing: split off three `w^{k+3}`-large
/// segments after the minimum, then take a sparse core bridged by one
/// element of the middle segment.
fn proof_preprocessing(
    x: &FiniteSet,
    p: &PairColouring,
    mode: Mode,
) -> Result<FiniteSet, ExtractError> {
    let colours = u32::from(p.colours());
    let segment = Ordinal::power(colours + SPARSE_EXP_MARGIN);
    let rest = x.without_min();
    let s1 = restrict(&rest, &segment)?;
    let after1 = rest.suffix(s1.len());
    let s2 = restrict(&after1, &segment)?;
    let after2 = after1.suffix(s2.len());
    let s3 = restrict(&after2, &segment)?;
    let bridge = s2.max_elem().expect("restricted segments are nonempty");
    let core_input = FiniteSet::singleton(bridge).union(&s3);
    let core = sparse_subset(&core_input, colours, SPARSE_EXP_MARGIN, mode)?;
    Ok(FiniteSet::singleton(s2.min_elem().unwrap()).union(&core))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> FiniteSet {
        FiniteSet::parse(s).unwrap()
    }

    #[test]
    fn constant_colouring_chains() {
        let p = PairColouring::constant(set("3..6"), 2, 0).unwrap();
        let records = hmph(p.base(), &p).unwrap();
        let last = &records[3];
        assert_eq!(last.owner, 6);
        assert_eq!(last.sigma, set("3..6"));
        assert_eq!(last.ho.get(&0).unwrap(), &set("3..5"));
        assert_eq!(last.col, vec![0]);
        // The minimum's record is the bare start of the recursion.
        let first = &records[0];
        assert_eq!(first.sigma, set("3"));
        assert!(first.col.is_empty());
        assert!(first.sigma_minus.is_none());
        // A singleton colour set cuts back to the one-element prefix.
        assert_eq!(last.sigma_minus.as_ref().unwrap(), &set("3"));
    }

    #[test]
    fn prehomogeneity_and_prefix_structure_hold() {
        let base = set("3..30");
        for seed in 0..30 {
            let p = PairColouring::random(base.clone(), 3, seed).unwrap();
            let records = hmph(&base, &p).unwrap();
            let by_owner: BTreeMap<u64, &HmphRecord> =
                records.iter().map(|r| (r.owner, r)).collect();
            for r in &records {
                let s = r.sigma.elements();
                // Prehomogeneity: colours along the sequence match the colour
                // to the owner.
                for i in 0..s.len() {
                    for j in (i + 1)..s.len() {
                        assert_eq!(
                            p.colour(s[i], s[j]).unwrap(),
                            p.colour(s[i], r.owner).unwrap()
                        );
                    }
                }
                // Every proper nonempty prefix is the sequence of its last
                // entry.
                for len in 1..s.len() {
                    let prefix = &s[..len];
                    let owner = prefix[len - 1];
                    assert_eq!(by_owner[&owner].sigma.elements(), prefix);
                }
                // ho sets partition the entries before the owner.
                let mut total = 0;
                for (&c, ho) in &r.ho {
                    total += ho.len();
                    for e in ho.iter() {
                        assert_eq!(p.colour(e, r.owner).unwrap(), c);
                    }
                }
                assert_eq!(total, s.len() - 1);
                // sigma_minus has strictly fewer colours.
                if let Some(sm) = &r.sigma_minus {
                    let sm_owner = sm.max_elem().unwrap();
                    assert!(by_owner[&sm_owner].col.len() < r.col.len());
                    assert_eq!(by_owner[&sm_owner].sigma, *sm);
                }
            }
        }
    }

    #[test]
    fn counting_bound_holds() {
        let base = set("3..40");
        for (seed, colours) in [(0u64, 2u16), (1, 3), (2, 3)] {
            let p = PairColouring::random(base.clone(), colours, seed).unwrap();
            let records = hmph(&base, &p).unwrap();
            for m in 0..10u32 {
                let count = records.iter().filter(|r| r.sigma.len() as u32 <= m).count();
                let bound = u64::from(colours).checked_pow(m).unwrap_or(u64::MAX);
                assert!(
                    (count as u64) <= bound,
                    "counting bound violated: {count} sequences of length <= {m}"
                );
            }
        }
    }

    #[test]
    fn ks_on_constant_colouring_returns_shortest_chain() {
        let p = PairColouring::constant(set("3..38"), 2, 0).unwrap();
        let (w, c) = ks_homogeneous(p.base(), &p, &Ordinal::omega(), Mode::Permissive).unwrap();
        assert_eq!(w, set("3..6"));
        assert_eq!(c, 0);
    }

    #[test]
    fn ks_finds_pairs_for_finite_targets() {
        let p = PairColouring::random(set("3..10"), 2, 11).unwrap();
        let (w, _) = ks_homogeneous(p.base(), &p, &Ordinal::nat(2), Mode::Permissive).unwrap();
        assert_eq!(w.len(), 2);
        assert!(is_homogeneous(&w, &p).unwrap().is_some());
    }

    #[test]
    fn ks_fails_when_no_subset_can_be_large() {
        // |X| = 8 <= min X = 10: no omega-large subset exists at all.
        let p = PairColouring::random(set("10..17"), 2, 1).unwrap();
        assert!(matches!(
            ks_homogeneous(p.base(), &p, &Ordinal::omega(), Mode::Permissive),
            Err(ExtractError::NoCandidate { .. })
        ));
    }

    #[test]
    fn ks_on_threshold_colourings() {
        for t in [5, 20, 35] {
            let p = PairColouring::threshold(set("3..38"), t).unwrap();
            let (w, c) = ks_homogeneous(p.base(), &p, &Ordinal::omega(), Mode::Permissive).unwrap();
            assert!(is_large(&w, &Ordinal::omega()));
            assert_eq!(is_homogeneous(&w, &p).unwrap(), Some(c));
        }
    }

    #[test]
    fn strict_mode_gatekeeping() {
        let p = PairColouring::random(set("3..38"), 2, 0).unwrap();
        // w^6-largeness is unattainable at this size.
        assert!(matches!(
            ks_homogeneous(p.base(), &p, &Ordinal::omega(), Mode::Strict),
            Err(ExtractError::Precondition(_))
        ));
        assert!(matches!(
            ks_homogeneous(p.base(), &p, &Ordinal::power(2), Mode::Strict),
            Err(ExtractError::Input(_))
        ));
        // The proof-faithful preprocessing needs even more room, so it
        // reports the failing restriction.
        let opts = KsOptions { proof_preprocessing: true };
        assert!(ks_homogeneous_with(p.base(), &p, &Ordinal::omega(), Mode::Permissive, opts).is_err());
    }
}
