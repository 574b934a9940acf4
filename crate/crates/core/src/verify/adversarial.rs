//! Backtracking search for colourings with no large homogeneous subset.

use crate::colouring::PairColouring;
use crate::ordinal::Ordinal;
use crate::sets::{is_large, FiniteSet};
use crate::verify::{homogeneous_exists, VerifyError};

/// How the returned colouring was re-checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verification {
    /// `homogeneous_exists` confirmed there is no large homogeneous subset.
    Exact,
    /// The exact re-check ran out of budget; the colouring is still a valid
    /// output of the (sound) search, but only spot-checked.
    Budgeted,
}

/// Outcome of [`adversarial_colouring`].
#[derive(Clone, Debug, PartialEq)]
pub struct AdversarialReport {
    /// A colouring of the full base admitting no `a`-large homogeneous
    /// subset, if one was found.
    pub colouring: Option<PairColouring>,
    /// Whether the search space was exhausted; when false, absence proves
    /// nothing.
    pub complete: bool,
    /// Present when a colouring was found.
    pub verification: Option<Verification>,
}

/// Searches for a `k`-colouring of pairs from `x` with no `a`-large
/// homogeneous subset.
///
/// Pairs are assigned in lexicographic order, each assignment immediately
/// checked: if it completes an `a`-large monochromatic set among the already
/// assigned pairs, the branch dies. The search is exact up to `budget`
/// assignment steps; outputs are re-verified before being returned.
pub fn adversarial_colouring(
    x: &FiniteSet,
    k: u16,
    a: &Ordinal,
    budget: u64,
) -> Result<AdversarialReport, VerifyError> {
    if k == 0 || k > 256 {
        return Err(VerifyError::Input(format!("colour count {k} out of range")));
    }
    // Sets of at most one element are homogeneous under every colouring, so
    // targets they reach are unavoidable.
    let unavoidable = a.is_zero()
        || x.min_elem().is_some_and(|m| is_large(&FiniteSet::singleton(m), a));
    if unavoidable {
        return Ok(AdversarialReport { colouring: None, complete: true, verification: None });
    }
    let elems = x.elements();
    let pair_count = elems.len() * elems.len().saturating_sub(1) / 2;
    let pairs: Vec<(usize, usize)> = (0..elems.len())
        .flat_map(|i| ((i + 1)..elems.len()).map(move |j| (i, j)))
        .collect();
    let mut search = Search {
        elems,
        a,
        k: k as u8,
        colours: vec![0u8; pair_count],
        pairs: &pairs,
        nodes: 0,
        budget,
    };
    match search.assign(0) {
        Outcome::Found => {
            let table = search.colours.clone();
            let pairs_ref = &pairs;
            let elems_ref = elems;
            let colouring = PairColouring::from_fn(x.clone(), k, |px, py| {
                let i = elems_ref.iter().position(|&e| e == px).unwrap();
                let j = elems_ref.iter().position(|&e| e == py).unwrap();
                let t = pairs_ref.iter().position(|&p| p == (i, j)).unwrap();
                table[t]
            })?;
            let verification = match homogeneous_exists(x, &colouring, a, 1 << 26) {
                Ok(Some(w)) => {
                    return Err(VerifyError::Input(format!(
                        "internal error: adversarial output admits the {a}-large homogeneous set {w}"
                    )))
                }
                Ok(None) => Verification::Exact,
                Err(VerifyError::BudgetExceeded { .. }) => Verification::Budgeted,
                Err(e) => return Err(e),
            };
            Ok(AdversarialReport {
                colouring: Some(colouring),
                complete: true,
                verification: Some(verification),
            })
        }
        Outcome::Exhausted => {
            Ok(AdversarialReport { colouring: None, complete: true, verification: None })
        }
        Outcome::OutOfBudget => {
            Ok(AdversarialReport { colouring: None, complete: false, verification: None })
        }
    }
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    elems: &'a [u64],
    a: &'a Ordinal,
    k: u8,
    colours: Vec<u8>,
    pairs: &'a [(usize, usize)],
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn assign(&mut self, t: usize) -> Outcome {
        if t == self.pairs.len() {
            return Outcome::Found;
        }
        for c in 0..self.k {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Outcome::OutOfBudget;
            }
            self.colours[t] = c;
            if !self.completes_large_mono(t, c) {
                match self.assign(t + 1) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
        }
        Outcome::Exhausted
    }

    fn colour_of(&self, i: usize, j: usize) -> u8 {
        let n = self.elems.len();
        self.colours[i * n - i * (i + 1) / 2 + (j - i - 1)]
    }

    /// After assigning pair `(i, j) = c`, a newly completed monochromatic
    /// set has exactly `i` and `j` as its two largest elements; search for a
    /// completion below `i` that makes the whole thing `a`-large.
    fn completes_large_mono(&self, t: usize, c: u8) -> bool {
        let (i, j) = self.pairs[t];
        let candidates: Vec<usize> = (0..i)
            .filter(|&q| self.colour_of(q, i) == c && self.colour_of(q, j) == c)
            .collect();
        let tail = [self.elems[i], self.elems[j]];
        self.mono_completion(&candidates, 0, &Vec::new(), c, &tail)
    }

    fn mono_completion(
        &self,
        candidates: &[usize],
        from: usize,
        chosen: &Vec<usize>,
        c: u8,
        tail: &[u64; 2],
    ) -> bool {
        // Test the current selection.
        let mut res = self.a.clone();
        for &q in chosen {
            res.step_assign(self.elems[q]);
        }
        res.step_assign(tail[0]);
        res.step_assign(tail[1]);
        if res.is_zero() {
            return true;
        }
        for (pos, &q) in candidates.iter().enumerate().skip(from) {
            if chosen.iter().any(|&s| self.colour_of(s.min(q), s.max(q)) != c) {
                continue;
            }
            let mut next = chosen.clone();
            next.push(q);
            next.sort_unstable();
            if self.mono_completion(candidates, pos + 1, &next, c, tail) {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{exhaustive_rt_check, RtVerdict};

    fn set(s: &str) -> FiniteSet {
        FiniteSet::parse(s).unwrap()
    }

    #[test]
    fn finds_the_pentagon_witness() {
        let r = adversarial_colouring(&set("10..14"), 2, &Ordinal::nat(3), 1 << 24).unwrap();
        let colouring = r.colouring.expect("a triangle-free 2-colouring of K5 exists");
        assert!(r.complete);
        assert_eq!(r.verification, Some(Verification::Exact));
        assert!(homogeneous_exists(&set("10..14"), &colouring, &Ordinal::nat(3), 1 << 24)
            .unwrap()
            .is_none());
    }

    #[test]
    fn six_points_have_no_witness() {
        let r = adversarial_colouring(&set("10..15"), 2, &Ordinal::nat(3), 1 << 26).unwrap();
        assert!(r.colouring.is_none());
        assert!(r.complete);
    }

    #[test]
    fn trivial_targets_are_unavoidable() {
        let r = adversarial_colouring(&set("10..15"), 2, &Ordinal::one(), 1 << 20).unwrap();
        assert!(r.colouring.is_none());
        assert!(r.complete);
        let r = adversarial_colouring(&set("10..15"), 2, &Ordinal::zero(), 1 << 20).unwrap();
        assert!(r.colouring.is_none());
    }

    #[test]
    fn agrees_with_exhaustive_checking() {
        for (base, a, expect_witness) in [
            ("10..14", "3", true),
            ("10..15", "3", false),
            ("10..12", "3", true),
            ("10..13", "2", false),
        ] {
            let x = set(base);
            let a: Ordinal = a.parse().unwrap();
            let adv = adversarial_colouring(&x, 2, &a, 1 << 26).unwrap();
            let ex = exhaustive_rt_check(&x, 2, &a, 1 << 26, 2).unwrap();
            match ex {
                RtVerdict::AllPass { .. } => {
                    assert!(!expect_witness);
                    assert!(adv.colouring.is_none() && adv.complete);
                }
                RtVerdict::Counterexample { .. } => {
                    assert!(expect_witness);
                    assert!(adv.colouring.is_some());
                }
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let r = adversarial_colouring(&set("10..15"), 2, &Ordinal::nat(3), 5).unwrap();
        assert!(r.colouring.is_none());
        assert!(!r.complete);
    }
}
