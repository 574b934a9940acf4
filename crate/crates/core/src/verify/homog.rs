//! Exact search for a large homogeneous subset of an arbitrary colouring.

use crate::colouring::PairColouring;
use crate::ordinal::Ordinal;
use crate::sets::{residual, FiniteSet};
use crate::verify::VerifyError;

/// Decides whether `x` has an `a`-large `p`-homogeneous subset, returning
/// the lexicographically smallest one if so.
///
/// Backtracking over increasing elements: a partial chain fixes its colour
/// once it has two elements, and a branch is pruned when even consuming
/// every remaining element of `x` could not drive the residual to zero
/// (sound because the full tail pointwise dominates every subset of it).
/// `budget` caps the number of search nodes.
pub fn homogeneous_exists(
    x: &FiniteSet,
    p: &PairColouring,
    a: &Ordinal,
    budget: u64,
) -> Result<Option<FiniteSet>, VerifyError> {
    if let Some(e) = x.iter().find(|&e| !p.base().contains(e)) {
        return Err(VerifyError::Input(format!("element {e} outside colouring base")));
    }
    if a.is_zero() {
        return Ok(Some(FiniteSet::empty()));
    }
    let elems = x.elements();
    let mut search = Search { elems, p, budget, nodes: 0, chain: Vec::new() };
    for start in 0..elems.len() {
        let res = a.step(elems[start]);
        search.chain.push(start);
        if search.grow(start, None, &res)? {
            let witness = FiniteSet::from_sorted(search.chain.iter().map(|&i| elems[i]).collect());
            return Ok(Some(witness));
        }
        search.chain.pop();
    }
    Ok(None)
}

struct Search<'a> {
    elems: &'a [u64],
    p: &'a PairColouring,
    budget: u64,
    nodes: u64,
    chain: Vec<usize>,
}

impl Search<'_> {
    fn grow(&mut self, last: usize, colour: Option<u8>, res: &Ordinal) -> Result<bool, VerifyError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(VerifyError::BudgetExceeded { budget: self.budget });
        }
        if res.is_zero() {
            return Ok(true);
        }
        // Even the whole tail cannot finish: prune.
        let tail = FiniteSet::from_sorted(self.elems[last + 1..].to_vec());
        if !residual(res, &tail).is_zero() {
            return Ok(false);
        }
        for next in (last + 1)..self.elems.len() {
            let link = self.p.colour(self.elems[last], self.elems[next]).expect("base pairs");
            let colour_now = match colour {
                Some(c) if link != c => continue,
                Some(c) => Some(c),
                None => Some(link),
            };
            if self
                .chain
                .iter()
                .any(|&s| self.p.colour(self.elems[s], self.elems[next]).unwrap() != colour_now.unwrap())
            {
                continue;
            }
            let next_res = res.step(self.elems[next]);
            self.chain.push(next);
            if self.grow(next, colour_now, &next_res)? {
                return Ok(true);
            }
            self.chain.pop();
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::is_homogeneous;
    use crate::sets::is_large;

    fn set(s: &str) -> FiniteSet {
        FiniteSet::parse(s).unwrap()
    }

    const B: u64 = 1 << 24;

    #[test]
    fn constant_colouring_takes_the_whole_set() {
        let p = PairColouring::constant(set("3..10"), 2, 1).unwrap();
        let w = homogeneous_exists(p.base(), &p, &Ordinal::nat(8), B).unwrap().unwrap();
        assert_eq!(w, set("3..10"));
    }

    #[test]
    fn pairs_and_singletons() {
        let p = PairColouring::random(set("3..10"), 2, 5).unwrap();
        let w = homogeneous_exists(p.base(), &p, &Ordinal::nat(2), B).unwrap().unwrap();
        assert_eq!(w.len(), 2);
        let s = homogeneous_exists(p.base(), &p, &Ordinal::one(), B).unwrap().unwrap();
        assert_eq!(s, set("3"));
        let e = homogeneous_exists(p.base(), &p, &Ordinal::zero(), B).unwrap().unwrap();
        assert!(e.is_empty());
    }

    #[test]
    fn pentagon_has_no_mono_triangle() {
        // Two five-cycles: colour 0 on circular distance 1, colour 1 on
        // distance 2. Neither class contains a triangle.
        let base = set("10..14");
        let p = PairColouring::from_fn(base.clone(), 2, |x, y| {
            let d = (y - x).min(5 - (y - x));
            u8::from(d == 2)
        })
        .unwrap();
        assert_eq!(homogeneous_exists(&base, &p, &Ordinal::nat(3), B).unwrap(), None);
        assert!(homogeneous_exists(&base, &p, &Ordinal::nat(2), B).unwrap().is_some());
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        for seed in 0..30 {
            let base = set("3..12");
            let p = PairColouring::random(base.clone(), 2, seed).unwrap();
            for a in ["3", "4", "w", "5"] {
                let a: Ordinal = a.parse().unwrap();
                let fast = homogeneous_exists(&base, &p, &a, B).unwrap();
                let naive = naive(&base, &p, &a);
                assert_eq!(fast.is_some(), naive.is_some(), "seed {seed}, target {a}");
                if let Some(w) = fast {
                    assert!(is_large(&w, &a));
                    assert!(is_homogeneous(&w, &p).unwrap().is_some());
                    // Lexicographically smallest witness.
                    assert_eq!(Some(w.elements().to_vec()), naive.map(|n| n.elements().to_vec()));
                }
            }
        }
    }

    fn naive(x: &FiniteSet, p: &PairColouring, a: &Ordinal) -> Option<FiniteSet> {
        let elems = x.elements();
        let mut best: Option<Vec<u64>> = None;
        for mask in 0u32..(1 << elems.len()) {
            let subset: Vec<u64> = elems
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let fs = FiniteSet::from_sorted(subset.clone());
            if is_large(&fs, a) && is_homogeneous(&fs, p).unwrap().is_some() {
                match &best {
                    Some(b) if *b <= subset => {}
                    _ => best = Some(subset),
                }
            }
        }
        best.map(FiniteSet::from_sorted)
    }

    #[test]
    fn budget_is_enforced() {
        let p = PairColouring::random(set("3..25"), 2, 0).unwrap();
        assert!(matches!(
            homogeneous_exists(p.base(), &p, &"w*3".parse().unwrap(), 10),
            Err(VerifyError::BudgetExceeded { .. })
        ));
    }
}
