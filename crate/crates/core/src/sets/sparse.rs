//! Sparseness predicates and sparse subset extraction.

use crate::bounds::EXP_SPARSE_BASE;
use crate::ordinal::Ordinal;
use crate::sets::{
    interval_is_large, is_large, partition_decompose, FiniteSet, SetError,
};
use crate::Mode;

/// True when every gap between consecutive elements of `x` is an `a`-large
/// interval `(x_i, x_{i+1}]`.
///
/// Checking consecutive gaps suffices: interval largeness only improves when
/// the right endpoint moves further out, so non-consecutive pairs follow from
/// the consecutive ones.
pub fn is_sparse(x: &FiniteSet, a: &Ordinal) -> bool {
    x.elements()
        .windows(2)
        .all(|w| interval_is_large(a, w[0], w[1]))
}

/// True when consecutive elements satisfy `4^x < y`, with `min x >= 3`
/// required.
///
/// The base-4 power is computed in checked 64-bit arithmetic; a gap whose
/// bound exceeds the representable range counts as satisfied. Genuinely
/// exp-sparse sets grow as towers of exponentials, so no fixed width can
/// decide every gap; this rule keeps the checker usable for representable
/// inputs instead of rejecting every set with an element >= 32.
pub fn is_exp_sparse(x: &FiniteSet) -> Result<bool, SetError> {
    x.require_paper_min()?;
    Ok(x.elements().windows(2).all(|w| match checked_base_pow(w[0]) {
        Some(bound) => bound < w[1],
        None => true,
    }))
}

/// `4^x` when representable.
fn checked_base_pow(x: u64) -> Option<u64> {
    let exp = u32::try_from(x).ok()?;
    EXP_SPARSE_BASE.checked_pow(exp)
}

/// Extracts a `w^n`-large, `w^m`-sparse subset of `x`.
///
/// Strict mode requires `x` to be `(w^{n+m}+1)`-large and runs the recursive
/// block construction, which under that hypothesis always succeeds: split off
/// the two smallest elements, decompose the rest into `x_1` consecutive
/// `w^{n+m-1}`-large blocks, and recurse across consecutive block pairs so
/// that each level keeps its gaps sparse up to the following block.
///
/// Permissive mode skips the precondition and instead grows the subset
/// greedily, always taking the least element whose gap from the previous pick
/// is `w^m`-large. The greedy pick is pointwise minimal among all sparse
/// subsequences, so by largeness domination it succeeds whenever any
/// `w^n`-large `w^m`-sparse subset exists at all.
///
/// With `m = 3` the result is exp-sparse as well. Both modes validate the
/// output against [`is_large`] and [`is_sparse`] before returning it.
pub fn sparse_subset(x: &FiniteSet, n: u32, m: u32, mode: Mode) -> Result<FiniteSet, SetError> {
    x.require_paper_min()?;
    let target = Ordinal::power(n);
    let gap = Ordinal::power(m);
    let y = if mode.is_strict() {
        let need = Ordinal::power(n + m).sum(&Ordinal::one()).expect("power + 1");
        if !is_large(x, &need) {
            return Err(SetError::Precondition(format!(
                "sparse subset extraction needs a ({need})-large input"
            )));
        }
        block_recursion(x, n, m)
            .map_err(|e| SetError::Internal(format!("block recursion failed under checked precondition: {e}")))?
    } else {
        greedy_sparse(x, &target, &gap)?
    };
    if !is_large(&y, &target) {
        return Err(SetError::Internal(format!("extracted subset is not {target}-large")));
    }
    if !is_sparse(&y, &gap) {
        return Err(SetError::Internal(format!("extracted subset is not {gap}-sparse")));
    }
    Ok(y)
}

/// The inductive construction: returns `Y` contained in `x` minus its
/// maximum, `w^n`-large, with `Y + {max x}` being `w^m`-sparse.
fn block_recursion(x: &FiniteSet, n: u32, m: u32) -> Result<FiniteSet, SetError> {
    let min = x.min_elem().ok_or_else(|| SetError::Precondition("empty input".into()))?;
    if n == 0 {
        return Ok(FiniteSet::singleton(min));
    }
    let rest = x.without_min();
    let x1 = rest
        .min_elem()
        .ok_or_else(|| SetError::Precondition("input too small".into()))?;
    let body = rest.without_min();
    if (body.len() as u64) < x1 {
        // Cannot hold x1 nonempty blocks; unreachable under the checked
        // precondition.
        return Err(SetError::Precondition(format!(
            "need {x1} blocks but only {} elements remain",
            body.len()
        )));
    }
    let parts = vec![Ordinal::power(n + m - 1); x1 as usize];
    let blocks = partition_decompose(&body, &parts)?;
    let mut out = vec![min];
    for pair in blocks.windows(2) {
        let lead = pair[0].max_elem().expect("blocks are nonempty");
        let sub = FiniteSet::singleton(lead).union(&pair[1]);
        let y = block_recursion(&sub, n - 1, m)?;
        out.extend(y.iter());
    }
    FiniteSet::new(out)
}

/// Greedy sparse subsequence: pointwise minimal, stops at the first
/// `target`-large prefix.
fn greedy_sparse(x: &FiniteSet, target: &Ordinal, gap: &Ordinal) -> Result<FiniteSet, SetError> {
    let mut picked: Vec<u64> = Vec::new();
    let mut res = target.clone();
    for e in x.iter() {
        if let Some(&prev) = picked.last() {
            if !interval_is_large(gap, prev, e) {
                continue;
            }
        }
        picked.push(e);
        res.step_assign(e);
        if res.is_zero() {
            return Ok(FiniteSet::from_sorted(picked));
        }
    }
    Err(SetError::SparseUnattainable {
        target: target.clone(),
        gap: gap.clone(),
        residual: res,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::parse_ordinal;

    fn ord(s: &str) -> Ordinal {
        parse_ordinal(s).unwrap()
    }

    fn set(s: &str) -> FiniteSet {
        FiniteSet::parse(s).unwrap()
    }

    #[test]
    fn exp_sparse_examples() {
        assert!(is_exp_sparse(&set("3, 65")).unwrap());
        assert!(!is_exp_sparse(&set("3, 64")).unwrap());
        assert!(is_exp_sparse(&set("3")).unwrap());
        assert!(is_exp_sparse(&FiniteSet::empty()).unwrap());
        assert!(matches!(
            is_exp_sparse(&set("2, 100")),
            Err(SetError::MinTooSmall { min: 2 })
        ));
        // Gaps whose 4^x bound overflows 64 bits count as satisfied.
        assert!(is_exp_sparse(&set("3, 65, 66")).unwrap());
        assert!(is_exp_sparse(&FiniteSet::new(vec![40, 41]).unwrap()).unwrap());
    }

    #[test]
    fn sparseness_examples() {
        assert!(is_sparse(&set("3, 8, 18"), &ord("w")));
        assert!(!is_sparse(&set("3, 7, 18"), &ord("w")));
        assert!(is_sparse(&set("3"), &ord("w^3")));
        // 1-sparse just needs nonempty gaps.
        assert!(is_sparse(&set("3..10"), &ord("1")));
    }

    #[test]
    fn subsets_of_sparse_sets_are_sparse() {
        let x = set("3, 8, 18, 38");
        assert!(is_sparse(&x, &ord("w")));
        assert!(is_sparse(&x.difference(&set("8")), &ord("w")));
        assert!(is_sparse(&x.difference(&set("18, 38")), &ord("w")));
    }

    #[test]
    fn sparse_subset_base_case() {
        // A 2-large input suffices for n = m = 0 and yields the minimum.
        let y = sparse_subset(&set("3, 10"), 0, 0, Mode::Strict).unwrap();
        assert_eq!(y, set("3"));
    }

    #[test]
    fn sparse_subset_strict_block_recursion() {
        // {3..94} is (w^2+1)-large, so (n, m) = (1, 1) runs strictly.
        let x = set("3..94");
        let y = sparse_subset(&x, 1, 1, Mode::Strict).unwrap();
        assert!(y.is_subset_of(&x));
        assert!(is_large(&y, &ord("w")));
        assert!(is_sparse(&y, &ord("w")));
    }

    #[test]
    fn sparse_subset_strict_rejects_small_input() {
        assert!(matches!(
            sparse_subset(&set("3..38"), 1, 1, Mode::Strict),
            Err(SetError::Precondition(_))
        ));
    }

    #[test]
    fn sparse_subset_permissive_greedy() {
        // {3..39} is not (w^2+1)-large, but a w-large w-sparse subset exists
        // and the greedy scan finds the pointwise smallest one.
        let y = sparse_subset(&set("3..39"), 1, 1, Mode::Permissive).unwrap();
        assert_eq!(y, set("3, 8, 18, 38"));
        assert!(matches!(
            sparse_subset(&set("3..37"), 1, 1, Mode::Permissive),
            Err(SetError::SparseUnattainable { .. })
        ));
    }

    #[test]
    fn strict_and_permissive_agree_on_validity() {
        let x = set("3..94");
        for (n, m) in [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (2, 0)] {
            for mode in [Mode::Strict, Mode::Permissive] {
                let y = sparse_subset(&x, n, m, mode).unwrap();
                assert!(is_large(&y, &Ordinal::power(n)), "({n},{m},{mode:?})");
                assert!(is_sparse(&y, &Ordinal::power(m)), "({n},{m},{mode:?})");
            }
        }
    }
}
