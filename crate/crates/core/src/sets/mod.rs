//! Finite sets of naturals and the largeness calculus.
//!
//! A set `X = {x_0 < ... < x_{l-1}}` is `a`-large when the iterated
//! fundamental-sequence steps `a[x_0]...[x_{l-1}]` reach zero. This module
//! provides the residual computation, largeness and restriction, partition
//! decomposition along dominated sums, the sparseness predicates, sparse
//! subset extraction, and majority selection on two-coloured splits.

mod majority;
mod sparse;

pub use majority::{majority_select, MajorityWitness};
pub use sparse::{is_exp_sparse, is_sparse, sparse_subset};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::MIN_PAPER_ELEMENT;
use crate::ordinal::Ordinal;

/// A strictly increasing finite sequence of naturals (64-bit in this
/// realization). Serializes as a plain array; deserialization re-checks the
/// ordering invariant.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FiniteSet {
    elems: Vec<u64>,
}

/// Errors from set construction and the largeness operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("elements must be strictly increasing (violated at position {position})")]
    NotIncreasing { position: usize },
    #[error("set literal error: {0}")]
    Parse(String),
    #[error("operation requires min >= {MIN_PAPER_ELEMENT}, got min = {min}")]
    MinTooSmall { min: u64 },
    #[error("set is not {ordinal}-large (residual {residual})")]
    NotLarge { ordinal: Ordinal, residual: Ordinal },
    #[error("parts must form a dominated chain (part {index} does not dominate part {})", index + 1)]
    ChainViolation { index: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no side of the split is {target}-large")]
    NoMajority { target: Ordinal },
    #[error("no {target}-large, {gap}-sparse subset found (left over residual {residual})")]
    SparseUnattainable { target: Ordinal, gap: Ordinal, residual: Ordinal },
    #[error("internal validation failed (implementation bug): {0}")]
    Internal(String),
}

impl TryFrom<Vec<u64>> for FiniteSet {
    type Error = SetError;

    fn try_from(elems: Vec<u64>) -> Result<Self, Self::Error> {
        FiniteSet::new(elems)
    }
}

impl From<FiniteSet> for Vec<u64> {
    fn from(s: FiniteSet) -> Vec<u64> {
        s.elems
    }
}

impl FiniteSet {
    /// Builds a set from strictly increasing elements.
    pub fn new(elems: Vec<u64>) -> Result<Self, SetError> {
        for i in 1..elems.len() {
            if elems[i] <= elems[i - 1] {
                return Err(SetError::NotIncreasing { position: i });
            }
        }
        Ok(FiniteSet { elems })
    }

    pub fn empty() -> Self {
        FiniteSet { elems: Vec::new() }
    }

    pub fn singleton(x: u64) -> Self {
        FiniteSet { elems: vec![x] }
    }

    /// The inclusive range `lo..=hi`; empty when `lo > hi`.
    pub fn range(lo: u64, hi: u64) -> Self {
        if lo > hi {
            Self::empty()
        } else {
            FiniteSet { elems: (lo..=hi).collect() }
        }
    }

    /// Internal constructor for element vectors already known to be sorted.
    pub(crate) fn from_sorted(elems: Vec<u64>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        FiniteSet { elems }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn min_elem(&self) -> Option<u64> {
        self.elems.first().copied()
    }

    pub fn max_elem(&self) -> Option<u64> {
        self.elems.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elems.iter().copied()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    /// Position of `x` in the element order.
    pub fn position(&self, x: u64) -> Option<usize> {
        self.elems.binary_search(&x).ok()
    }

    pub fn is_subset_of(&self, other: &FiniteSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    /// First `n` elements.
    pub fn prefix(&self, n: usize) -> FiniteSet {
        FiniteSet { elems: self.elems[..n.min(self.elems.len())].to_vec() }
    }

    /// Elements from position `n` on.
    pub fn suffix(&self, n: usize) -> FiniteSet {
        FiniteSet { elems: self.elems[n.min(self.elems.len())..].to_vec() }
    }

    /// The set without its minimum (identity on the empty set).
    pub fn without_min(&self) -> FiniteSet {
        self.suffix(1)
    }

    pub fn union(&self, other: &FiniteSet) -> FiniteSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.elems.len() || j < other.elems.len() {
            match (self.elems.get(i), other.elems.get(j)) {
                (Some(&a), Some(&b)) if a == b => {
                    out.push(a);
                    i += 1;
                    j += 1;
                }
                (Some(&a), Some(&b)) if a < b => {
                    out.push(a);
                    i += 1;
                }
                (Some(_), Some(&b)) => {
                    out.push(b);
                    j += 1;
                }
                (Some(&a), None) => {
                    out.push(a);
                    i += 1;
                }
                (None, Some(&b)) => {
                    out.push(b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        FiniteSet { elems: out }
    }

    pub fn intersect(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet { elems: self.iter().filter(|&x| other.contains(x)).collect() }
    }

    pub fn difference(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet { elems: self.iter().filter(|&x| !other.contains(x)).collect() }
    }

    /// Elements in the inclusive value window `[lo, hi]`.
    pub fn window(&self, lo: u64, hi: u64) -> FiniteSet {
        FiniteSet { elems: self.iter().filter(|&x| lo <= x && x <= hi).collect() }
    }

    /// Checks the `min >= 3` convention required of sets entering the
    /// calculus.
    pub fn require_paper_min(&self) -> Result<(), SetError> {
        match self.min_elem() {
            Some(m) if m < MIN_PAPER_ELEMENT => Err(SetError::MinTooSmall { min: m }),
            _ => Ok(()),
        }
    }

    /// Parses a set literal: comma-separated naturals or inclusive ranges
    /// (`"3..38"`), optionally wrapped in braces, or a JSON array.
    pub fn parse(text: &str) -> Result<Self, SetError> {
        let t = text.trim();
        if t.starts_with('[') {
            let v: Vec<u64> = serde_json::from_str(t)
                .map_err(|e| SetError::Parse(format!("invalid JSON array: {e}")))?;
            return FiniteSet::new(v);
        }
        let t = t.strip_prefix('{').unwrap_or(t);
        let t = t.strip_suffix('}').unwrap_or(t);
        let mut elems = Vec::new();
        if t.trim().is_empty() {
            return Ok(Self::empty());
        }
        for piece in t.split(',') {
            let piece = piece.trim();
            if let Some((lo, hi)) = piece.split_once("..") {
                let lo: u64 = lo
                    .trim()
                    .parse()
                    .map_err(|_| SetError::Parse(format!("bad range start in {piece:?}")))?;
                let hi: u64 = hi
                    .trim()
                    .parse()
                    .map_err(|_| SetError::Parse(format!("bad range end in {piece:?}")))?;
                if lo > hi {
                    return Err(SetError::Parse(format!("descending range {piece:?}")));
                }
                elems.extend(lo..=hi);
            } else {
                elems.push(
                    piece
                        .parse()
                        .map_err(|_| SetError::Parse(format!("bad element {piece:?}")))?,
                );
            }
        }
        FiniteSet::new(elems)
    }
}

impl fmt::Display for FiniteSet {
    /// Prints with maximal runs compressed: `{3..6, 9}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut i = 0;
        let mut first = true;
        while i < self.elems.len() {
            let start = self.elems[i];
            let mut j = i;
            while j + 1 < self.elems.len() && self.elems[j + 1] == self.elems[j] + 1 {
                j += 1;
            }
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            if j > i + 1 {
                write!(f, "{}..{}", start, self.elems[j])?;
            } else if j == i + 1 {
                write!(f, "{}, {}", start, self.elems[j])?;
            } else {
                write!(f, "{start}")?;
            }
            i = j + 1;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The residual `a[x_0]...[x_{l-1}]` of stepping `a` through every element of
/// `x` in increasing order. `residual(a, {}) = a`.
pub fn residual(a: &Ordinal, x: &FiniteSet) -> Ordinal {
    let mut r = a.clone();
    for e in x.iter() {
        if r.is_zero() {
            break; // 0[m] = 0
        }
        r.step_assign(e);
    }
    r
}

/// True when `x` is `a`-large, i.e. the residual reaches zero.
pub fn is_large(x: &FiniteSet, a: &Ordinal) -> bool {
    residual(a, x).is_zero()
}

/// Length of the smallest `a`-large prefix, if any.
fn large_prefix_len(x: &FiniteSet, a: &Ordinal) -> Result<usize, Ordinal> {
    let mut r = a.clone();
    for (i, e) in x.iter().enumerate() {
        if r.is_zero() {
            return Ok(i);
        }
        r.step_assign(e);
    }
    if r.is_zero() {
        Ok(x.len())
    } else {
        Err(r)
    }
}

/// The smallest `a`-large initial segment of `x`. Errors when `x` itself is
/// not `a`-large.
pub fn restrict(x: &FiniteSet, a: &Ordinal) -> Result<FiniteSet, SetError> {
    match large_prefix_len(x, a) {
        Ok(n) => Ok(x.prefix(n)),
        Err(residual) => Err(SetError::NotLarge { ordinal: a.clone(), residual }),
    }
}

/// The residual of stepping `a` through the consecutive integers `lo..=hi`.
///
/// Runs of successor steps are fast-forwarded, so this stays cheap even for
/// astronomically wide intervals; it is how interval largeness (and hence
/// sparseness) is decided without materializing the interval.
pub fn interval_residual(a: &Ordinal, lo: u64, hi: u64) -> Ordinal {
    let mut cur = a.clone();
    if lo > hi {
        return cur;
    }
    let mut v = lo;
    let mut remaining: u128 = u128::from(hi - lo) + 1;
    while remaining > 0 {
        let Some(last) = cur.terms().last().copied() else {
            return cur;
        };
        if last.exp == 0 {
            // A trailing finite part absorbs one element per unit regardless
            // of the element's value.
            let t = remaining.min(u128::from(last.coeff)) as u64;
            cur.shrink_trailing(t);
            remaining -= u128::from(t);
            v = v.saturating_add(t);
        } else {
            cur.step_assign(v);
            remaining -= 1;
            v = v.saturating_add(1);
        }
    }
    cur
}

/// True when the interval `(x, y]` of naturals is `a`-large.
pub fn interval_is_large(a: &Ordinal, x: u64, y: u64) -> bool {
    if x >= y {
        return a.is_zero();
    }
    interval_residual(a, x + 1, y).is_zero()
}

/// Splits `x` into consecutive blocks along a dominated sum.
///
/// `parts` is given in the order the sum is written, largest first: each part
/// must exponent-dominate the next, and the combined ordinal is
/// `parts[0] + ... + parts[k-1]`. Blocks come back in element order, which is
/// the order the sum is consumed, so `blocks[j]` is `parts[k-1-j]`-large.
/// Leftover elements after the last part are dropped; the union of the blocks
/// is an initial-segment-wise minimal witness that `x` is large for the
/// combined ordinal.
pub fn partition_decompose(x: &FiniteSet, parts: &[Ordinal]) -> Result<Vec<FiniteSet>, SetError> {
    for i in 0..parts.len().saturating_sub(1) {
        if !parts[i].can_sum(&parts[i + 1]) {
            return Err(SetError::ChainViolation { index: i });
        }
    }
    let mut remaining = x.clone();
    let mut blocks = Vec::with_capacity(parts.len());
    for part in parts.iter().rev() {
        let block = restrict(&remaining, part)?;
        remaining = remaining.suffix(block.len());
        blocks.push(block);
    }
    Ok(blocks)
}

/// The combined ordinal of a dominated-chain part list (largest part first).
pub fn parts_total(parts: &[Ordinal]) -> Result<Ordinal, SetError> {
    let mut total = Ordinal::zero();
    for (i, p) in parts.iter().enumerate().rev() {
        total = p
            .sum(&total)
            .map_err(|_| SetError::ChainViolation { index: i })?;
    }
    Ok(total)
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
    fn construction_enforces_order() {
        assert!(FiniteSet::new(vec![3, 4, 4]).is_err());
        assert!(FiniteSet::new(vec![3, 2]).is_err());
        assert!(FiniteSet::new(vec![]).is_ok());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(set("3..6"), FiniteSet::new(vec![3, 4, 5, 6]).unwrap());
        assert_eq!(set("3, 8, 18"), FiniteSet::new(vec![3, 8, 18]).unwrap());
        assert_eq!(set("3..5, 9, 11..12"), FiniteSet::new(vec![3, 4, 5, 9, 11, 12]).unwrap());
        assert_eq!(set("[3, 8]"), FiniteSet::new(vec![3, 8]).unwrap());
        assert_eq!(set("{3..4}"), FiniteSet::new(vec![3, 4]).unwrap());
        assert_eq!(set(""), FiniteSet::empty());
        assert!(FiniteSet::parse("5,4").is_err());
        assert!(FiniteSet::parse("5..4").is_err());
        assert!(FiniteSet::parse("x").is_err());
    }

    #[test]
    fn display_compresses_runs() {
        assert_eq!(set("3..6, 9").to_string(), "{3..6, 9}");
        assert_eq!(set("3, 4").to_string(), "{3, 4}");
        assert_eq!(FiniteSet::empty().to_string(), "{}");
    }

    #[test]
    fn residual_examples() {
        assert_eq!(residual(&ord("w"), &set("3..6")), Ordinal::zero());
        assert_eq!(residual(&ord("w"), &set("4..7")), Ordinal::nat(1));
        assert_eq!(residual(&ord("w^2"), &set("3..8")), ord("w*2"));
        assert_eq!(residual(&ord("w^2"), &FiniteSet::empty()), ord("w^2"));
    }

    #[test]
    fn largeness_examples() {
        assert!(is_large(&set("3..6"), &ord("w")));
        assert!(!is_large(&set("4..7"), &ord("w")));
        assert!(is_large(&set("3..38"), &ord("w^2")));
        assert!(!is_large(&set("3..37"), &ord("w^2")));
        // Any finite set is 0-large.
        assert!(is_large(&FiniteSet::empty(), &Ordinal::zero()));
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(restrict(&set("3..8"), &ord("w")).unwrap(), set("3..6"));
        assert_eq!(restrict(&set("3, 4"), &ord("2")).unwrap(), set("3, 4"));
        assert_eq!(restrict(&set("3..40"), &ord("w^2")).unwrap(), set("3..38"));
        assert_eq!(restrict(&set("3..40"), &Ordinal::zero()).unwrap(), FiniteSet::empty());
        assert!(matches!(
            restrict(&set("4..7"), &ord("w")),
            Err(SetError::NotLarge { .. })
        ));
    }

    #[test]
    fn restrict_is_minimal() {
        let x = set("3..38");
        for a in ["w", "w + 2", "w*2", "w^2"] {
            let r = restrict(&x, &ord(a)).unwrap();
            assert!(is_large(&r, &ord(a)));
            let shorter = r.prefix(r.len() - 1);
            assert!(!is_large(&shorter, &ord(a)), "prefix minimality for {a}");
        }
    }

    #[test]
    fn interval_residual_agrees_with_explicit_sets() {
        for a in ["w", "w + 3", "w*2", "w^2", "w^2 + w*2 + 1", "5"] {
            let a = ord(a);
            for lo in [1u64, 3, 7] {
                for hi in [lo, lo + 1, lo + 10, lo + 40] {
                    let explicit = residual(&a, &FiniteSet::range(lo, hi));
                    assert_eq!(interval_residual(&a, lo, hi), explicit, "{a} over [{lo},{hi}]");
                }
            }
        }
    }

    #[test]
    fn interval_residual_handles_huge_intervals() {
        // The fast-forward must terminate quickly even on intervals with
        // ~10^19 elements.
        assert!(interval_is_large(&ord("w^2"), 3, 94));
        assert!(!interval_is_large(&ord("w^2"), 3, 93));
        assert!(interval_is_large(&ord("w^2"), 3, 1 << 60));
        // A w^3-large interval starting at 3 needs more than 2^64 elements,
        // so no representable right endpoint reaches it.
        assert!(!interval_is_large(&ord("w^3"), 3, u64::MAX));
        assert!(interval_is_large(&ord("w"), 3, 8));
        assert!(!interval_is_large(&ord("w"), 3, 7));
    }

    #[test]
    fn decompose_examples() {
        let blocks = partition_decompose(&set("3..38"), &[ord("w"), ord("w")]).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0], set("3..6"));
        assert_eq!(blocks[1], set("7..14"));
        for b in &blocks {
            assert!(is_large(b, &ord("w")));
        }

        let single = partition_decompose(&set("3..38"), &[ord("w^2")]).unwrap();
        assert_eq!(single, vec![restrict(&set("3..38"), &ord("w^2")).unwrap()]);

        assert_eq!(partition_decompose(&set("3..38"), &[]).unwrap(), Vec::<FiniteSet>::new());
    }

    #[test]
    fn decompose_consumes_small_parts_first() {
        // w + 1: the first element absorbs the finite part, the rest must be
        // w-large.
        let blocks = partition_decompose(&set("3..8"), &[ord("w"), ord("1")]).unwrap();
        assert_eq!(blocks[0], set("3"));
        assert_eq!(blocks[1], set("4..8"));
        assert!(is_large(&blocks[1], &ord("w")));
    }

    #[test]
    fn decompose_rejects_bad_chains() {
        assert!(matches!(
            partition_decompose(&set("3..38"), &[ord("w"), ord("w^2")]),
            Err(SetError::ChainViolation { index: 0 })
        ));
        assert!(matches!(
            partition_decompose(&set("4..7"), &[ord("w"), ord("w")]),
            Err(SetError::NotLarge { .. })
        ));
    }

    #[test]
    fn parts_total_sums_in_consumption_order() {
        assert_eq!(parts_total(&[ord("w"), ord("w")]).unwrap(), ord("w*2"));
        assert_eq!(parts_total(&[ord("w^2"), ord("w"), ord("1")]).unwrap(), ord("w^2 + w + 1"));
        assert!(parts_total(&[ord("w"), ord("w^2")]).is_err());
    }

    #[test]
    fn domination_transfers_largeness() {
        // Pointwise smaller sets of at least the same length inherit
        // largeness.
        let x = set("5, 9, 14, 20, 21");
        let y = set("3, 9, 11, 17, 21, 30");
        for a in ["w", "w + 1", "w*2", "4"] {
            if is_large(&x, &ord(a)) {
                assert!(is_large(&y, &ord(a)), "{a}");
            }
        }
        // Supersets in particular.
        assert!(is_large(&set("3..6"), &ord("w")));
        assert!(is_large(&set("3..6").union(&set("100, 200")), &ord("w")));
    }
}
