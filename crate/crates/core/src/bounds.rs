//! Named headroom constants used by the extraction procedures.
//!
//! Every numeric bound that the constructions rely on lives here so that the
//! preconditions read the same way everywhere and nothing is an inlined
//! literal. Strict-mode extractors check their inputs against these bounds;
//! permissive mode starts from them and degrades.

/// Sets entering the calculus must satisfy `min X >= 3`; smaller minima make
/// `w^n`-largeness degenerate (e.g. `{0}` would be `w^n`-large for every n).
pub const MIN_PAPER_ELEMENT: u64 = 3;

/// Base of the exponential sparseness condition: consecutive elements must
/// satisfy `4^x < y`.
pub const EXP_SPARSE_BASE: u64 = 4;

/// Majority selection on a 2-partition needs `w^n*(4k)`-largeness to
/// guarantee one side is `w^n*k`-large.
pub const MAJORITY_SPLIT: u64 = 4;

/// Extracting a `w^n`-large, `w^m`-sparse subset needs `(w^{n+m}+1)`-largeness;
/// `m = 3` yields an exp-sparse subset.
pub const SPARSE_EXP_MARGIN: u32 = 3;

/// Colour stabilization against a fixed finite set needs one extra power:
/// `w^{n+1}`-large input for a `w^n`-large stabilized subset.
pub const STABILIZE_MARGIN: u32 = 1;

/// A fixed-length grouping with `w^n`-large blocks needs `w^{n+3}`-largeness.
pub const GROUPING_FIXED_MARGIN: u32 = 3;

/// An omega-length grouping needs `w^{n+6}`-largeness.
pub const GROUPING_OMEGA_MARGIN: u32 = 6;

/// Each extra power of omega in the grouping length costs six powers of the
/// block largeness: `w^{n+6k}`-large admits an `(w^n, w^k)`-grouping.
pub const GROUPING_LEVEL_MARGIN: u32 = 6;

/// `w^{n+4}`-large sets are `RT^2_n`-omega-large (n = number of colours).
pub const KS_MARGIN: u32 = 4;

/// `w^{36n}`-large exp-sparse sets admit `w^n`-large transitive subsets.
pub const EM_FACTOR: u32 = 36;

/// Working form of the transitive-subset bound: `w^{36(n-1)+6}`.
pub const EM_STEP: u32 = 6;

/// `w^{4n+4}`-large sets admit `w^n`-large homogeneous subsets for
/// transitive colourings.
pub const ADS_FACTOR: u32 = 4;
/// See [`ADS_FACTOR`].
pub const ADS_OFFSET: u32 = 4;

/// Headline bound: `w^{300n}`-large sets are `RT^2_2`-`w^n`-large.
pub const RT22_FACTOR: u32 = 300;

/// Largest base size for which random-transitive colouring generation uses
/// rejection sampling; larger bases switch to direct constructions.
pub const TRANSITIVE_REJECTION_MAX: usize = 12;

/// Exponent of the strict grouping precondition `w^{n+6k}`.
pub fn grouping_exponent(n: u32, k: u32) -> u32 {
    n + GROUPING_LEVEL_MARGIN * k
}

/// Exponent of the strict prehomogeneous-extraction precondition `w^{n+4}`,
/// where `colours` is the number of colours of the input colouring.
pub fn ks_exponent(colours: u32) -> u32 {
    colours + KS_MARGIN
}

/// Exponent of the working transitive-subset precondition `w^{36(n-1)+6}`
/// for target `w^n`, n >= 1.
pub fn em_exponent(n: u32) -> u32 {
    EM_FACTOR * (n - 1) + EM_STEP
}

/// Exponent of the strict homogeneous-chain precondition `w^{4n+4}`.
pub fn ads_exponent(n: u32) -> u32 {
    ADS_FACTOR * n + ADS_OFFSET
}

/// Exponent of the strict two-colour pipeline precondition: the input must be
/// `(w^{(4n+4)*36+3}+1)`-large.
pub fn rt22_exponent(n: u32) -> u32 {
    ads_exponent(n) * EM_FACTOR + SPARSE_EXP_MARGIN
}
