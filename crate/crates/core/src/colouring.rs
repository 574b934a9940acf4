//! Pair colourings over a finite set: storage, homogeneity and transitivity
//! predicates, exhaustive enumeration, and seeded generation.
//!
//! A [`PairColouring`] assigns one of `k` colours to every 2-element subset
//! of its base set. Storage is a dense upper-triangular table keyed by
//! element positions, bit-packed when `k = 2` so exhaustive loops stay
//! cache-friendly.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::TRANSITIVE_REJECTION_MAX;
use crate::sets::{FiniteSet, SetError};

/// Attempts allowed when rejection-sampling a transitive colouring.
const REJECTION_ATTEMPTS: u32 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("colour count must be between 1 and 256, got {0}")]
    ColourCount(u64),
    #[error("element {0} is not in the base set")]
    NotInBase(u64),
    #[error("pair ({x}, {y}) is not an increasing pair of base elements")]
    BadPair { x: u64, y: u64 },
    #[error("colour {colour} out of range for {colours} colours")]
    ColourOutOfRange { colour: u8, colours: u16 },
    #[error("pair ({x}, {y}) listed more than once")]
    DuplicatePair { x: u64, y: u64 },
    #[error("pair ({x}, {y}) missing from explicit table")]
    MissingPair { x: u64, y: u64 },
    #[error("operation requires exactly 2 colours, got {0}")]
    NotTwoColours(u16),
    #[error("colouring JSON: {0}")]
    Json(String),
    #[error("enumeration of {required} colourings exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("enumeration space exceeds 2^128 colourings")]
    SpaceOverflow,
    #[error("rejection sampling found no transitive colouring in {0} attempts")]
    RejectionBudget(u32),
    #[error("generator spec invalid: {0}")]
    BadSpec(String),
    #[error(transparent)]
    Set(#[from] SetError),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Table {
    /// One bit per pair, for two colours.
    Bits(Vec<u64>),
    /// One byte per pair otherwise.
    Bytes(Vec<u8>),
}

impl Table {
    fn new(pairs: usize, colours: u16) -> Table {
        if colours == 2 {
            Table::Bits(vec![0; pairs.div_ceil(64)])
        } else {
            Table::Bytes(vec![0; pairs])
        }
    }

    #[inline]
    fn get(&self, idx: usize) -> u8 {
        match self {
            Table::Bits(words) => ((words[idx / 64] >> (idx % 64)) & 1) as u8,
            Table::Bytes(bytes) => bytes[idx],
        }
    }

    #[inline]
    fn set(&mut self, idx: usize, colour: u8) {
        match self {
            Table::Bits(words) => {
                let (w, b) = (idx / 64, idx % 64);
                words[w] = (words[w] & !(1 << b)) | (u64::from(colour & 1) << b);
            }
            Table::Bytes(bytes) => bytes[idx] = colour,
        }
    }
}

/// A total `k`-colouring of the 2-element subsets of a base set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PairColouring {
    base: FiniteSet,
    colours: u16,
    table: Table,
}

fn check_colours(colours: u64) -> Result<u16, ColouringError> {
    if colours == 0 || colours > 256 {
        Err(ColouringError::ColourCount(colours))
    } else {
        Ok(colours as u16)
    }
}

impl PairColouring {
    /// Builds a colouring by evaluating `f` on every increasing pair.
    pub fn from_fn(
        base: FiniteSet,
        colours: u16,
        mut f: impl FnMut(u64, u64) -> u8,
    ) -> Result<Self, ColouringError> {
        let colours = check_colours(u64::from(colours))?;
        let n = base.len();
        let mut table = Table::new(n * (n.saturating_sub(1)) / 2, colours);
        let elems = base.elements();
        let mut idx = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                let c = f(elems[i], elems[j]);
                if u16::from(c) >= colours {
                    return Err(ColouringError::ColourOutOfRange { colour: c, colours });
                }
                table.set(idx, c);
                idx += 1;
            }
        }
        Ok(PairColouring { base, colours, table })
    }

    /// All pairs get the same colour.
    pub fn constant(base: FiniteSet, colours: u16, colour: u8) -> Result<Self, ColouringError> {
        Self::from_fn(base, colours, |_, _| colour)
    }

    /// The transitive threshold colouring: `P(x, y) = 0` iff `y <= t`.
    pub fn threshold(base: FiniteSet, t: u64) -> Result<Self, ColouringError> {
        Self::from_fn(base, 2, |_, y| u8::from(y > t))
    }

    /// Uniformly random colours, deterministic per seed.
    pub fn random(base: FiniteSet, colours: u16, seed: u64) -> Result<Self, ColouringError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = u32::from(colours);
        Self::from_fn(base, colours, |_, _| (rng.next_u32() % k) as u8)
    }

    /// Builds from an explicit pair list, which must cover every pair exactly
    /// once with `x < y`.
    pub fn from_pairs(
        base: FiniteSet,
        colours: u16,
        pairs: &[(u64, u64, u8)],
    ) -> Result<Self, ColouringError> {
        let colours = check_colours(u64::from(colours))?;
        let n = base.len();
        let pair_count = n * n.saturating_sub(1) / 2;
        let mut table = Table::new(pair_count, colours);
        let mut seen = vec![false; pair_count];
        for &(x, y, c) in pairs {
            let (i, j) = match (base.position(x), base.position(y)) {
                (Some(i), Some(j)) if i < j => (i, j),
                _ => return Err(ColouringError::BadPair { x, y }),
            };
            if u16::from(c) >= colours {
                return Err(ColouringError::ColourOutOfRange { colour: c, colours });
            }
            let idx = pair_index(n, i, j);
            if seen[idx] {
                return Err(ColouringError::DuplicatePair { x, y });
            }
            seen[idx] = true;
            table.set(idx, c);
        }
        if let Some(idx) = seen.iter().position(|s| !s) {
            let (i, j) = pair_from_index(n, idx);
            return Err(ColouringError::MissingPair {
                x: base.elements()[i],
                y: base.elements()[j],
            });
        }
        Ok(PairColouring { base, colours, table })
    }

    pub fn base(&self) -> &FiniteSet {
        &self.base
    }

    pub fn colours(&self) -> u16 {
        self.colours
    }

    /// Colour of a pair given by element values.
    pub fn colour(&self, x: u64, y: u64) -> Result<u8, ColouringError> {
        match (self.base.position(x), self.base.position(y)) {
            (Some(i), Some(j)) if i < j => Ok(self.colour_at(i, j)),
            _ => Err(ColouringError::BadPair { x, y }),
        }
    }

    /// Colour of a pair given by base positions `i < j`.
    #[inline]
    pub fn colour_at(&self, i: usize, j: usize) -> u8 {
        debug_assert!(i < j && j < self.base.len());
        self.table.get(pair_index(self.base.len(), i, j))
    }

    /// All `(x, y, colour)` triples in lexicographic pair order.
    pub fn pairs(&self) -> Vec<(u64, u64, u8)> {
        let elems = self.base.elements();
        let mut out = Vec::with_capacity(elems.len() * elems.len().saturating_sub(1) / 2);
        for i in 0..elems.len() {
            for j in (i + 1)..elems.len() {
                out.push((elems[i], elems[j], self.colour_at(i, j)));
            }
        }
        out
    }

    /// The colouring restricted to a subset of the base. Totality is
    /// preserved by construction, and transitivity survives restriction
    /// because triples of the subset are triples of the base.
    pub fn restrict_to(&self, sub: &FiniteSet) -> Result<PairColouring, ColouringError> {
        if let Some(missing) = sub.iter().find(|&x| !self.base.contains(x)) {
            return Err(ColouringError::NotInBase(missing));
        }
        PairColouring::from_fn(sub.clone(), self.colours, |x, y| {
            self.colour(x, y).expect("subset pairs are base pairs")
        })
    }
}

#[inline]
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn pair_from_index(n: usize, mut idx: usize) -> (usize, usize) {
    for i in 0..n {
        let row = n - i - 1;
        if idx < row {
            return (i, i + 1 + idx);
        }
        idx -= row;
    }
    unreachable!("index out of range")
}

/// Common colour of all pairs of `y`, or `None` when two pairs disagree.
/// Sets with fewer than two elements are homogeneous of colour 0 by
/// convention, so extractors can return small certified sets uniformly.
pub fn is_homogeneous(y: &FiniteSet, p: &PairColouring) -> Result<Option<u8>, ColouringError> {
    if let Some(missing) = y.iter().find(|&x| !p.base().contains(x)) {
        return Err(ColouringError::NotInBase(missing));
    }
    let positions: Vec<usize> = y.iter().map(|x| p.base().position(x).unwrap()).collect();
    if positions.len() < 2 {
        return Ok(Some(0));
    }
    let first = p.colour_at(positions[0], positions[1]);
    for a in 0..positions.len() {
        for b in (a + 1)..positions.len() {
            if p.colour_at(positions[a], positions[b]) != first {
                return Ok(None);
            }
        }
    }
    Ok(Some(first))
}

/// True when both colour classes of a 2-colouring are transitive relations:
/// for `x < y < z`, `P(x,y) = P(y,z)` forces `P(x,z)` to the same value.
pub fn is_transitive(p: &PairColouring) -> Result<bool, ColouringError> {
    if p.colours() != 2 {
        return Err(ColouringError::NotTwoColours(p.colours()));
    }
    let n = p.base().len();
    for i in 0..n {
        for j in (i + 1)..n {
            let cij = p.colour_at(i, j);
            for l in (j + 1)..n {
                if p.colour_at(j, l) == cij && p.colour_at(i, l) != cij {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Exhaustive enumeration of all `k^C(n,2)` colourings of a base.
///
/// Colourings are indexed by reading the pair colours in lexicographic pair
/// order as a base-`k` numeral (pair 0 most significant), so the index range
/// can be split into disjoint chunks for parallel consumption.
#[derive(Clone, Debug)]
pub struct ColouringEnumeration {
    base: FiniteSet,
    colours: u16,
    pair_count: usize,
    total: u128,
}

impl ColouringEnumeration {
    pub fn new(base: FiniteSet, colours: u16, budget: u128) -> Result<Self, ColouringError> {
        let colours = check_colours(u64::from(colours))?;
        let n = base.len();
        let pair_count = n * n.saturating_sub(1) / 2;
        let total = u128::from(colours)
            .checked_pow(u32::try_from(pair_count).map_err(|_| ColouringError::SpaceOverflow)?)
            .ok_or(ColouringError::SpaceOverflow)?;
        if total > budget {
            return Err(ColouringError::BudgetExceeded { required: total, budget });
        }
        Ok(ColouringEnumeration { base, colours, pair_count, total })
    }

    pub fn total(&self) -> u128 {
        self.total
    }

    /// The colouring at a given index.
    pub fn at(&self, index: u128) -> PairColouring {
        assert!(index < self.total, "enumeration index out of range");
        let mut table = Table::new(self.pair_count, self.colours);
        let mut rem = index;
        let k = u128::from(self.colours);
        for pair in (0..self.pair_count).rev() {
            table.set(pair, (rem % k) as u8);
            rem /= k;
        }
        PairColouring { base: self.base.clone(), colours: self.colours, table }
    }

    /// Iterates the half-open index range `lo..hi`.
    pub fn range(&self, lo: u128, hi: u128) -> impl Iterator<Item = (u128, PairColouring)> + '_ {
        (lo..hi.min(self.total)).map(|i| (i, self.at(i)))
    }

    /// Splits `0..total` into at most `chunks` contiguous ranges that
    /// partition the space.
    pub fn chunks(&self, chunks: usize) -> Vec<(u128, u128)> {
        let chunks = chunks.max(1) as u128;
        let size = (self.total / chunks).max(1);
        let mut out = Vec::new();
        let mut lo = 0u128;
        while lo < self.total {
            let hi = (lo + size).min(self.total);
            // Last chunk absorbs the remainder.
            let hi = if out.len() as u128 == chunks - 1 { self.total } else { hi };
            out.push((lo, hi));
            lo = hi;
        }
        out
    }
}

/// Deterministic colouring generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorKind {
    /// Uniformly random colours from a seed.
    Random { seed: u64 },
    /// All pairs one colour.
    Constant { colour: u8 },
    /// `P(x, y) = 0` iff `y <= threshold` (always transitive).
    ThresholdTransitive { threshold: u64 },
    /// A random transitive 2-colouring: rejection sampling on small bases,
    /// seeded threshold or ordered-block constructions above the crossover.
    RandomTransitive { seed: u64 },
}

/// Either an explicit pair table or a generator descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColouringSpec {
    Explicit(Vec<(u64, u64, u8)>),
    Generator(GeneratorKind),
}

/// Instantiates a spec over a base set with `colours` colours.
pub fn generate(
    spec: &ColouringSpec,
    base: FiniteSet,
    colours: u16,
) -> Result<PairColouring, ColouringError> {
    match spec {
        ColouringSpec::Explicit(pairs) => PairColouring::from_pairs(base, colours, pairs),
        ColouringSpec::Generator(kind) => match *kind {
            GeneratorKind::Random { seed } => PairColouring::random(base, colours, seed),
            GeneratorKind::Constant { colour } => PairColouring::constant(base, colours, colour),
            GeneratorKind::ThresholdTransitive { threshold } => {
                if colours != 2 {
                    return Err(ColouringError::NotTwoColours(colours));
                }
                PairColouring::threshold(base, threshold)
            }
            GeneratorKind::RandomTransitive { seed } => {
                if colours != 2 {
                    return Err(ColouringError::NotTwoColours(colours));
                }
                random_transitive(base, seed)
            }
        },
    }
}

fn random_transitive(base: FiniteSet, seed: u64) -> Result<PairColouring, ColouringError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = if base.len() <= TRANSITIVE_REJECTION_MAX {
        let mut found = None;
        for _ in 0..REJECTION_ATTEMPTS {
            let candidate = PairColouring::random(base.clone(), 2, rng.next_u64())?;
            if is_transitive(&candidate)? {
                found = Some(candidate);
                break;
            }
        }
        found.ok_or(ColouringError::RejectionBudget(REJECTION_ATTEMPTS))?
    } else {
        // Direct constructions: a threshold cut or an ordered block merge,
        // both transitive for any parameters.
        let elems = base.elements().to_vec();
        if rng.next_u32() % 2 == 0 {
            let t = elems[(rng.next_u64() % elems.len() as u64) as usize];
            PairColouring::threshold(base, t)?
        } else {
            let mut block_of = Vec::with_capacity(elems.len());
            let mut block = 0u64;
            for _ in &elems {
                if rng.next_u32() % 3 == 0 {
                    block += 1;
                }
                block_of.push(block);
            }
            let same_colour = (rng.next_u32() % 2) as u8;
            let idx_of = |x: u64| block_of[base.position(x).unwrap()];
            PairColouring::from_fn(base.clone(), 2, |x, y| {
                if idx_of(x) == idx_of(y) {
                    same_colour
                } else {
                    1 - same_colour
                }
            })?
        }
    };
    if !is_transitive(&p)? {
        return Err(ColouringError::BadSpec(
            "random-transitive construction produced a non-transitive colouring".into(),
        ));
    }
    Ok(p)
}

/// On-disk JSON form: explicit pairs or a generator next to the base set.
#[derive(Serialize, Deserialize)]
struct ColouringFile {
    set: Vec<u64>,
    colours: u16,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pairs: Option<Vec<(u64, u64, u8)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generator: Option<GeneratorKind>,
}

/// Serializes a colouring as the explicit-pairs JSON form.
pub fn to_json(p: &PairColouring) -> String {
    let file = ColouringFile {
        set: p.base().elements().to_vec(),
        colours: p.colours(),
        pairs: Some(p.pairs()),
        generator: None,
    };
    serde_json::to_string(&file).expect("colouring serialization cannot fail")
}

/// Reads the JSON form; explicit tables are checked for duplicates and gaps.
pub fn from_json(text: &str) -> Result<PairColouring, ColouringError> {
    let file: ColouringFile =
        serde_json::from_str(text).map_err(|e| ColouringError::Json(e.to_string()))?;
    let base = FiniteSet::new(file.set).map_err(SetError::from)?;
    match (file.pairs, file.generator) {
        (Some(pairs), None) => PairColouring::from_pairs(base, file.colours, &pairs),
        (None, Some(kind)) => generate(&ColouringSpec::Generator(kind), base, file.colours),
        (Some(_), Some(_)) => Err(ColouringError::Json(
            "colouring file has both pairs and generator".into(),
        )),
        (None, None) => Err(ColouringError::Json(
            "colouring file needs pairs or generator".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> FiniteSet {
        FiniteSet::parse(s).unwrap()
    }

    #[test]
    fn storage_and_lookup() {
        let p = PairColouring::from_fn(set("3..7"), 2, |x, y| ((x + y) % 2) as u8).unwrap();
        assert_eq!(p.colour(3, 4).unwrap(), 1);
        assert_eq!(p.colour(3, 5).unwrap(), 0);
        assert_eq!(p.colour(6, 7).unwrap(), 1);
        assert!(p.colour(4, 3).is_err());
        assert!(p.colour(3, 99).is_err());

        let q = PairColouring::from_fn(set("3..7"), 3, |x, y| ((x * y) % 3) as u8).unwrap();
        assert_eq!(q.colour(3, 5).unwrap(), 0);
        assert_eq!(q.colour(4, 5).unwrap(), 2);
    }

    #[test]
    fn pair_index_roundtrip() {
        let n = 9;
        let mut seen = std::collections::HashSet::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let idx = pair_index(n, i, j);
                assert_eq!(pair_from_index(n, idx), (i, j));
                assert!(seen.insert(idx));
            }
        }
        assert_eq!(seen.len(), n * (n - 1) / 2);
    }

    #[test]
    fn homogeneity() {
        let constant = PairColouring::constant(set("3..10"), 2, 0).unwrap();
        assert_eq!(is_homogeneous(&set("4, 6, 9"), &constant).unwrap(), Some(0));

        let p = PairColouring::from_fn(set("3..5"), 2, |x, y| u8::from((x, y) == (3, 5))).unwrap();
        assert_eq!(is_homogeneous(&set("3..5"), &p).unwrap(), None);
        assert_eq!(is_homogeneous(&set("4"), &p).unwrap(), Some(0));
        assert_eq!(is_homogeneous(&FiniteSet::empty(), &p).unwrap(), Some(0));
        assert!(is_homogeneous(&set("3, 99"), &p).is_err());
    }

    #[test]
    fn transitivity() {
        for t in [0, 4, 5, 7, 100] {
            assert!(is_transitive(&PairColouring::threshold(set("3..7"), t).unwrap()).unwrap());
        }
        let parity = PairColouring::from_fn(set("3..7"), 2, |x, y| ((x ^ y) & 1) as u8).unwrap();
        assert!(!is_transitive(&parity).unwrap());
        assert!(is_transitive(&PairColouring::constant(set("3..7"), 2, 1).unwrap()).unwrap());
        let three = PairColouring::constant(set("3..7"), 3, 0).unwrap();
        assert!(matches!(is_transitive(&three), Err(ColouringError::NotTwoColours(3))));
    }

    #[test]
    fn restriction_preserves_structure() {
        let p = PairColouring::threshold(set("3..9"), 5).unwrap();
        let sub = p.restrict_to(&set("3, 5, 8")).unwrap();
        assert_eq!(sub.colour(3, 5).unwrap(), p.colour(3, 5).unwrap());
        assert_eq!(sub.colour(5, 8).unwrap(), p.colour(5, 8).unwrap());
        assert!(is_transitive(&sub).unwrap());
        assert!(p.restrict_to(&set("3, 99")).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let e = ColouringEnumeration::new(set("3..5"), 2, 1 << 20).unwrap();
        assert_eq!(e.total(), 8);
        let e = ColouringEnumeration::new(set("3..7"), 2, 1 << 20).unwrap();
        assert_eq!(e.total(), 1024);
        let e = ColouringEnumeration::new(set("3, 4"), 3, 1 << 20).unwrap();
        assert_eq!(e.total(), 3);
        assert!(matches!(
            ColouringEnumeration::new(set("3..10"), 2, 4),
            Err(ColouringError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_is_exhaustive_and_chunks_partition() {
        let e = ColouringEnumeration::new(set("3..5"), 2, 1 << 20).unwrap();
        let all: Vec<PairColouring> = e.range(0, e.total()).map(|(_, p)| p).collect();
        let distinct: std::collections::HashSet<Vec<(u64, u64, u8)>> =
            all.iter().map(|p| p.pairs()).collect();
        assert_eq!(distinct.len(), 8);

        for chunks in [1, 2, 3, 5, 16] {
            let ranges = e.chunks(chunks);
            let mut covered = 0u128;
            let mut expect = 0u128;
            for (lo, hi) in ranges {
                assert_eq!(lo, expect);
                covered += hi - lo;
                expect = hi;
            }
            assert_eq!(covered, e.total());
        }
    }

    #[test]
    fn generators_are_deterministic() {
        let spec = ColouringSpec::Generator(GeneratorKind::Random { seed: 42 });
        let a = generate(&spec, set("3..20"), 2).unwrap();
        let b = generate(&spec, set("3..20"), 2).unwrap();
        assert_eq!(a, b);
        let c = generate(
            &ColouringSpec::Generator(GeneratorKind::Random { seed: 43 }),
            set("3..20"),
            2,
        )
        .unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn transitive_generators_validate() {
        // Rejection path (small base).
        let small = generate(
            &ColouringSpec::Generator(GeneratorKind::RandomTransitive { seed: 7 }),
            set("3..8"),
            2,
        )
        .unwrap();
        assert!(is_transitive(&small).unwrap());
        // Construction path (large base).
        for seed in 0..6 {
            let big = generate(
                &ColouringSpec::Generator(GeneratorKind::RandomTransitive { seed }),
                set("3..30"),
                2,
            )
            .unwrap();
            assert!(is_transitive(&big).unwrap());
        }
        let thr = generate(
            &ColouringSpec::Generator(GeneratorKind::ThresholdTransitive { threshold: 5 }),
            set("3..7"),
            2,
        )
        .unwrap();
        assert!(is_transitive(&thr).unwrap());
        assert_eq!(thr.colour(3, 5).unwrap(), 0);
        assert_eq!(thr.colour(3, 6).unwrap(), 1);
    }

    #[test]
    fn json_roundtrip_and_rejection() {
        let p = PairColouring::random(set("3..9"), 3, 5).unwrap();
        let text = to_json(&p);
        let q = from_json(&text).unwrap();
        assert_eq!(p, q);

        let generator = r#"{"set":[3,4,5],"colours":2,"generator":{"kind":"constant","colour":1}}"#;
        let g = from_json(generator).unwrap();
        assert_eq!(g.colour(3, 5).unwrap(), 1);

        // Duplicate and missing pairs are rejected.
        let dup = r#"{"set":[3,4,5],"colours":2,"pairs":[[3,4,0],[3,4,1],[3,5,0],[4,5,0]]}"#;
        assert!(matches!(from_json(dup), Err(ColouringError::DuplicatePair { .. })));
        let gap = r#"{"set":[3,4,5],"colours":2,"pairs":[[3,4,0],[3,5,0]]}"#;
        assert!(matches!(from_json(gap), Err(ColouringError::MissingPair { .. })));
        let bad = r#"{"set":[3,4,5],"colours":2,"pairs":[[4,3,0],[3,4,0],[3,5,0]]}"#;
        assert!(matches!(from_json(bad), Err(ColouringError::BadPair { .. })));
    }
}
