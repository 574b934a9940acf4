//! Registered property suites.
//!
//! Each suite checks one cluster of invariants, deterministically per seed,
//! and reports the first failing instance per property after greedy
//! shrinking (exhaustive suites enumerate smallest-first, so their first
//! failure is already minimal).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::colouring::{
    generate, is_homogeneous, is_transitive, to_json, from_json, ColouringEnumeration,
    ColouringSpec, GeneratorKind, PairColouring,
};
use crate::extract::{
    ads_homogeneous, em_transitive_subset, grouping, grouping_fixed, grouping_omega, hmph,
    ks_descent_trace, ks_homogeneous, rt22_homogeneous, stabilize_above, stabilize_below,
    validate_grouping, ExtractError,
};
use crate::ordinal::{enumerate_ordinals, Ordinal};
use crate::sets::{
    interval_is_large, is_exp_sparse, is_large, is_sparse, majority_select, partition_decompose, restrict, sparse_subset, FiniteSet, SetError,
};
use crate::verify::{exhaustive_rt_check, homogeneous_exists, RtVerdict, VerifyError};
use crate::Mode;

/// One failing property instance, minimized where the suite knows how.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteFailure {
    pub property: String,
    pub instance: String,
}

/// Outcome of a suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: u64,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Outcome {
    cases: u64,
    failures: Vec<SuiteFailure>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { cases: 0, failures: Vec::new() }
    }

    fn case(&mut self) {
        self.cases += 1;
    }

    fn check(&mut self, ok: bool, property: &str, instance: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && !self.failures.iter().any(|f| f.property == property) {
            self.failures.push(SuiteFailure {
                property: property.to_string(),
                instance: instance(),
            });
        }
    }
}

type SuiteFn = fn(u64) -> Outcome;

const SUITES: &[(&str, SuiteFn)] = &[
    ("ordinal-step-monotonicity", suite_step_monotonicity),
    ("ordinal-sum-laws", suite_sum_laws),
    ("largeness-domination", suite_domination),
    ("largeness-partition", suite_partition),
    ("restrict-minimality", suite_restrict_minimality),
    ("sparse-growth", suite_sparse_growth),
    ("sparse-subset", suite_sparse_subset),
    ("majority-select", suite_majority),
    ("colouring-roundtrip", suite_colouring_roundtrip),
    ("hmph-counting", suite_hmph_counting),
    ("hmph-laws", suite_hmph_laws),
    ("descent", suite_descent),
    ("extractor-soundness", suite_extractor_soundness),
    ("ads-oracle", suite_ads_oracle),
    ("ramsey-r33", suite_ramsey_r33),
];

/// The registered suite names.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs a registered suite; deterministic per seed.
pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport, VerifyError> {
    let Some((_, f)) = SUITES.iter().find(|(n, _)| *n == name) else {
        return Err(VerifyError::UnknownSuite(name.to_string()));
    };
    let outcome = f(seed);
    Ok(SuiteReport {
        suite: name.to_string(),
        seed,
        cases: outcome.cases,
        failures: outcome.failures,
    })
}

/// Greedy shrink: drop one element at a time while the instance still fails,
/// largest first (dropping a minimum inflates what largeness demands).
fn shrink_set(mut set: FiniteSet, fails: impl Fn(&FiniteSet) -> bool) -> FiniteSet {
    loop {
        let mut shrunk = None;
        for i in (0..set.len()).rev() {
            let mut v = set.elements().to_vec();
            v.remove(i);
            let candidate = FiniteSet::from_sorted(v);
            if fails(&candidate) {
                shrunk = Some(candidate);
                break;
            }
        }
        match shrunk {
            Some(s) => set = s,
            None => return set,
        }
    }
}

fn random_subset(rng: &mut ChaCha8Rng, lo: u64, hi: u64, max_len: usize) -> FiniteSet {
    let len = rng.gen_range(0..=max_len);
    let mut picks = std::collections::BTreeSet::new();
    while picks.len() < len && (picks.len() as u64) < hi - lo + 1 {
        picks.insert(rng.gen_range(lo..=hi));
    }
    FiniteSet::from_sorted(picks.into_iter().collect())
}

fn random_ordinal(rng: &mut ChaCha8Rng, max_exp: u32, max_coeff: u64) -> Ordinal {
    let mut terms = Vec::new();
    for exp in (0..=max_exp).rev() {
        if rng.gen_bool(0.5) {
            terms.push(crate::ordinal::Term::new(exp, rng.gen_range(1..=max_coeff)));
        }
    }
    Ordinal::from_terms(terms).expect("small coefficients")
}

// --- ordinal suites --------------------------------------------------------

fn suite_step_monotonicity(_seed: u64) -> Outcome {
    let mut out = Outcome::new();
    let all = enumerate_ordinals(3, 4);
    let max_m = 8u64;
    // Precompute steps so the quadratic sweep only compares.
    let steps: Vec<Vec<Ordinal>> =
        all.iter().map(|a| (0..=max_m).map(|m| a.step(m)).collect()).collect();
    for (a, srow) in all.iter().zip(&steps) {
        for m in 0..=max_m as usize {
            if !a.is_zero() {
                out.check(srow[m] < *a, "step-decreases", || format!("{a}[{m}]"));
            }
            if m < max_m as usize {
                out.check(srow[m] <= srow[m + 1], "step-monotone-in-m", || format!("{a}[{m}]"));
            }
        }
    }
    for (i, a) in all.iter().enumerate() {
        for (j, b) in all.iter().enumerate() {
            if a > b {
                continue;
            }
            for m in (a.max_coeff() + 1)..=max_m {
                out.check(
                    steps[i][m as usize] <= steps[j][m as usize],
                    "step-preserves-order-above-mc",
                    || format!("{a} <= {b}, m = {m}"),
                );
            }
        }
    }
    out
}

fn suite_sum_laws(_seed: u64) -> Outcome {
    let mut out = Outcome::new();
    let small = enumerate_ordinals(2, 2);
    for a in &small {
        for b in &small {
            if !a.can_sum(b) {
                continue;
            }
            let ab = a.sum(b).unwrap();
            out.check(ab >= *a && ab >= *b, "sum-dominates-operands", || format!("{a} + {b}"));
            for c in &small {
                if b.can_sum(c) && ab.can_sum(c) {
                    let left = ab.sum(c).unwrap();
                    let right = a.sum(&b.sum(c).unwrap()).unwrap();
                    out.check(left == right, "sum-associative", || format!("{a} + {b} + {c}"));
                }
            }
        }
    }
    for a in enumerate_ordinals(3, 4) {
        let round: Ordinal = a.to_string().parse().expect("printed form parses");
        out.check(round == a, "print-parse-roundtrip", || a.to_string());
    }
    out
}

// --- largeness suites ------------------------------------------------------

fn suite_domination(seed: u64) -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        let a = random_ordinal(&mut rng, 2, 4);
        let x = random_subset(&mut rng, 3, 90, 30);
        if x.is_empty() {
            out.case();
            continue;
        }
        // Lower x pointwise (keeping strict increase) and optionally extend.
        let mut y: Vec<u64> = Vec::with_capacity(x.len());
        for (i, e) in x.iter().enumerate() {
            let floor = if i == 0 { 3 } else { y[i - 1] + 1 };
            y.push(rng.gen_range(floor..=e.max(floor)));
        }
        let mut extension = y.last().copied().unwrap_or(3);
        for _ in 0..rng.gen_range(0..3u32) {
            extension += rng.gen_range(1..5u64);
            y.push(extension);
        }
        let y = FiniteSet::from_sorted(y);
        let violates = |x: &FiniteSet, y: &FiniteSet| is_large(x, &a) && !is_large(y, &a);
        out.check(!violates(&x, &y), "pointwise-domination", || {
            // Shrink by dropping shared coordinates while the violation
            // persists.
            let (mut sx, mut sy) = (x.clone(), y.clone());
            loop {
                let mut reduced = None;
                for i in 0..sx.len() {
                    let mut vx = sx.elements().to_vec();
                    let mut vy = sy.elements().to_vec();
                    vx.remove(i);
                    vy.remove(i);
                    let (cx, cy) = (FiniteSet::from_sorted(vx), FiniteSet::from_sorted(vy));
                    if violates(&cx, &cy) {
                        reduced = Some((cx, cy));
                        break;
                    }
                }
                match reduced {
                    Some((cx, cy)) => (sx, sy) = (cx, cy),
                    None => break,
                }
            }
            format!("a = {a}, x = {sx}, y = {sy}")
        });
    }
    out
}

fn suite_partition(_seed: u64) -> Outcome {
    let mut out = Outcome::new();
    let pool: Vec<u64> = (3..=10).collect();
    let parts: Vec<Ordinal> = ["1", "2", "w", "w*2", "w^2"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let mut part_lists: Vec<Vec<Ordinal>> = vec![vec![]];
    for a in &parts {
        part_lists.push(vec![a.clone()]);
        for b in &parts {
            if a.can_sum(b) {
                part_lists.push(vec![a.clone(), b.clone()]);
            }
        }
    }
    for mask in 0u32..(1 << pool.len()) {
        let x = FiniteSet::from_sorted(
            pool.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e).collect(),
        );
        for parts in &part_lists {
            let total = crate::sets::parts_total(parts).unwrap();
            let brute = brute_force_partition(&x, parts);
            let greedy = partition_decompose(&x, parts);
            let large = is_large(&x, &total);
            out.check(
                brute == large && greedy.is_ok() == large,
                "partition-equivalence",
                || format!("x = {x}, parts = {parts:?} (brute {brute}, large {large})"),
            );
            if let Ok(blocks) = &greedy {
                let ok = blocks.iter().rev().zip(parts.iter()).all(|(b, a)| is_large(b, a));
                out.check(ok, "decompose-blocks-large", || format!("x = {x}, parts = {parts:?}"));
            }
        }
    }
    out
}

/// Independent oracle for the partition lemma: try every cut tuple.
fn brute_force_partition(x: &FiniteSet, parts: &[Ordinal]) -> bool {
    // Blocks are consecutive segments covering x, block i large for the
    // reversed part order.
    fn rec(x: &FiniteSet, from: usize, parts: &[Ordinal]) -> bool {
        match parts {
            [] => from == x.len(),
            [last] => {
                let seg = FiniteSet::from_sorted(x.elements()[from..].to_vec());
                !seg.is_empty() && is_large(&seg, last) || (seg.is_empty() && last.is_zero())
            }
            [head @ .., last] => {
                for cut in (from + 1)..=x.len() {
                    let seg = FiniteSet::from_sorted(x.elements()[from..cut].to_vec());
                    if is_large(&seg, last) && rec(x, cut, head) {
                        return true;
                    }
                }
                false
            }
        }
    }
    if parts.is_empty() {
        return true;
    }
    if x.is_empty() {
        return parts.iter().all(|p| p.is_zero());
    }
    rec(x, 0, parts)
}

fn suite_restrict_minimality(seed: u64) -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let a = random_ordinal(&mut rng, 2, 3);
        let x = random_subset(&mut rng, 3, 80, 40);
        match restrict(&x, &a) {
            Ok(r) => {
                out.check(is_large(&r, &a), "restrict-is-large", || format!("a = {a}, x = {x}"));
                if !r.is_empty() {
                    let shorter = r.prefix(r.len() - 1);
                    out.check(!is_large(&shorter, &a), "restrict-minimal", || {
                        let s = shrink_set(x.clone(), |s| {
                            restrict(s, &a).is_ok_and(|r| {
                                !r.is_empty() && is_large(&r.prefix(r.len() - 1), &a)
                            })
                        });
                        format!("a = {a}, x = {s}")
                    });
                }
                out.check(
                    r.elements() == &x.elements()[..r.len()],
                    "restrict-is-prefix",
                    || format!("a = {a}, x = {x}"),
                );
            }
            Err(SetError::NotLarge { .. }) => {
                out.check(!is_large(&x, &a), "restrict-fails-only-when-small", || {
                    format!("a = {a}, x = {x}")
                });
            }
            Err(e) => out.check(false, "restrict-unexpected-error", || e.to_string()),
        }
    }
    out
}

fn suite_sparse_growth(_seed: u64) -> Outcome {
    let mut out = Outcome::new();
    // Minimal y with (x, y] omega-large exceeds 2x; with (x, y] omega^2-large
    // it exceeds x * 2^x. These growth facts are what make every
    // omega^3-sparse set exp-sparse.
    for x in 3u64..40 {
        let y = minimal_large_gap(&Ordinal::omega(), x, 4 * x + 4);
        out.check(y.is_some_and(|y| y > 2 * x), "omega-gap-doubles", || format!("x = {x}"));
    }
    for x in 3u64..14 {
        let bound = x.checked_shl(x as u32).unwrap();
        let y = minimal_large_gap(&Ordinal::power(2), x, bound * 4);
        out.check(y.is_some_and(|y| y > bound), "omega2-gap-exponential", || format!("x = {x}"));
    }
    // No representable pair is omega^3-sparse, so every representable
    // omega^3-sparse set (a singleton) is exp-sparse vacuously.
    for x in 3u64..20 {
        let pair = FiniteSet::from_sorted(vec![x, u64::MAX]);
        out.check(
            !is_sparse(&pair, &Ordinal::power(3)) || is_exp_sparse(&pair).unwrap(),
            "omega3-sparse-implies-exp-sparse",
            || format!("x = {x}"),
        );
    }
    out
}

fn minimal_large_gap(a: &Ordinal, x: u64, cap: u64) -> Option<u64> {
    // Interval largeness is monotone in the right endpoint.
    let mut lo = x + 1;
    let mut hi = cap;
    if !interval_is_large(a, x, hi) {
        return None;
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if interval_is_large(a, x, mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Some(lo)
}

fn suite_sparse_subset(_seed: u64) -> Outcome {
    let mut out = Outcome::new();
    let strict_base = FiniteSet::range(3, 94);
    for (n, m) in [(0u32, 0u32), (0, 1), (1, 0), (1, 1), (2, 0), (0, 2)] {
        for mode in [Mode::Strict, Mode::Permissive] {
            match sparse_subset(&strict_base, n, m, mode) {
                Ok(y) => {
                    let ok = is_large(&y, &Ordinal::power(n))
                        && is_sparse(&y, &Ordinal::power(m))
                        && y.is_subset_of(&strict_base);
                    out.check(ok, "sparse-subset-validates", || format!("(n, m) = ({n}, {m})"));
                }
                Err(e) => out.check(false, "sparse-subset-feasible-grid", || {
                    format!("(n, m) = ({n}, {m}), {mode:?}: {e}")
                }),
            }
        }
    }
    // Greedy completeness on the minimal example.
    let y = sparse_subset(&FiniteSet::range(3, 39), 1, 1, Mode::Permissive);
    out.check(
        y.as_ref().is_ok_and(|y| y == &FiniteSet::from_sorted(vec![3, 8, 18, 38])),
        "greedy-sparse-pointwise-minimal",
        || format!("{y:?}"),
    );
    out.check(
        sparse_subset(&FiniteSet::range(3, 37), 1, 1, Mode::Permissive).is_err(),
        "greedy-sparse-detects-unattainable",
        || "range 3..37".into(),
    );
    out
}

fn suite_majority(seed: u64) -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = FiniteSet::range(3, 38);
    for _ in 0..300 {
        let y0 = FiniteSet::from_sorted(x.iter().filter(|_| rng.gen_bool(0.5)).collect());
        let y1 = x.difference(&y0);
        match majority_select(&y0, &y1, 1, 1, Mode::Permissive) {
            Ok(w) => {
                let side = if w.side == 0 { &y0 } else { &y1 };
                out.check(
                    w.witness.is_subset_of(side) && is_large(&w.witness, &Ordinal::omega()),
                    "majority-witness-validates",
                    || format!("y0 = {y0}"),
                );
            }
            Err(SetError::NoMajority { .. }) => {
                out.check(
                    !is_large(&y0, &Ordinal::omega()) && !is_large(&y1, &Ordinal::omega()),
                    "majority-failure-is-genuine",
                    || format!("y0 = {y0}"),
                );
            }
            Err(e) => out.check(false, "majority-unexpected-error", || e.to_string()),
        }
    }
    out
}

// --- colouring suites ------------------------------------------------------

fn suite_colouring_roundtrip(seed: u64) -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 {
        let base = random_subset(&mut rng, 3, 60, 12);
        if base.len() < 2 {
            out.case();
            continue;
        }
        let colours = if rng.gen_bool(0.7) { 2u16 } else { 3 };
        let p = PairColouring::random(base.clone(), colours, rng.gen()).unwrap();
        let round = from_json(&to_json(&p));
        out.check(round.as_ref() == Ok(&p), "colouring-json-roundtrip", || to_json(&p));

        // Restriction stays total and preserves transitivity.
        let sub = FiniteSet::from_sorted(base.iter().filter(|_| rng.gen_bool(0.6)).collect());
        if sub.len() >= 2 {
            let q = p.restrict_to(&sub).unwrap();
            let total = sub
                .iter()
                .flat_map(|a| sub.iter().filter(move |&b| b > a).map(move |b| (a, b)))
                .all(|(a, b)| q.colour(a, b).is_ok() && q.colour(a, b) == p.colour(a, b));
            out.check(total, "restriction-total", || format!("base = {base}, sub = {sub}"));
        }
        let t = generate(
            &ColouringSpec::Generator(GeneratorKind::ThresholdTransitive {
                threshold: rng.gen_range(3..=60),
            }),
            base.clone(),
            2,
        )
        .unwrap();
        let sub2 = FiniteSet::from_sorted(base.iter().filter(|_| rng.gen_bool(0.6)).collect());
        let still = sub2.len() < 2 || is_transitive(&t.restrict_to(&sub2).unwrap()).unwrap();
        out.check(still, "restriction-preserves-transitivity", || format!("sub = {sub2}"));
    }
    // Enumeration chunks partition the space.
    let e = ColouringEnumeration::new(FiniteSet::range(3, 6), 2, 1 << 20).unwrap();
    for chunks in [1usize, 2, 3, 7] {
        let ranges = e.chunks(chunks);
        let covered: u128 = ranges.iter().map(|(lo, hi)| hi - lo).sum();
        let contiguous = ranges.windows(2).all(|w| w[0].1 == w[1].0);
        out.check(
            covered == e.total() && contiguous && ranges[0].0 == 0,
            "enumeration-chunks-partition",
            || format!("chunks = {chunks}"),
        );
    }
    out
}

// --- prehomogeneous suites -------------------------------------------------

fn suite_hmph_counting(seed: u64) -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let colours = if rng.gen_bool(0.5) { 2u16 } else { 3 };
        let base = random_subset(&mut rng, 3, 200, 40);
        if base.len() < 2 {
            out.case();
            continue;
        }
        let p = PairColouring::random(base.clone(), colours, rng.gen()).unwrap();
        let records = hmph(&base, &p).unwrap();
        let max_len = records.iter().map(|r| r.sigma.len()).max().unwrap_or(0);
        let mut ok = true;
        for m in 0..=max_len as u32 {
            let count = records.iter().filter(|r| r.sigma.len() as u32 <= m).count() as u128;
            let bound = u128::from(colours).checked_pow(m).unwrap_or(u128::MAX);
            if count > bound {
                ok = false;
                break;
            }
        }
        out.check(ok, "hmph-counting-bound", || format!("base = {base}, k = {colours}"));
    }
    out
}

fn suite_hmph_laws(seed: u64) -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let colours = if rng.gen_bool(0.5) { 2u16 } else { 3 };
        let base = random_subset(&mut rng, 3, 200, 40);
        if base.len() < 2 {
            out.case();
            continue;
        }
        let p = PairColouring::random(base.clone(), colours, rng.gen()).unwrap();
        let records = hmph(&base, &p).unwrap();
        let mut prehomogeneous = true;
        let mut prefixes = true;
        let mut ho_min = true;
        let mut homogeneous = true;
        for (idx, r) in records.iter().enumerate() {
            let s = r.sigma.elements();
            for i in 0..s.len() {
                for j in (i + 1)..s.len() {
                    if p.colour(s[i], s[j]).unwrap() != p.colour(s[i], r.owner).unwrap() {
                        prehomogeneous = false;
                    }
                }
            }
            for len in 1..s.len() {
                let owner_idx = base.position(s[len - 1]).unwrap();
                if records[owner_idx].sigma.elements() != &s[..len] {
                    prefixes = false;
                }
            }
            if let Some(sm) = &r.sigma_minus {
                let last = sm.max_elem().unwrap();
                for ho in r.ho.values() {
                    if ho.min_elem().unwrap() > last {
                        ho_min = false;
                    }
                }
            }
            for (&c, ho) in &r.ho {
                let cand = ho.union(&FiniteSet::singleton(r.owner));
                if cand.len() >= 2 && is_homogeneous(&cand, &p).unwrap() != Some(c) {
                    homogeneous = false;
                }
            }
            let _ = idx;
        }
        out.check(prehomogeneous, "hmph-prehomogeneity", || format!("base = {base}"));
        out.check(prefixes, "hmph-prefix-structure", || format!("base = {base}"));
        out.check(ho_min, "hmph-ho-minimum", || format!("base = {base}"));
        out.check(homogeneous, "hmph-candidates-homogeneous", || format!("base = {base}"));
    }
    out
}

fn suite_descent(seed: u64) -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let mut picks = std::collections::BTreeSet::new();
        while picks.len() < 20 {
            picks.insert(rng.gen_range(50..80u64));
        }
        let base = FiniteSet::from_sorted(picks.into_iter().collect());
        let p = PairColouring::random(base.clone(), 2, rng.gen()).unwrap();
        match ks_descent_trace(&base, &p, 2) {
            Ok(trace) => {
                out.check(trace.all_checks_hold(), "descent-step-and-mc", || format!("base = {base}"));
                out.check(
                    trace.rows.iter().all(|r| !r.gamma.is_zero()),
                    "descent-gamma-positive",
                    || format!("base = {base}"),
                );
            }
            Err(e) => out.check(false, "descent-trace-computes", || e.to_string()),
        }
    }
    out
}

// --- extractor suites ------------------------------------------------------

fn suite_extractor_soundness(seed: u64) -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = FiniteSet::range(3, 38);
    for _ in 0..1000 {
        let p = PairColouring::random(x.clone(), 2, rng.gen()).unwrap();
        extractor_battery(&mut out, &x, &p);
    }
    out
}

/// Runs every extractor permissively and checks that successes validate.
fn extractor_battery(out: &mut Outcome, x: &FiniteSet, p: &PairColouring) {
    let omega = Ordinal::omega();

    let w = FiniteSet::from_sorted(vec![3, 4]);
    let body = FiniteSet::from_sorted(x.iter().filter(|&e| e >= 5).collect());
    match stabilize_below(&w, &body, p, 1, Mode::Permissive) {
        Ok(y) => {
            let constant = w.iter().all(|a| {
                let mut cs = y.iter().map(|e| p.colour(a, e).unwrap());
                let first = cs.next();
                cs.all(|c| Some(c) == first)
            });
            out.check(constant, "stabilize-below-sound", || format!("y = {y}"));
        }
        Err(ExtractError::Stage { .. }) => out.case(),
        Err(e) => out.check(false, "stabilize-below-error", || e.to_string()),
    }

    let above_w = FiniteSet::from_sorted(vec![37, 38]);
    let above_body = FiniteSet::from_sorted(x.iter().filter(|&e| e <= 36).collect());
    match stabilize_above(&above_body, &above_w, p, 1, Mode::Permissive) {
        Ok(y) => {
            let constant = above_w.iter().all(|a| {
                let mut cs = y.iter().map(|e| p.colour(e, a).unwrap());
                let first = cs.next();
                cs.all(|c| Some(c) == first)
            });
            out.check(constant, "stabilize-above-sound", || format!("y = {y}"));
        }
        Err(ExtractError::Stage { .. }) => out.case(),
        Err(e) => out.check(false, "stabilize-above-error", || e.to_string()),
    }

    match grouping_fixed(x, p, 0, 3, Mode::Permissive) {
        Ok(g) => out.check(
            validate_grouping(&g, p, &Ordinal::one(), &Ordinal::nat(3)).is_ok(),
            "grouping-fixed-sound",
            || format!("{:?}", g.blocks()),
        ),
        Err(ExtractError::Stage { .. }) => out.case(),
        Err(e) => out.check(false, "grouping-fixed-error", || e.to_string()),
    }

    match grouping_omega(x, p, 0, Mode::Permissive) {
        Ok(g) => out.check(
            validate_grouping(&g, p, &Ordinal::one(), &omega).is_ok(),
            "grouping-omega-sound",
            || format!("{:?}", g.blocks()),
        ),
        Err(ExtractError::Stage { .. }) => out.case(),
        Err(e) => out.check(false, "grouping-omega-error", || e.to_string()),
    }

    match grouping(x, p, 0, 2, Mode::Permissive) {
        Ok(g) => out.check(
            validate_grouping(&g, p, &Ordinal::one(), &Ordinal::power(2)).is_ok(),
            "grouping-levels-sound",
            || format!("{:?}", g.blocks()),
        ),
        Err(ExtractError::Stage { .. }) => out.case(),
        Err(e) => out.check(false, "grouping-levels-error", || e.to_string()),
    }

    match ks_homogeneous(x, p, &omega, Mode::Permissive) {
        Ok((y, c)) => out.check(
            is_large(&y, &omega) && is_homogeneous(&y, p).unwrap() == Some(c),
            "ks-sound",
            || format!("y = {y}"),
        ),
        Err(ExtractError::NoCandidate { .. }) => out.case(),
        Err(e) => out.check(false, "ks-error", || e.to_string()),
    }

    match em_transitive_subset(x, p, 2, Mode::Permissive) {
        Ok(r) => out.check(
            is_large(&r.subset, &Ordinal::power(2))
                && is_transitive(&p.restrict_to(&r.subset).unwrap()).unwrap(),
            "em-sound",
            || format!("subset = {}", r.subset),
        ),
        Err(ExtractError::Stage { .. }) => out.case(),
        Err(e) => out.check(false, "em-error", || e.to_string()),
    }

    match ads_homogeneous(x, p, &omega, Mode::Permissive) {
        Ok((y, _)) => out.check(
            is_large(&y, &omega) && is_homogeneous(&y, p).unwrap().is_some(),
            "ads-sound",
            || format!("y = {y}"),
        ),
        // Random colourings are rarely transitive; the rejection is the
        // explicit failure the contract asks for.
        Err(ExtractError::NotTransitive) | Err(ExtractError::NoCandidate { .. }) => out.case(),
        Err(e) => out.check(false, "ads-error", || e.to_string()),
    }

    match rt22_homogeneous(x, p, 1, Mode::Permissive) {
        Ok(r) => out.check(
            is_large(&r.witness, &omega) && is_homogeneous(&r.witness, p).unwrap() == Some(r.colour),
            "rt22-sound",
            || format!("witness = {}", r.witness),
        ),
        Err(ExtractError::Stage { .. }) => out.case(),
        Err(e) => out.check(false, "rt22-error", || e.to_string()),
    }
}

fn suite_ads_oracle(_seed: u64) -> Outcome {
    let mut out = Outcome::new();
    let base = FiniteSet::range(3, 8);
    let enumeration = ColouringEnumeration::new(base.clone(), 2, 1 << 20).unwrap();
    let targets: Vec<Ordinal> =
        ["2", "3", "w"].iter().map(|s| s.parse().unwrap()).collect();
    for (_, p) in enumeration.range(0, enumeration.total()) {
        if !is_transitive(&p).unwrap() {
            continue;
        }
        for target in &targets {
            let oracle = homogeneous_exists(&base, &p, target, 1 << 24).unwrap();
            match ads_homogeneous(&base, &p, target, Mode::Permissive) {
                Ok((w, _)) => out.check(
                    oracle.is_some() && is_large(&w, target) && is_homogeneous(&w, &p).unwrap().is_some(),
                    "ads-agrees-with-oracle",
                    || format!("target = {target}, pairs = {:?}", p.pairs()),
                ),
                Err(ExtractError::NoCandidate { .. }) => out.check(
                    oracle.is_none(),
                    "ads-agrees-with-oracle",
                    || format!("target = {target}, pairs = {:?}", p.pairs()),
                ),
                Err(e) => out.check(false, "ads-oracle-error", || e.to_string()),
            }
        }
    }
    out
}

fn suite_ramsey_r33(_seed: u64) -> Outcome {
    let mut out = Outcome::new();
    let three = Ordinal::nat(3);
    match exhaustive_rt_check(&FiniteSet::range(10, 15), 2, &three, 1 << 20, 2) {
        Ok(RtVerdict::AllPass { checked }) => {
            out.check(checked == 1 << 15, "r33-six-points-pass", || checked.to_string())
        }
        other => out.check(false, "r33-six-points-pass", || format!("{other:?}")),
    }
    match exhaustive_rt_check(&FiniteSet::range(10, 14), 2, &three, 1 << 20, 2) {
        Ok(RtVerdict::Counterexample { colouring, .. }) => {
            let none = homogeneous_exists(&FiniteSet::range(10, 14), &colouring, &three, 1 << 24)
                .unwrap()
                .is_none();
            out.check(none, "r33-five-points-counterexample", || "reverification".into());
        }
        other => out.check(false, "r33-five-points-counterexample", || format!("{other:?}")),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_suites_pass(names: &[&str]) {
        for name in names {
            let report = run_suite(name, 0).unwrap();
            assert!(report.passed(), "suite {name} failed: {:?}", report.failures);
            assert!(report.cases > 0, "suite {name} ran no cases");
        }
    }

    #[test]
    fn ordinal_and_largeness_suites_pass() {
        assert_suites_pass(&[
            "ordinal-step-monotonicity",
            "ordinal-sum-laws",
            "largeness-domination",
            "largeness-partition",
            "restrict-minimality",
        ]);
    }

    #[test]
    fn sparseness_and_majority_suites_pass() {
        assert_suites_pass(&["sparse-growth", "sparse-subset", "majority-select"]);
    }

    #[test]
    fn colouring_and_hmph_suites_pass() {
        assert_suites_pass(&["colouring-roundtrip", "hmph-counting", "hmph-laws"]);
    }

    #[test]
    fn descent_suite_passes() {
        assert_suites_pass(&["descent"]);
    }

    #[test]
    fn extractor_soundness_suite_passes() {
        assert_suites_pass(&["extractor-soundness"]);
    }

    #[test]
    fn oracle_and_ramsey_suites_pass() {
        assert_suites_pass(&["ads-oracle", "ramsey-r33"]);
    }

    #[test]
    fn suites_are_deterministic_per_seed() {
        let a = run_suite("largeness-domination", 7).unwrap();
        let b = run_suite("largeness-domination", 7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_suites_are_rejected() {
        assert!(matches!(run_suite("no-such-suite", 0), Err(VerifyError::UnknownSuite(_))));
    }

    #[test]
    fn shrinking_minimizes_failures() {
        // A deliberately failing property: "is not omega-large" fails for
        // omega-large sets; the shrinker should cut to a minimal one.
        let x = FiniteSet::range(3, 20);
        let shrunk = shrink_set(x, |s| is_large(s, &Ordinal::omega()));
        assert!(is_large(&shrunk, &Ordinal::omega()));
        assert_eq!(shrunk.len(), 4, "minimal omega-large subset of 3..20 has 4 elements");
    }
}
