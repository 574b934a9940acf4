//! Exhaustive Ramsey-largeness checking over every colouring of a base.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::colouring::{ColouringEnumeration, PairColouring};
use crate::ordinal::Ordinal;
use crate::sets::FiniteSet;
use crate::verify::{homogeneous_exists, VerifyError};

/// Outcome of [`exhaustive_rt_check`].
#[derive(Clone, Debug, PartialEq)]
pub enum RtVerdict {
    /// Every colouring admits an `a`-large homogeneous subset.
    AllPass { checked: u128 },
    /// The first colouring (in enumeration order) admitting none.
    Counterexample { index: u128, colouring: PairColouring },
}

/// Decides whether every `k`-colouring of pairs from `x` admits an `a`-large
/// homogeneous subset, by enumerating all of them.
///
/// The enumeration space `k^C(|x|,2)` must fit in `budget`. Chunks of the
/// index range are processed by `jobs` workers; the verdict is the minimal
/// counterexample index regardless of scheduling, so results are
/// deterministic for any worker count.
pub fn exhaustive_rt_check(
    x: &FiniteSet,
    k: u16,
    a: &Ordinal,
    budget: u128,
    jobs: usize,
) -> Result<RtVerdict, VerifyError> {
    x.require_paper_min().map_err(VerifyError::from)?;
    let enumeration = ColouringEnumeration::new(x.clone(), k, budget)?;
    let total = enumeration.total();
    let jobs = jobs.max(1);
    let chunks = enumeration.chunks(jobs * 4);

    let next_chunk = AtomicUsize::new(0);
    let best: Mutex<u128> = Mutex::new(u128::MAX);
    let error: Mutex<Option<VerifyError>> = Mutex::new(None);

    std::thread::scope(|scope| {
        for _ in 0..jobs.min(chunks.len()) {
            scope.spawn(|| loop {
                let c = next_chunk.fetch_add(1, Ordering::Relaxed);
                let Some(&(lo, hi)) = chunks.get(c) else { break };
                if lo >= *best.lock().unwrap() {
                    continue;
                }
                for (index, colouring) in enumeration.range(lo, hi) {
                    if index % 256 == 0 && index >= *best.lock().unwrap() {
                        break;
                    }
                    match homogeneous_exists(x, &colouring, a, u64::MAX) {
                        Ok(Some(_)) => {}
                        Ok(None) => {
                            let mut b = best.lock().unwrap();
                            if index < *b {
                                *b = index;
                            }
                            break;
                        }
                        Err(e) => {
                            *error.lock().unwrap() = Some(e);
                            return;
                        }
                    }
                }
            });
        }
    });

    if let Some(e) = error.into_inner().unwrap() {
        return Err(e);
    }
    let best = best.into_inner().unwrap();
    if best == u128::MAX {
        Ok(RtVerdict::AllPass { checked: total })
    } else {
        Ok(RtVerdict::Counterexample { index: best, colouring: enumeration.at(best) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> FiniteSet {
        FiniteSet::parse(s).unwrap()
    }

    #[test]
    fn singleton_targets_always_pass() {
        let v = exhaustive_rt_check(&set("10..13"), 2, &Ordinal::one(), 1 << 20, 1).unwrap();
        assert_eq!(v, RtVerdict::AllPass { checked: 64 });
    }

    #[test]
    fn five_points_admit_a_triangle_free_colouring() {
        let v = exhaustive_rt_check(&set("10..14"), 2, &Ordinal::nat(3), 1 << 20, 1).unwrap();
        match v {
            RtVerdict::Counterexample { index, colouring } => {
                assert!(homogeneous_exists(&set("10..14"), &colouring, &Ordinal::nat(3), 1 << 24)
                    .unwrap()
                    .is_none());
                // Determinism: the same index for any worker count.
                for jobs in [2, 8] {
                    match exhaustive_rt_check(&set("10..14"), 2, &Ordinal::nat(3), 1 << 20, jobs)
                        .unwrap()
                    {
                        RtVerdict::Counterexample { index: i2, .. } => assert_eq!(index, i2),
                        other => panic!("expected counterexample, got {other:?}"),
                    }
                }
            }
            other => panic!("expected counterexample, got {other:?}"),
        }
    }

    #[test]
    fn budget_gates_the_enumeration() {
        assert!(matches!(
            exhaustive_rt_check(&set("10..20"), 2, &Ordinal::nat(3), 1 << 10, 1),
            Err(VerifyError::Colouring(_))
        ));
        assert!(matches!(
            exhaustive_rt_check(&set("1, 2, 3"), 2, &Ordinal::nat(2), 1 << 10, 1),
            Err(VerifyError::Set(_))
        ));
    }
}
