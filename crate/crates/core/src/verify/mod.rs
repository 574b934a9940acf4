//! Independent verification oracles: exact homogeneous-subset search,
//! exhaustive colouring checks, adversarial colouring search, and the
//! registered property suites.
//!
//! Everything here is deliberately separate from the extraction paths it
//! checks: the oracles decide by enumeration and backtracking, not by the
//! constructions under test.

mod adversarial;
mod exhaustive;
mod homog;
mod suites;

pub use adversarial::{adversarial_colouring, AdversarialReport, Verification};
pub use exhaustive::{exhaustive_rt_check, RtVerdict};
pub use homog::homogeneous_exists;
pub use suites::{run_suite, suite_names, SuiteFailure, SuiteReport};

use thiserror::Error;

use crate::colouring::ColouringError;
use crate::sets::SetError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("unknown suite {0:?}; see the suite list")]
    UnknownSuite(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
}

/// Maps `f` over `0..count` with a fixed-size worker pool, returning results
/// in index order. The output is independent of `jobs`, so verdicts never
/// depend on parallelism.
pub fn par_map_indexed<R, F>(jobs: usize, count: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync,
{
    let jobs = jobs.max(1);
    if jobs == 1 || count <= 1 {
        return (0..count).map(f).collect();
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut slots: Vec<Option<R>> = Vec::with_capacity(count);
    slots.resize_with(count, || None);
    let slots_mutex = std::sync::Mutex::new(&mut slots);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(count) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= count {
                    break;
                }
                let r = f(i);
                slots_mutex.lock().unwrap()[i] = Some(r);
            });
        }
    });
    slots.into_iter().map(|r| r.expect("every index filled")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn par_map_is_order_stable() {
        let sequential = par_map_indexed(1, 100, |i| i * i);
        for jobs in [2, 4, 8] {
            assert_eq!(par_map_indexed(jobs, 100, |i| i * i), sequential);
        }
        assert!(par_map_indexed(4, 0, |i| i).is_empty());
    }
}
