//! Ordinal descent bookkeeping for the prehomogeneous-sequence argument.
//!
//! When a colouring admits no omega-large candidate, the colour-set sizes of
//! the prehomogeneous sequences drive a strictly descending ordinal
//! assignment: at every index the combined ordinal drops by at least a
//! fundamental-sequence step. The trace materializes that assignment row by
//! row, together with the per-step inequality checks.

use serde::Serialize;

use crate::colouring::PairColouring;
use crate::extract::hmph::hmph;
use crate::extract::{ks_homogeneous, ExtractError};
use crate::ordinal::Ordinal;
use crate::sets::FiniteSet;
use crate::Mode;

/// Per-degree bookkeeping of one row.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DegreeEntry {
    pub degree: u32,
    /// `w^{n-d} * (x_{j0} - m1 - m2)`, or zero when no critical index exists.
    pub gamma_d: Ordinal,
    /// How many indices so far have a colour set of exactly this size.
    pub m1: u64,
    /// How many indices so far are critical one degree up.
    pub m2: u64,
    /// The largest critical index at this degree, if any.
    pub critical_index: Option<usize>,
}

/// One row of the descent trace.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DescentRow {
    pub index: usize,
    pub element: u64,
    /// The combined ordinal at this index.
    pub gamma: Ordinal,
    /// The degree at which this index is critical, if it is.
    pub critical_degree: Option<u32>,
    pub degrees: Vec<DegreeEntry>,
    /// `gamma_i <= step(gamma_{i-1}, x_i)`.
    pub step_ok: bool,
    /// `MC(gamma_{i-1}) < x_i`.
    pub mc_ok: bool,
}

/// The full descent trace.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DescentTrace {
    /// The starting exponent: row 0 carries `w^n`.
    pub exponent: u32,
    pub rows: Vec<DescentRow>,
}

impl DescentTrace {
    /// True when every per-step inequality holds.
    pub fn all_checks_hold(&self) -> bool {
        self.rows.iter().all(|r| r.step_ok && r.mc_ok)
    }
}

/// Computes the descent trace of `x` under `p` with starting ordinal `w^n`.
///
/// Requires `min x >= 3`, `n` at least the number of colours, and that no
/// prehomogeneous candidate is omega-large (checked by running the search);
/// under those hypotheses (plus the sparseness the bound argument assumes)
/// every row satisfies both inequality checks. On inputs outside the
/// argument's hypotheses a per-degree coefficient can go negative, which is
/// reported as an error rather than clamped.
pub fn ks_descent_trace(
    x: &FiniteSet,
    p: &PairColouring,
    n: u32,
    ) -> Result<DescentTrace, ExtractError> {
    x.require_paper_min().map_err(ExtractError::from)?;
    if n < u32::from(p.colours()) {
        return Err(ExtractError::Input(format!(
            "starting exponent {n} is below the colour count {}",
            p.colours()
        )));
    }
    if x.is_empty() {
        return Err(ExtractError::Input("empty input set".into()));
    }
    if ks_homogeneous(x, p, &Ordinal::omega(), Mode::Permissive).is_ok() {
        return Err(ExtractError::Precondition(
            "an omega-large candidate exists; the descent argument assumes there is none".into(),
        ));
    }

    let records = hmph(x, p)?;
    let elems = x.elements();
    let len = elems.len();
    let col_size: Vec<u32> = records.iter().map(|r| r.col.len() as u32).collect();
    // Criticality: the colour set has size d and the shortened prefix is new
    // among all earlier indices. The minimum's record has no shortened
    // prefix and never compares equal.
    let mut critical_at: Vec<Option<u32>> = vec![None; len];
    for i in 0..len {
        let d = col_size[i];
        if d == 0 {
            continue;
        }
        let fresh = (0..i).all(|j| records[i].sigma_minus != records[j].sigma_minus);
        if fresh {
            critical_at[i] = Some(d);
        }
    }

    let mut rows = Vec::with_capacity(len);
    rows.push(DescentRow {
        index: 0,
        element: elems[0],
        gamma: Ordinal::power(n),
        critical_degree: critical_at[0],
        degrees: Vec::new(),
        step_ok: true,
        mc_ok: true,
    });
    for i in 1..len {
        let mut degrees = Vec::with_capacity(n as usize);
        let mut terms = Vec::new();
        for d in 1..=n {
            let critical_index = (0..=i).rev().find(|&j| critical_at[j] == Some(d));
            let entry = match critical_index {
                None => DegreeEntry {
                    degree: d,
                    gamma_d: Ordinal::zero(),
                    m1: 0,
                    m2: 0,
                    critical_index: None,
                },
                Some(j0) => {
                    let m1 = (0..=i).filter(|&k| col_size[k] == d).count() as u64;
                    let m2 = if d == n {
                        0
                    } else {
                        (0..=i).filter(|&k| critical_at[k] == Some(d + 1)).count() as u64
                    };
                    let coeff = i128::from(elems[j0]) - i128::from(m1) - i128::from(m2);
                    if coeff < 0 {
                        return Err(ExtractError::TraceUndefined { index: i, degree: d });
                    }
                    let gamma_d = Ordinal::power_times(n - d, coeff as u64);
                    if let Some(t) = gamma_d.terms().first() {
                        terms.push(*t);
                    }
                    DegreeEntry { degree: d, gamma_d, m1, m2, critical_index: Some(j0) }
                }
            };
            degrees.push(entry);
        }
        let gamma = Ordinal::from_terms(terms.iter().copied())
            .map_err(|e| ExtractError::Internal(format!("gamma assembly overflow: {e}")))?;
        let prev: &DescentRow = rows.last().unwrap();
        let step_ok = gamma <= prev.gamma.step(elems[i]);
        let mc_ok = prev.gamma.max_coeff() < elems[i];
        rows.push(DescentRow {
            index: i,
            element: elems[i],
            gamma,
            critical_degree: critical_at[i],
            degrees,
            step_ok,
            mc_ok,
        });
    }
    Ok(DescentTrace { exponent: n, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> FiniteSet {
        FiniteSet::parse(s).unwrap()
    }

    #[test]
    fn index_one_is_one_critical_and_gamma_starts_at_the_power() {
        let p = PairColouring::random(set("50..69"), 2, 3).unwrap();
        let trace = ks_descent_trace(p.base(), &p, 2).unwrap();
        assert_eq!(trace.rows[0].gamma, Ordinal::power(2));
        assert_eq!(trace.rows[1].critical_degree, Some(1));
        assert!(trace.all_checks_hold());
    }

    #[test]
    fn random_colourings_descend() {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let pool: Vec<u64> = (50..80).collect();
        for seed in 0..50 {
            let mut picks = pool.clone();
            picks.shuffle(&mut rng);
            let mut picks: Vec<u64> = picks.into_iter().take(20).collect();
            picks.sort_unstable();
            let base = FiniteSet::new(picks).unwrap();
            let p = PairColouring::random(base.clone(), 2, seed).unwrap();
            let trace = ks_descent_trace(&base, &p, 2).unwrap();
            assert_eq!(trace.rows.len(), 20);
            assert!(trace.all_checks_hold(), "descent failed for seed {seed}");
            // Gamma stays positive while the set lasts.
            for row in &trace.rows {
                assert!(!row.gamma.is_zero(), "gamma hit zero at {}", row.index);
            }
        }
    }

    #[test]
    fn rejects_inputs_with_large_candidates() {
        let p = PairColouring::constant(set("3..38"), 2, 0).unwrap();
        assert!(matches!(
            ks_descent_trace(p.base(), &p, 2),
            Err(ExtractError::Precondition(_))
        ));
    }

    #[test]
    fn rejects_too_few_degrees() {
        let p = PairColouring::random(set("50..69"), 3, 3).unwrap();
        assert!(matches!(
            ks_descent_trace(p.base(), &p, 2),
            Err(ExtractError::Input(_))
        ));
    }
}
