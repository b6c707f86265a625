//! Evaluate a scenario over its phase grid.

use cheshire_core::interferometer::{propagate, InterferometerConfig};
use cheshire_core::quantum::postselected_probability_axis;

use crate::scenario::Scenario;

/// One phase sample. `quantum_d1` is present exactly when the scenario
/// enables the quantum model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub phi: f64,
    pub d1_postselected: f64,
    pub d1_total: f64,
    pub d2_total: f64,
    pub quantum_d1: Option<f64>,
}

/// Rows in strictly increasing, uniformly spaced `phi` order.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    /// `(phi, d1_postselected)` pairs, the shape the fringe fit consumes.
    pub fn postselected_samples(&self) -> Vec<(f64, f64)> {
        self.rows
            .iter()
            .map(|r| (r.phi, r.d1_postselected))
            .collect()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("sweep needs at least 2 steps, got {0}")]
    TooFewSteps(usize),
    #[error("sweep end {end} must exceed start {start}")]
    EmptySpan { start: f64, end: f64 },
    #[error(transparent)]
    Model(#[from] cheshire_core::Error),
}

/// Run the classical model (and the quantum model when enabled) at each of
/// the `steps` uniform phases in `[start, end)`. Deterministic for a fixed
/// scenario.
pub fn run_sweep(scenario: &Scenario) -> Result<SweepResult, SweepError> {
    let spec = scenario.sweep;
    if spec.steps < 2 {
        return Err(SweepError::TooFewSteps(spec.steps));
    }
    if spec.end <= spec.start {
        return Err(SweepError::EmptySpan {
            start: spec.start,
            end: spec.end,
        });
    }

    let step = (spec.end - spec.start) / spec.steps as f64;
    let quantum = scenario.models.includes_quantum();
    let mut rows = Vec::with_capacity(spec.steps);
    for k in 0..spec.steps {
        let phi = spec.start + k as f64 * step;
        let readout = propagate(&InterferometerConfig {
            left: scenario.left.clone(),
            right: scenario.right.clone(),
            phase: phi,
            imperfections: scenario.imperfections,
            postselect: scenario.postselect,
        })?;
        let quantum_d1 = if quantum {
            Some(postselected_probability_axis(
                &scenario.left,
                &scenario.right,
                phi,
                scenario.postselect,
            )?)
        } else {
            None
        };
        rows.push(SweepRow {
            phi,
            d1_postselected: readout.d1_postselected,
            d1_total: readout.d1_total,
            d2_total: readout.d2_total,
            quantum_d1,
        });
    }
    Ok(SweepResult { rows })
}
