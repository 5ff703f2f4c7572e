use crate::error::{Error, Result};

use super::{drift_into, Scheduler, ScoreField, TimeGrid};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// T down to epsilon.
    NoiseToSample,
    /// epsilon up to T.
    SampleToNoise,
}

/// Heun (explicit trapezoidal) integration; returns the state at every grid
/// point visited, starting with `x0`.
pub fn heun_trajectory(
    x0: &[f64],
    grid: &TimeGrid,
    direction: Direction,
    scheduler: &dyn Scheduler,
    score: &dyn ScoreField,
) -> Result<Vec<Vec<f64>>> {
    let mut states = Vec::with_capacity(grid.steps() + 1);
    states.push(x0.to_vec());
    integrate(x0, grid, direction, scheduler, score, |x| states.push(x.to_vec()))?;
    Ok(states)
}

/// Heun integration returning only the final state.
pub fn heun_integrate(
    x0: &[f64],
    grid: &TimeGrid,
    direction: Direction,
    scheduler: &dyn Scheduler,
    score: &dyn ScoreField,
) -> Result<Vec<f64>> {
    integrate(x0, grid, direction, scheduler, score, |_| {})
}

fn integrate(
    x0: &[f64],
    grid: &TimeGrid,
    direction: Direction,
    scheduler: &dyn Scheduler,
    score: &dyn ScoreField,
    mut visit: impl FnMut(&[f64]),
) -> Result<Vec<f64>> {
    if grid.start() != scheduler.t_max() || grid.end() != scheduler.epsilon() {
        return Err(Error::Argument(format!(
            "grid spans [{}, {}] but the scheduler spans [{}, {}]",
            grid.end(),
            grid.start(),
            scheduler.epsilon(),
            scheduler.t_max()
        )));
    }
    let times: Vec<f64> = match direction {
        Direction::NoiseToSample => grid.times().to_vec(),
        Direction::SampleToNoise => grid.times().iter().rev().copied().collect(),
    };
    let n = x0.len();
    let mut x = x0.to_vec();
    let mut d1 = vec![0.0; n];
    let mut d2 = vec![0.0; n];
    let mut predicted = vec![0.0; n];
    for (step, pair) in times.windows(2).enumerate() {
        let (t, t_next) = (pair[0], pair[1]);
        let h = t_next - t;
        drift_into(&x, t, scheduler, score, &mut d1)?;
        for ((p, xi), di) in predicted.iter_mut().zip(&x).zip(&d1) {
            *p = xi + h * di;
        }
        drift_into(&predicted, t_next, scheduler, score, &mut d2)?;
        for ((xi, a), b) in x.iter_mut().zip(&d1).zip(&d2) {
            *xi += 0.5 * h * (a + b);
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::Divergence { step });
        }
        visit(&x);
    }
    Ok(x)
}
