//! Uniform time grids shared by the boundary solver and the pricer.

use crate::error::EngineError;
use crate::Result;

/// Uniform grid of `nodes` points spanning [start, end].
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    pub start: f64,
    pub end: f64,
    pub nodes: Vec<f64>,
}

impl TimeGrid {
    /// Builds a grid with `intervals` evenly spaced intervals, so
    /// `intervals + 1` nodes.
    pub fn uniform(start: f64, end: f64, intervals: usize) -> Result<Self> {
        if !(end > start) {
            return Err(EngineError::domain(format!(
                "time grid needs end > start, got [{start}, {end}]"
            )));
        }
        if intervals < 2 {
            return Err(EngineError::validation(
                "time grid needs at least 2 intervals",
            ));
        }
        let h = (end - start) / intervals as f64;
        let mut nodes: Vec<f64> = (0..=intervals).map(|i| start + i as f64 * h).collect();
        // Pin the endpoint exactly.
        *nodes.last_mut().unwrap() = end;
        Ok(TimeGrid { start, end, nodes })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn spacing(&self) -> f64 {
        (self.end - self.start) / (self.nodes.len() - 1) as f64
    }
}
