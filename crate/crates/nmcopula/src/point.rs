//! Points on the open unit hypercube and axis-aligned rectangles.

use crate::error::{CopulaError, Result};

/// A D-vector of probabilities, each strictly inside (0, 1).
///
/// Boundary arguments (coordinates exactly 0 or 1) are handled by the
/// dedicated boundary-aware CDF path, not by this type.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitPoint {
    coords: Vec<f64>,
}

impl UnitPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(CopulaError::InvalidParameter(format!(
                "a unit point needs at least two coordinates, got {}",
                coords.len()
            )));
        }
        for (i, &u) in coords.iter().enumerate() {
            if !(u > 0.0 && u < 1.0) {
                return Err(CopulaError::InvalidParameter(format!(
                    "coordinate {i} = {u} is not strictly inside (0, 1)"
                )));
            }
        }
        Ok(Self { coords })
    }

    pub fn bivariate(u1: f64, u2: f64) -> Result<Self> {
        Self::new(vec![u1, u2])
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Axis-aligned rectangle with interior corners, `lower <= upper` componentwise.
#[derive(Debug, Clone)]
pub struct Rectangle {
    lower: UnitPoint,
    upper: UnitPoint,
}

impl Rectangle {
    pub fn new(lower: UnitPoint, upper: UnitPoint) -> Result<Self> {
        if lower.dim() != upper.dim() {
            return Err(CopulaError::DimensionMismatch {
                expected: lower.dim(),
                got: upper.dim(),
            });
        }
        for (lo, hi) in lower.coords().iter().zip(upper.coords()) {
            if lo > hi {
                return Err(CopulaError::InvalidParameter(format!(
                    "rectangle lower corner {lo} exceeds upper corner {hi}"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    pub fn lower(&self) -> &UnitPoint {
        &self.lower
    }

    pub fn upper(&self) -> &UnitPoint {
        &self.upper
    }

    pub fn dim(&self) -> usize {
        self.lower.dim()
    }
}
