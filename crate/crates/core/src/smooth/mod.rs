//! The smooth model: maps `ℝⁿ → ℝᵐ` with exact forward-mode derivatives.
//!
//! Maps are built from a small algebra of nodes (projections, pairing,
//! composition, sums, scalar primitives, the differential `D` and the tangent
//! functor `T`) and evaluated on [`Jet`]s, so iterated differentials are exact
//! up to floating-point rounding.

pub mod axioms;
mod jet;
mod map;
mod oracle;

pub use jet::Jet;
pub use map::{Primitive, SmoothMap};
pub use oracle::{finite_difference_oracle, is_linear};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SmoothError {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch { context: String, expected: usize, found: usize },
    #[error("non-finite value produced by {node}")]
    NumericOverflow { node: String },
    #[error("invalid point: {0}")]
    InvalidPoint(String),
}

impl SmoothError {
    pub(crate) fn dims(context: impl Into<String>, expected: usize, found: usize) -> SmoothError {
        SmoothError::DimensionMismatch { context: context.into(), expected, found }
    }
}

/// A finite point of `ℝⁿ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Point, SmoothError> {
        if let Some(bad) = coords.iter().find(|c| !c.is_finite()) {
            return Err(SmoothError::InvalidPoint(format!("coordinate {bad} is not finite")));
        }
        Ok(Point(coords))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    /// Concatenate, i.e. the pairing `(a, b)` in `A × B`.
    pub fn concat(&self, other: &Point) -> Point {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Point(v)
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c:.6}")?;
        }
        write!(f, ")")
    }
}

/// Evaluate `f` at a point.
pub fn eval(f: &SmoothMap, x: &Point) -> Result<Point, SmoothError> {
    f.eval(x)
}

/// `D[f] : A × A → B`, linear in its second argument.
pub fn differential(f: &SmoothMap) -> SmoothMap {
    f.differential()
}

/// `T(f) = ⟨π₀ f, D[f]⟩ : A × A → B × B`.
pub fn tangent(f: &SmoothMap) -> SmoothMap {
    f.tangent()
}
