//! Interchangeable ways of computing the same single-qubit measure, selected
//! by name.

use crate::error::{Error, Result};
use crate::measure::geometric_entanglement;
use crate::oracle::{eigen_oracle, grid_oracle};
use crate::statevector::StateVector;

pub const DEFAULT_GRID_POINTS: usize = 64;
pub const DEFAULT_GRID_ROUNDS: usize = 8;

pub trait EntanglementEstimator: Send + Sync {
    fn name(&self) -> &'static str;
    fn estimate(&self, psi: &StateVector, qubit_index: usize) -> Result<f64>;
}

/// Closed form from the computational-basis split.
pub struct ClosedForm;

impl EntanglementEstimator for ClosedForm {
    fn name(&self) -> &'static str {
        "closed-form"
    }

    fn estimate(&self, psi: &StateVector, qubit_index: usize) -> Result<f64> {
        Ok(geometric_entanglement(psi, qubit_index)?.entanglement)
    }
}

/// Smaller eigenvalue of the reduced density matrix.
pub struct Eigen;

impl EntanglementEstimator for Eigen {
    fn name(&self) -> &'static str {
        "eigen"
    }

    fn estimate(&self, psi: &StateVector, qubit_index: usize) -> Result<f64> {
        eigen_oracle(psi, qubit_index)
    }
}

/// Refined grid search over product-state directions.
pub struct Grid {
    pub coarse_points: usize,
    pub refinement_rounds: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Self { coarse_points: DEFAULT_GRID_POINTS, refinement_rounds: DEFAULT_GRID_ROUNDS }
    }
}

impl EntanglementEstimator for Grid {
    fn name(&self) -> &'static str {
        "grid"
    }

    fn estimate(&self, psi: &StateVector, qubit_index: usize) -> Result<f64> {
        Ok(grid_oracle(psi, qubit_index, self.coarse_points, self.refinement_rounds)?.e_est)
    }
}

/// Estimators keyed by name; iteration follows registration order.
pub struct EstimatorRegistry {
    entries: Vec<Box<dyn EntanglementEstimator>>,
}

impl EstimatorRegistry {
    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    /// `closed-form`, `eigen` and `grid` (64 points, 8 rounds).
    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(ClosedForm));
        r.register(Box::new(Eigen));
        r.register(Box::new(Grid::default()));
        r
    }

    pub fn register(&mut self, estimator: Box<dyn EntanglementEstimator>) {
        match self.entries.iter().position(|e| e.name() == estimator.name()) {
            Some(i) => self.entries[i] = estimator,
            None => self.entries.push(estimator),
        }
    }

    pub fn get(&self, name: &str) -> Result<&dyn EntanglementEstimator> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
            .ok_or_else(|| Error::UnknownEstimator(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn EntanglementEstimator> {
        self.entries.iter().map(|e| e.as_ref())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Default for EstimatorRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}
