//! Closed-form geometric entanglement of one qubit with the rest of a state.
//!
//! For `|ψ⟩ = a|χ1⟩|φ1⟩ + b|χ2⟩|φ2⟩` with `s = |⟨φ1|φ2⟩|` the measure is
//!
//! ```text
//! E = ½ (1 − √((a² − b²)² + 4 a² b² s²))
//! ```
//!
//! and the closest product state is `χ(θ', β) ⊗ φ̃`, where
//! `χ(θ, α) = cos(θ/2)|χ1⟩ + sin(θ/2) e^{iα}|χ2⟩`, `β = arg⟨φ1|φ2⟩`,
//! `θ' = atan2(2ab·s, a² − b²)` and
//! `φ̃ ∝ a cos(θ'/2)|φ1⟩ + b sin(θ'/2) e^{−iβ}|φ2⟩`.

use std::f64::consts::FRAC_PI_2;

use rayon::prelude::*;

use crate::decompose::{split_qubit, QubitBasis, QubitSplit};
use crate::error::{Error, Result};
use crate::oracle::reduced_density;
use crate::statevector::{embed_qubit, Amplitude, StateVector};

/// Upper bound of the measure for a qubit cut.
pub const E_MAX: f64 = 0.5;

const WEIGHT_TOL: f64 = 1e-9;
const OVERLAP_TOL: f64 = 1e-12;
const DEGENERACY_TOL: f64 = 1e-15;

/// `½(1 − √((a²−b²)² + 4a²b²s²))`, clamped into `[0, ½]`.
pub fn entanglement_closed_form(a: f64, b: f64, overlap_abs: f64) -> Result<f64> {
    if !(a >= 0.0 && b >= 0.0) || (a * a + b * b - 1.0).abs() > WEIGHT_TOL {
        return Err(Error::NotNormalizedWeights { a, b });
    }
    if !(0.0..=1.0 + OVERLAP_TOL).contains(&overlap_abs) {
        return Err(Error::OverlapOutOfRange(overlap_abs));
    }
    let s = overlap_abs.min(1.0);
    let (a2, b2) = (a * a, b * b);
    let d = a2 - b2;
    let radicand = (d * d + 4.0 * a2 * b2 * s * s).clamp(0.0, 1.0);
    Ok((0.5 * (1.0 - radicand.sqrt())).clamp(0.0, E_MAX))
}

/// Measure of an existing split; independent of the basis it was taken in.
pub fn entanglement_of_split(split: &QubitSplit) -> Result<f64> {
    entanglement_closed_form(split.a, split.b, split.overlap_abs())
}

/// The measure together with the product state that attains it.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementResult {
    pub qubit_index: usize,
    pub entanglement: f64,
    /// Polar angle of the optimal qubit direction, in `[0, π]`.
    pub theta_opt: f64,
    /// Azimuth of the optimal qubit direction, in `[0, 2π)`.
    pub alpha_opt: f64,
    /// Optimal state of the remaining qubits.
    pub phi_tilde: Option<StateVector>,
    pub max_overlap_sq: f64,
}

impl EntanglementResult {
    /// `cos(θ/2)|0⟩ + sin(θ/2) e^{iα}|1⟩`.
    pub fn chi(&self) -> StateVector {
        qubit_direction(self.theta_opt, self.alpha_opt)
    }

    /// `χ ⊗ φ̃` with `χ` at the distinguished qubit.
    pub fn separable_state(&self) -> Option<StateVector> {
        let phi = self.phi_tilde.as_ref()?;
        embed_qubit(&self.chi(), phi, self.qubit_index).ok()
    }
}

/// Qubit ket `cos(θ/2)|0⟩ + sin(θ/2) e^{iα}|1⟩`.
pub fn qubit_direction(theta: f64, alpha: f64) -> StateVector {
    let (s, c) = (theta / 2.0).sin_cos();
    StateVector::qubit(Amplitude::new(c, 0.0), Amplitude::from_polar(s, alpha))
        .expect("unit qubit direction")
}

fn wrap_angle(x: f64) -> f64 {
    let t = x.rem_euclid(std::f64::consts::TAU);
    if t >= std::f64::consts::TAU {
        0.0
    } else {
        t
    }
}

/// Geometric entanglement of `qubit_index` (1-based) with all other qubits,
/// split in the computational basis, plus the maximizing product state.
pub fn geometric_entanglement(psi: &StateVector, qubit_index: usize) -> Result<EntanglementResult> {
    let split = split_qubit(psi, qubit_index, &QubitBasis::computational())?;
    optimum_of_split(&split)
}

fn optimum_of_split(split: &QubitSplit) -> Result<EntanglementResult> {
    let qubit_index = split.qubit_index;
    match (&split.phi1, &split.phi2) {
        (Some(phi), None) | (None, Some(phi)) => {
            let theta_opt = if split.phi1.is_some() { 0.0 } else { std::f64::consts::PI };
            return Ok(EntanglementResult {
                qubit_index,
                entanglement: 0.0,
                theta_opt,
                alpha_opt: 0.0,
                phi_tilde: Some(phi.clone()),
                max_overlap_sq: 1.0,
            });
        }
        (None, None) => {
            return Err(Error::InconsistentSplit("both companion states absent".into()));
        }
        (Some(_), Some(_)) => {}
    }
    let (a, b) = (split.a, split.b);
    let s = split.overlap_abs().min(1.0);
    let entanglement = entanglement_closed_form(a, b, s)?;

    let alpha_opt = wrap_angle(split.overlap_phase());
    let y = 2.0 * a * b * s;
    let x = a * a - b * b;
    let theta_opt = if y.abs() <= DEGENERACY_TOL && x.abs() <= DEGENERACY_TOL {
        FRAC_PI_2
    } else {
        y.atan2(x)
    };

    let (sin_h, cos_h) = (theta_opt / 2.0).sin_cos();
    let phi1 = split.phi1.as_ref().unwrap().amps();
    let phi2 = split.phi2.as_ref().unwrap().amps();
    let w1 = Amplitude::new(a * cos_h, 0.0);
    let w2 = Amplitude::from_polar(b * sin_h, -alpha_opt);
    let combined = phi1.iter().zip(phi2).map(|(p, q)| w1 * p + w2 * q).collect();
    let rest_n = split.phi1.as_ref().unwrap().n();
    let phi_tilde = StateVector::new(rest_n, combined, true)?;

    Ok(EntanglementResult {
        qubit_index,
        entanglement,
        theta_opt,
        alpha_opt,
        phi_tilde: Some(phi_tilde),
        max_overlap_sq: 1.0 - entanglement,
    })
}

/// Per-qubit measures `E_1 … E_n` of one state.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementProfile {
    pub per_qubit: Vec<f64>,
    pub total: f64,
}

pub fn entanglement_profile(psi: &StateVector) -> Result<EntanglementProfile> {
    if psi.n() < 2 {
        return Err(Error::SingleQubitState);
    }
    let per_qubit = (1..=psi.n())
        .into_par_iter()
        .map(|q| geometric_entanglement(psi, q).map(|r| r.entanglement))
        .collect::<Result<Vec<_>>>()?;
    let total = per_qubit.iter().sum();
    Ok(EntanglementProfile { per_qubit, total })
}

/// Pure-state concurrence `2√(λ₊λ₋)` from the reduced density matrix of qubit 1.
pub fn concurrence_two_qubit(psi: &StateVector) -> Result<f64> {
    if psi.n() != 2 {
        return Err(Error::NotTwoQubits(psi.n()));
    }
    let rho = reduced_density(psi, 1)?;
    Ok((2.0 * rho.determinant().max(0.0).sqrt()).min(1.0))
}

/// `½(1 − √(1 − C²))`.
pub fn entanglement_from_concurrence(concurrence: f64) -> Result<f64> {
    if !(0.0..=1.0 + OVERLAP_TOL).contains(&concurrence) {
        return Err(Error::OutOfRange(concurrence));
    }
    let c = concurrence.min(1.0);
    Ok(0.5 * (1.0 - (1.0 - c * c).max(0.0).sqrt()))
}
