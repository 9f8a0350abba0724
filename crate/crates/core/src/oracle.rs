//! Independent numerical ground truth for the single-qubit measure.
//!
//! * [`eigen_oracle`]: smaller eigenvalue of the qubit's reduced density matrix.
//! * [`grid_oracle`]: direct maximization of the squared overlap with product
//!   states over the qubit direction `(θ, α)`. The optimum over the remaining
//!   qubits for a fixed direction is the norm of the projection
//!   `(⟨χ(θ,α)|⊗1)|ψ⟩`, so only the two angles are searched.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::statevector::{bit_position, check_qubit_index, compose_index, Amplitude, StateVector};

/// 2×2 density matrix of one qubit; `r10 = conj(r01)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedDensity {
    pub r00: f64,
    pub r11: f64,
    pub r01: Amplitude,
}

impl ReducedDensity {
    pub fn trace(&self) -> f64 {
        self.r00 + self.r11
    }

    pub fn determinant(&self) -> f64 {
        self.r00 * self.r11 - self.r01.norm_sqr()
    }

    /// Eigenvalues `(λ₋, λ₊)`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let d = self.r00 - self.r11;
        let half_gap = 0.5 * (d * d + 4.0 * self.r01.norm_sqr()).sqrt();
        let mid = 0.5 * self.trace();
        (mid - half_gap, mid + half_gap)
    }
}

fn check_cut(psi: &StateVector, qubit_index: usize) -> Result<()> {
    if psi.n() < 2 {
        return Err(Error::SingleQubitState);
    }
    check_qubit_index(psi.n(), qubit_index)
}

/// Partial trace over every qubit except `qubit_index`.
pub fn reduced_density(psi: &StateVector, qubit_index: usize) -> Result<ReducedDensity> {
    check_cut(psi, qubit_index)?;
    let n = psi.n();
    let pos = bit_position(n, qubit_index);
    let amps = psi.amps();
    let mut rho = ReducedDensity { r00: 0.0, r11: 0.0, r01: Amplitude::new(0.0, 0.0) };
    for r in 0..1usize << (n - 1) {
        let x0 = amps[compose_index(0, r, pos)];
        let x1 = amps[compose_index(1, r, pos)];
        rho.r00 += x0.norm_sqr();
        rho.r11 += x1.norm_sqr();
        rho.r01 += x0 * x1.conj();
    }
    Ok(rho)
}

/// `λ₋ = ½ − ½√((r00 − r11)² + 4|r01|²)`, clamped into `[0, ½]`.
pub fn eigen_oracle(psi: &StateVector, qubit_index: usize) -> Result<f64> {
    let rho = reduced_density(psi, qubit_index)?;
    let d = rho.r00 - rho.r11;
    let gap = (d * d + 4.0 * rho.r01.norm_sqr()).sqrt();
    Ok((0.5 - 0.5 * gap).clamp(0.0, 0.5))
}

/// `‖(⟨χ(θ,α)|⊗1)|ψ⟩‖²` evaluated amplitude by amplitude.
pub fn projection_norm_sq(psi: &StateVector, qubit_index: usize, theta: f64, alpha: f64) -> Result<f64> {
    check_cut(psi, qubit_index)?;
    let n = psi.n();
    let pos = bit_position(n, qubit_index);
    let (s, c) = (theta / 2.0).sin_cos();
    let w1 = Amplitude::from_polar(s, -alpha);
    let amps = psi.amps();
    Ok((0..1usize << (n - 1))
        .map(|r| (amps[compose_index(0, r, pos)] * c + amps[compose_index(1, r, pos)] * w1).norm_sqr())
        .sum())
}

/// Outcome of [`grid_oracle`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSearchReport {
    pub e_est: f64,
    pub theta_best: f64,
    pub alpha_best: f64,
    pub grid_points: usize,
    pub refinement_rounds: usize,
}

/// The projection norm as a quadratic form in the direction.
///
/// With `ψ0, ψ1` the slices of `ψ` where the qubit reads 0 and 1,
/// `‖cos(θ/2)ψ0 + sin(θ/2)e^{−iα}ψ1‖²` expands into the Gram entries below;
/// this is exact, and makes each grid evaluation independent of `n`.
struct ProjectionForm {
    g00: f64,
    g11: f64,
    g01: Amplitude,
}

impl ProjectionForm {
    fn new(psi: &StateVector, qubit_index: usize) -> Self {
        let n = psi.n();
        let pos = bit_position(n, qubit_index);
        let amps = psi.amps();
        let (mut g00, mut g11, mut g01) = (0.0, 0.0, Amplitude::new(0.0, 0.0));
        for r in 0..1usize << (n - 1) {
            let x0 = amps[compose_index(0, r, pos)];
            let x1 = amps[compose_index(1, r, pos)];
            g00 += x0.norm_sqr();
            g11 += x1.norm_sqr();
            g01 += x0.conj() * x1;
        }
        Self { g00, g11, g01 }
    }

    #[inline]
    fn eval(&self, half_theta: (f64, f64), alpha: (f64, f64)) -> f64 {
        let (s, c) = half_theta;
        let (sa, ca) = alpha;
        c * c * self.g00 + s * s * self.g11 + 2.0 * c * s * (ca * self.g01.re + sa * self.g01.im)
    }
}

/// Coarse-to-fine search of the best product-state overlap.
///
/// A `coarse_points × coarse_points` grid covers `θ ∈ [0, π]` (poles included)
/// and `α ∈ [0, 2π)`. Each refinement round re-grids a box around the current
/// best point whose sides are a quarter of the previous box; `θ` is clamped to
/// `[0, π]` and `α` wraps. The incumbent is replaced only by a strictly larger
/// value, so within a grid the lexicographically smallest `(θ, α)` wins ties
/// and more rounds never increase `e_est`.
pub fn grid_oracle(
    psi: &StateVector,
    qubit_index: usize,
    coarse_points: usize,
    refinement_rounds: usize,
) -> Result<GridSearchReport> {
    if coarse_points < 16 {
        return Err(Error::BadResolution(coarse_points));
    }
    check_cut(psi, qubit_index)?;
    let form = ProjectionForm::new(psi, qubit_index);
    let m = coarse_points;

    let mut thetas: Vec<f64> = (0..m).map(|i| PI * i as f64 / (m - 1) as f64).collect();
    let mut alphas: Vec<f64> = (0..m).map(|j| TAU * j as f64 / m as f64).collect();
    let mut best = (f64::NEG_INFINITY, 0.0, 0.0);
    let mut span = (PI, TAU);

    for round in 0..=refinement_rounds {
        if round > 0 {
            let (_, tc, ac) = best;
            // At a pole every α gives the same point, so α stays unresolved.
            let at_pole = tc <= 0.0 || tc >= PI;
            span = (span.0 / 4.0, if at_pole { span.1 } else { span.1 / 4.0 });
            for (i, t) in thetas.iter_mut().enumerate() {
                let x = tc - 0.5 * span.0 + span.0 * i as f64 / (m - 1) as f64;
                *t = x.clamp(0.0, PI);
            }
            for (j, a) in alphas.iter_mut().enumerate() {
                let x = ac - 0.5 * span.1 + span.1 * j as f64 / (m - 1) as f64;
                *a = x.rem_euclid(TAU);
            }
        }
        let alpha_trig: Vec<(f64, f64)> = alphas.iter().map(|a| a.sin_cos()).collect();
        for &theta in &thetas {
            let ht = (theta / 2.0).sin_cos();
            for (&alpha, &at) in alphas.iter().zip(&alpha_trig) {
                let f = form.eval(ht, at);
                if f > best.0 {
                    best = (f, theta, alpha);
                }
            }
        }
    }

    Ok(GridSearchReport {
        e_est: 1.0 - best.0,
        theta_best: best.1,
        alpha_best: best.2,
        grid_points: m,
        refinement_rounds,
    })
}
