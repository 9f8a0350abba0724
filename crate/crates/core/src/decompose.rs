//! Splitting a pure state as `a|χ1⟩|φ1⟩ + b|χ2⟩|φ2⟩` around one qubit.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};
use crate::statevector::{
    bit_position, check_qubit_index, compose_index, norm_sqr_of, Amplitude, StateVector,
    NORM_TOL,
};

/// Weight below which a companion state is treated as absent.
pub const DEGENERATE_WEIGHT: f64 = 1e-12;

/// Orthonormal basis `(χ1, χ2)` of a single qubit, as components on `|0⟩, |1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitBasis {
    chi1: [Amplitude; 2],
    chi2: [Amplitude; 2],
}

impl QubitBasis {
    pub fn new(chi1: [Amplitude; 2], chi2: [Amplitude; 2]) -> Result<Self> {
        let n1 = chi1[0].norm_sqr() + chi1[1].norm_sqr();
        let n2 = chi2[0].norm_sqr() + chi2[1].norm_sqr();
        let cross = chi1[0].conj() * chi2[0] + chi1[1].conj() * chi2[1];
        if (n1 - 1.0).abs() > NORM_TOL || (n2 - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidBasis(format!("norms {n1}, {n2}")));
        }
        if cross.norm() > NORM_TOL {
            return Err(Error::InvalidBasis(format!("overlap {}", cross.norm())));
        }
        Ok(Self { chi1, chi2 })
    }

    /// `χ1 = |0⟩, χ2 = |1⟩`.
    pub fn computational() -> Self {
        let (o, z) = (Amplitude::new(1.0, 0.0), Amplitude::new(0.0, 0.0));
        Self { chi1: [o, z], chi2: [z, o] }
    }

    /// `χ1 = |1⟩, χ2 = |0⟩`, the labelling used for Werner-like states.
    pub fn flipped() -> Self {
        let c = Self::computational();
        Self { chi1: c.chi2, chi2: c.chi1 }
    }

    /// `χ1 = |+⟩, χ2 = |−⟩`.
    pub fn hadamard() -> Self {
        let h = Amplitude::new(FRAC_1_SQRT_2, 0.0);
        Self { chi1: [h, h], chi2: [h, -h] }
    }

    pub fn chi1(&self) -> [Amplitude; 2] {
        self.chi1
    }

    pub fn chi2(&self) -> [Amplitude; 2] {
        self.chi2
    }

    /// Same basis with the two vectors exchanged.
    pub fn swapped(&self) -> Self {
        Self { chi1: self.chi2, chi2: self.chi1 }
    }
}

/// Computational, flipped and X bases.
pub fn standard_bases() -> Vec<QubitBasis> {
    vec![QubitBasis::computational(), QubitBasis::flipped(), QubitBasis::hadamard()]
}

/// Weights and normalized companion states of a state around one qubit.
///
/// `a` and `b` are norms, so they are real and nonnegative; every phase is
/// carried by `phi1`/`phi2`. A companion is `None` when its weight is below
/// [`DEGENERATE_WEIGHT`], and the overlap is then zero.
#[derive(Debug, Clone, PartialEq)]
pub struct QubitSplit {
    pub qubit_index: usize,
    pub basis: QubitBasis,
    pub a: f64,
    pub b: f64,
    pub phi1: Option<StateVector>,
    pub phi2: Option<StateVector>,
    pub overlap: Amplitude,
}

impl QubitSplit {
    pub fn overlap_abs(&self) -> f64 {
        self.overlap.norm()
    }

    /// Phase `β` of `⟨φ1|φ2⟩`; zero when the overlap vanishes.
    pub fn overlap_phase(&self) -> f64 {
        if self.overlap == Amplitude::new(0.0, 0.0) {
            0.0
        } else {
            self.overlap.arg()
        }
    }
}

/// `(⟨χ|⊗1)|ψ⟩` on the remaining qubits, unnormalized.
pub(crate) fn project_qubit(psi: &StateVector, qubit_index: usize, chi: [Amplitude; 2]) -> Vec<Amplitude> {
    let n = psi.n();
    let pos = bit_position(n, qubit_index);
    let (c0, c1) = (chi[0].conj(), chi[1].conj());
    let amps = psi.amps();
    (0..1usize << (n - 1))
        .map(|r| c0 * amps[compose_index(0, r, pos)] + c1 * amps[compose_index(1, r, pos)])
        .collect()
}

fn companion(n: usize, v: Vec<Amplitude>) -> Result<(f64, Option<StateVector>)> {
    let weight = norm_sqr_of(&v).sqrt();
    if weight < DEGENERATE_WEIGHT {
        Ok((weight, None))
    } else {
        Ok((weight, Some(StateVector::new(n, v, true)?)))
    }
}

/// Decomposes `psi` around `qubit_index` (1-based) in the given basis.
pub fn split_qubit(psi: &StateVector, qubit_index: usize, basis: &QubitBasis) -> Result<QubitSplit> {
    let n = psi.n();
    if n < 2 {
        return Err(Error::SingleQubitState);
    }
    check_qubit_index(n, qubit_index)?;
    let basis = *basis;
    let (a, phi1) = companion(n - 1, project_qubit(psi, qubit_index, basis.chi1))?;
    let (b, phi2) = companion(n - 1, project_qubit(psi, qubit_index, basis.chi2))?;
    let overlap = match (&phi1, &phi2) {
        (Some(p1), Some(p2)) => p1.inner(p2)?,
        _ => Amplitude::new(0.0, 0.0),
    };
    Ok(QubitSplit { qubit_index, basis, a, b, phi1, phi2, overlap })
}

/// Rebuilds `a|χ1⟩|φ1⟩ + b|χ2⟩|φ2⟩` with the qubit re-inserted at its index.
pub fn reassemble(split: &QubitSplit, n: usize) -> Result<StateVector> {
    let rest_n = split
        .phi1
        .as_ref()
        .or(split.phi2.as_ref())
        .map(StateVector::n)
        .ok_or_else(|| Error::InconsistentSplit("both companion states absent".into()))?;
    if rest_n + 1 != n {
        return Err(Error::InconsistentSplit(format!(
            "companions have {rest_n} qubits, expected {}",
            n.saturating_sub(1)
        )));
    }
    if let (Some(p1), Some(p2)) = (&split.phi1, &split.phi2) {
        if p1.n() != p2.n() {
            return Err(Error::InconsistentSplit("companion sizes differ".into()));
        }
    }
    check_qubit_index(n, split.qubit_index)?;
    let pos = bit_position(n, split.qubit_index);
    let mut amps = vec![Amplitude::new(0.0, 0.0); 1 << n];
    let terms = [(split.a, &split.phi1, split.basis.chi1), (split.b, &split.phi2, split.basis.chi2)];
    for (w, phi, chi) in terms {
        let Some(phi) = phi else { continue };
        for (r, &amp) in phi.amps().iter().enumerate() {
            let x = amp * w;
            amps[compose_index(0, r, pos)] += chi[0] * x;
            amps[compose_index(1, r, pos)] += chi[1] * x;
        }
    }
    StateVector::new(n, amps, true)
}
