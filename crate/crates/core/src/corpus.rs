//! Seeded random states for verification runs.
//!
//! Amplitudes have independent standard-normal real and imaginary parts and
//! are then normalized, which samples uniformly from the unit sphere.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::families::WernerSpec;
use crate::statevector::{tensor, Amplitude, StateVector};

/// A generator fixed by `(seed, stream)`; distinct streams are independent.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn gaussian_amplitudes<R: Rng>(rng: &mut R, len: usize) -> Vec<Amplitude> {
    (0..len)
        .map(|_| Amplitude::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect()
}

pub fn random_state<R: Rng>(rng: &mut R, n: usize) -> StateVector {
    loop {
        if let Ok(s) = StateVector::new(n, gaussian_amplitudes(rng, 1 << n), true) {
            return s;
        }
    }
}

/// `|χ⟩ ⊗ |φ⟩` with random `χ` on qubit 1 and random `φ` on the rest.
pub fn random_product_state<R: Rng>(rng: &mut R, n: usize) -> StateVector {
    let chi = random_state(rng, 1);
    let phi = random_state(rng, n - 1);
    tensor(&chi, &phi).expect("n within range")
}

fn normalized(c: Vec<Amplitude>) -> Vec<Amplitude> {
    let norm = c.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    c.into_iter().map(|x| x / norm).collect()
}

/// Werner-like coefficients with no constraint beyond normalization.
pub fn random_werner<R: Rng>(rng: &mut R, n: usize) -> WernerSpec {
    loop {
        if let Ok(w) = WernerSpec::new(normalized(gaussian_amplitudes(rng, n))) {
            return w;
        }
    }
}

/// Werner-like coefficients with every `|c_i|² ≤ ½` (needs `n ≥ 3`).
pub fn balanced_werner<R: Rng>(rng: &mut R, n: usize) -> WernerSpec {
    assert!(n >= 3, "balanced Werner coefficients need n >= 3");
    loop {
        let w = random_werner(rng, n);
        if w.coefficients().iter().all(|c| c.norm_sqr() <= 0.5) {
            return w;
        }
    }
}

/// Werner-like coefficients with one dominant weight `|c_m|² ∈ (½, 1)`.
/// Returns the spec, the 1-based index `m` and `|c_m|²`.
pub fn dominant_werner<R: Rng>(rng: &mut R, n: usize) -> (WernerSpec, usize, f64) {
    loop {
        let p: f64 = rng.gen_range(0.5..1.0);
        if p <= 0.5 {
            continue;
        }
        let m = rng.gen_range(0..n);
        let mut weights: Vec<f64> = (0..n).map(|_| -rng.gen::<f64>().max(1e-300).ln()).collect();
        weights[m] = 0.0;
        let rest: f64 = weights.iter().sum();
        let c = (0..n)
            .map(|i| {
                let w = if i == m { p } else { (1.0 - p) * weights[i] / rest };
                Amplitude::from_polar(w.sqrt(), rng.gen_range(0.0..std::f64::consts::TAU))
            })
            .collect();
        if let Ok(spec) = WernerSpec::new(c) {
            let p = spec.coefficients()[m].norm_sqr();
            if p > 0.5 && p < 1.0 {
                return (spec, m + 1, p);
            }
        }
    }
}
