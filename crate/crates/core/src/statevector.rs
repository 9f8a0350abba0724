//! Dense pure states of `n` qubits.
//!
//! Amplitudes are indexed by the computational basis with qubit 1 as the most
//! significant bit, so the ket `|q1 q2 ... qn⟩` lives at index
//! `Σ q_i · 2^(n-i)`. Every constructor, split and family builder in the crate
//! relies on this ordering.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};

/// Complex amplitude of a basis ket.
pub type Amplitude = Complex64;

/// Largest supported qubit count (2^24 amplitudes).
pub const MAX_QUBITS: usize = 24;

/// Allowed deviation of the squared norm from one.
pub const NORM_TOL: f64 = 1e-12;

/// Binary label of a computational basis ket, `bits[0]` being qubit 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    bits: Vec<bool>,
}

impl BasisLabel {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn from_index(index: usize, n: usize) -> Self {
        let bits = (0..n).map(|i| (index >> (n - 1 - i)) & 1 == 1).collect();
        Self { bits }
    }

    pub fn index(&self) -> usize {
        self.bits.iter().fold(0, |acc, &b| (acc << 1) | b as usize)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

impl std::fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_char('|')?;
        for &b in &self.bits {
            f.write_char(if b { '1' } else { '0' })?;
        }
        f.write_char('⟩')
    }
}

/// Bit position (counted from the least significant end) of a 1-based qubit.
#[inline]
pub(crate) fn bit_position(n: usize, qubit_index: usize) -> usize {
    n - qubit_index
}

/// Index of the full register given the distinguished qubit's bit and the
/// index of the remaining `n - 1` qubits in their original order.
#[inline]
pub(crate) fn compose_index(bit: usize, rest: usize, pos: usize) -> usize {
    let low = rest & ((1 << pos) - 1);
    let high = rest >> pos;
    (high << (pos + 1)) | (bit << pos) | low
}

pub(crate) fn check_qubit_index(n: usize, qubit_index: usize) -> Result<()> {
    if qubit_index == 0 || qubit_index > n {
        return Err(Error::IndexOutOfRange { index: qubit_index, n });
    }
    Ok(())
}

/// Neumaier-compensated sum of squared moduli.
pub(crate) fn norm_sqr_of(amps: &[Amplitude]) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for a in amps {
        let x = a.norm_sqr();
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// A normalized pure state of `n` qubits. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Amplitude>,
}

impl StateVector {
    /// Builds a state from `2^n` amplitudes.
    ///
    /// With `normalize` the amplitudes are divided by their Euclidean norm;
    /// otherwise the squared norm must already be within [`NORM_TOL`] of one.
    pub fn new(n: usize, amps: Vec<Amplitude>, normalize: bool) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::QubitCount(n));
        }
        let expected = 1usize << n;
        if amps.len() != expected {
            return Err(Error::LengthMismatch { expected, found: amps.len() });
        }
        if let Some(index) = amps.iter().position(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        let norm_sqr = norm_sqr_of(&amps);
        if normalize {
            let norm = norm_sqr.sqrt();
            if norm <= 1e-15 {
                return Err(Error::ZeroVector);
            }
            let amps = amps.into_iter().map(|a| a / norm).collect();
            Ok(Self { n, amps })
        } else if (norm_sqr - 1.0).abs() > NORM_TOL {
            Err(Error::NotNormalized { norm_sqr })
        } else {
            Ok(Self { n, amps })
        }
    }

    /// Real amplitudes, convenient for tests and family constructors.
    pub fn from_real(n: usize, amps: &[f64], normalize: bool) -> Result<Self> {
        Self::new(n, amps.iter().map(|&x| Amplitude::new(x, 0.0)).collect(), normalize)
    }

    /// The computational basis ket at `index`.
    pub fn basis(n: usize, index: usize) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::QubitCount(n));
        }
        let dim = 1usize << n;
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, n: dim });
        }
        let mut amps = vec![Amplitude::new(0.0, 0.0); dim];
        amps[index] = Amplitude::new(1.0, 0.0);
        Ok(Self { n, amps })
    }

    /// Single-qubit state `u|0⟩ + v|1⟩`, normalized.
    pub fn qubit(u: Amplitude, v: Amplitude) -> Result<Self> {
        Self::new(1, vec![u, v], true)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Amplitude] {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> Amplitude {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        norm_sqr_of(&self.amps)
    }

    /// `⟨self|ket⟩`, conjugate-linear in `self`.
    pub fn inner(&self, ket: &StateVector) -> Result<Amplitude> {
        inner_product(self, ket)
    }

    /// Nonzero amplitudes (modulus above `threshold`) in ascending index order.
    pub fn support(&self, threshold: f64) -> impl Iterator<Item = (BasisLabel, Amplitude)> + '_ {
        let n = self.n;
        self.amps
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.norm() > threshold)
            .map(move |(i, &a)| (BasisLabel::from_index(i, n), a))
    }

    /// Largest per-amplitude modulus difference; `None` on qubit-count mismatch.
    pub fn max_amp_diff(&self, other: &StateVector) -> Option<f64> {
        (self.n == other.n).then(|| {
            self.amps
                .iter()
                .zip(&other.amps)
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max)
        })
    }

    /// Serializes to the state file format: `{"n": .., "amps": [[re, im], ..]}`
    /// with every number written to 17 significant digits.
    pub fn to_json(&self) -> String {
        let mut out = String::with_capacity(48 * self.amps.len() + 32);
        let _ = write!(out, "{{\n  \"n\": {},\n  \"amps\": [", self.n);
        for (i, a) in self.amps.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "\n    [{}, {}]", sig17(a.re), sig17(a.im));
        }
        out.push_str("\n  ]\n}\n");
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct StateFile {
            n: usize,
            amps: Vec<[f64; 2]>,
        }
        let file: StateFile =
            serde_json::from_str(text).map_err(|e| Error::StateFile(e.to_string()))?;
        let amps = file.amps.iter().map(|&[re, im]| Amplitude::new(re, im)).collect();
        Self::new(file.n, amps, false)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }
}

fn sig17(x: f64) -> String {
    if x == 0.0 {
        // keeps the sign of negative zero out of the file
        "0.0000000000000000e0".to_string()
    } else {
        format!("{x:.16e}")
    }
}

/// `⟨bra|ket⟩ = Σ conj(bra_j) · ket_j`.
pub fn inner_product(bra: &StateVector, ket: &StateVector) -> Result<Amplitude> {
    if bra.n != ket.n {
        return Err(Error::DimensionMismatch { left: bra.n, right: ket.n });
    }
    Ok(bra.amps.iter().zip(&ket.amps).map(|(b, k)| b.conj() * k).sum())
}

/// `left ⊗ right`, with `left` on the more significant qubits.
pub fn tensor(left: &StateVector, right: &StateVector) -> Result<StateVector> {
    let n = left.n + right.n;
    if n > MAX_QUBITS {
        return Err(Error::QubitCount(n));
    }
    let amps = left
        .amps
        .iter()
        .flat_map(|l| right.amps.iter().map(move |r| l * r))
        .collect();
    Ok(StateVector { n, amps })
}

/// Places a single-qubit state at `qubit_index` (1-based) of a product with
/// the `(n-1)`-qubit `rest`, keeping the remaining qubits in order.
pub fn embed_qubit(qubit: &StateVector, rest: &StateVector, qubit_index: usize) -> Result<StateVector> {
    if qubit.n != 1 {
        return Err(Error::DimensionMismatch { left: qubit.n, right: 1 });
    }
    let n = rest.n + 1;
    if n > MAX_QUBITS {
        return Err(Error::QubitCount(n));
    }
    check_qubit_index(n, qubit_index)?;
    let pos = bit_position(n, qubit_index);
    let mut amps = vec![Amplitude::new(0.0, 0.0); 1 << n];
    for (r, &amp) in rest.amps.iter().enumerate() {
        amps[compose_index(0, r, pos)] = qubit.amps[0] * amp;
        amps[compose_index(1, r, pos)] = qubit.amps[1] * amp;
    }
    Ok(StateVector { n, amps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64) -> Amplitude {
        Amplitude::new(re, 0.0)
    }

    #[test]
    fn zero_state_single_qubit() {
        let s = StateVector::new(1, vec![c(1.0), c(0.0)], false).unwrap();
        assert_eq!(s.amps(), &[c(1.0), c(0.0)]);
    }

    #[test]
    fn normalizes_ghz_minus() {
        let s = StateVector::from_real(2, &[1.0, 0.0, 0.0, -1.0], true).unwrap();
        assert_abs_diff_eq!(s.amp(0).re, FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(s.amp(3).re, -FRAC_1_SQRT_2, epsilon = 1e-15);
    }

    #[test]
    fn rejects_zero_vector() {
        assert!(matches!(StateVector::from_real(1, &[0.0, 0.0], true), Err(Error::ZeroVector)));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            StateVector::from_real(2, &[1.0, 0.0], false),
            Err(Error::LengthMismatch { expected: 4, found: 2 })
        ));
        assert!(matches!(
            StateVector::from_real(1, &[1.0, 1.0], false),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            StateVector::from_real(1, &[f64::NAN, 1.0], true),
            Err(Error::NonFinite { index: 0 })
        ));
        assert!(matches!(StateVector::basis(25, 0), Err(Error::QubitCount(25))));
    }

    #[test]
    fn inner_products() {
        let ghz = StateVector::from_real(2, &[1.0, 0.0, 0.0, -1.0], true).unwrap();
        let zz = StateVector::basis(2, 0).unwrap();
        assert_abs_diff_eq!(inner_product(&zz, &ghz).unwrap().re, FRAC_1_SQRT_2, epsilon = 1e-15);
        let zero = StateVector::basis(1, 0).unwrap();
        let one = StateVector::basis(1, 1).unwrap();
        assert_eq!(inner_product(&zero, &one).unwrap(), c(0.0));
        assert!(matches!(inner_product(&zero, &zz), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn inner_product_is_conjugate_linear_in_bra() {
        let bra = StateVector::qubit(c(0.0), Amplitude::new(0.0, 1.0)).unwrap();
        let ket = StateVector::basis(1, 1).unwrap();
        assert_eq!(inner_product(&bra, &ket).unwrap(), Amplitude::new(0.0, -1.0));
    }

    #[test]
    fn tensor_places_left_on_high_bits() {
        let zero = StateVector::basis(1, 0).unwrap();
        assert_eq!(tensor(&zero, &zero).unwrap(), StateVector::basis(2, 0).unwrap());

        let one = StateVector::basis(1, 1).unwrap();
        let ghz = StateVector::from_real(2, &[1.0, 0.0, 0.0, -1.0], true).unwrap();
        let t = tensor(&one, &ghz).unwrap();
        let expected =
            StateVector::from_real(3, &[0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, -1.0], true).unwrap();
        assert!(t.max_amp_diff(&expected).unwrap() < 1e-15);
    }

    #[test]
    fn embed_matches_tensor_at_first_and_last_qubit() {
        let q = StateVector::qubit(c(0.6), Amplitude::new(0.0, 0.8)).unwrap();
        let rest = StateVector::from_real(2, &[0.1, 0.2, 0.3, 0.4], true).unwrap();
        let first = embed_qubit(&q, &rest, 1).unwrap();
        assert_eq!(first, tensor(&q, &rest).unwrap());
        let last = embed_qubit(&q, &rest, 3).unwrap();
        assert_eq!(last, tensor(&rest, &q).unwrap());
        assert!(matches!(embed_qubit(&q, &rest, 4), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn basis_label_round_trip_and_display() {
        for n in 1..=6 {
            for j in 0..(1usize << n) {
                assert_eq!(BasisLabel::from_index(j, n).index(), j);
            }
        }
        let w = BasisLabel::from_index(0b100, 3);
        assert_eq!(w.bits(), &[true, false, false]);
        assert_eq!(w.to_string(), "|100⟩");
        assert_eq!(w.weight(), 1);
    }

    #[test]
    fn compose_index_inserts_bit() {
        // n = 3, qubit 2 (pos 1): rest bits (q1, q3) = (1, 1) -> |1b1⟩
        assert_eq!(compose_index(0, 0b11, 1), 0b101);
        assert_eq!(compose_index(1, 0b11, 1), 0b111);
        assert_eq!(compose_index(1, 0b00, 2), 0b100);
    }

    #[test]
    fn json_round_trip() {
        let s = StateVector::new(
            2,
            vec![
                Amplitude::new(0.5, -0.1),
                c(1.0 / 3.0),
                Amplitude::new(0.0, 0.2),
                c(-0.7),
            ],
            true,
        )
        .unwrap();
        let text = s.to_json();
        assert!(text.contains("\"n\": 2"));
        let back = StateVector::from_json(&text).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn json_rejects_unnormalized() {
        let text = r#"{"n": 1, "amps": [[1.0, 0.0], [1.0, 0.0]]}"#;
        assert!(matches!(StateVector::from_json(text), Err(Error::NotNormalized { .. })));
        assert!(matches!(StateVector::from_json("{"), Err(Error::StateFile(_))));
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("psi.json");
        let s = StateVector::from_real(1, &[0.6, 0.8], false).unwrap();
        s.write_file(&path).unwrap();
        assert_eq!(StateVector::read_file(&path).unwrap(), s);
    }
}
