//! Werner-like, Dicke, GHZ-like and trigonometric n-qubit states, with their
//! analytic single-qubit entanglement.

use crate::error::{Error, Result};
use crate::statevector::{norm_sqr_of, Amplitude, StateVector, MAX_QUBITS, NORM_TOL};

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::NTooSmall { n, min });
    }
    if n > MAX_QUBITS {
        return Err(Error::QubitCount(n));
    }
    Ok(())
}

fn tent(p: f64) -> f64 {
    0.5 * (1.0 - (1.0 - 2.0 * p).abs())
}

/// Coefficients of `c1|10…0⟩ + c2|01…0⟩ + … + cn|00…1⟩`, `Σ|c_i|² = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct WernerSpec {
    c: Vec<Amplitude>,
}

impl WernerSpec {
    pub fn new(c: Vec<Amplitude>) -> Result<Self> {
        check_n(c.len(), 2)?;
        let sum = norm_sqr_of(&c);
        if (sum - 1.0).abs() > NORM_TOL {
            return Err(Error::BadNormalization(sum));
        }
        Ok(Self { c })
    }

    /// All coefficients equal to `1/√n`.
    pub fn proper(n: usize) -> Result<Self> {
        check_n(n, 2)?;
        Self::new(vec![Amplitude::new(1.0 / (n as f64).sqrt(), 0.0); n])
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn coefficients(&self) -> &[Amplitude] {
        &self.c
    }
}

/// `D_{n,k}`: uniform superposition of the kets with exactly `k` ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DickeSpec {
    n: usize,
    k: usize,
}

impl DickeSpec {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        check_n(n, 1)?;
        if k > n {
            return Err(Error::KOutOfRange { n, k });
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `1/√C(n, k)`.
    pub fn amplitude(&self) -> f64 {
        1.0 / binomial(self.n, self.k).sqrt()
    }
}

/// `c1|0…0⟩ + c2|1…1⟩` on `n` qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GhzSpec {
    n: usize,
    c1: Amplitude,
    c2: Amplitude,
}

impl GhzSpec {
    pub fn new(n: usize, c1: Amplitude, c2: Amplitude) -> Result<Self> {
        check_n(n, 2)?;
        let sum = c1.norm_sqr() + c2.norm_sqr();
        if (sum - 1.0).abs() > NORM_TOL {
            return Err(Error::BadNormalization(sum));
        }
        Ok(Self { n, c1, c2 })
    }

    /// `c2 = √(1 − |c1|²)`, real and nonnegative.
    pub fn from_c1(n: usize, c1: Amplitude) -> Result<Self> {
        let rest = 1.0 - c1.norm_sqr();
        if rest < -NORM_TOL {
            return Err(Error::BadNormalization(c1.norm_sqr()));
        }
        Self::new(n, c1, Amplitude::new(rest.max(0.0).sqrt(), 0.0))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c1(&self) -> Amplitude {
        self.c1
    }

    pub fn c2(&self) -> Amplitude {
        self.c2
    }
}

/// Binomial coefficient as a float; exact for every `n ≤ MAX_QUBITS`.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc as f64
}

pub fn werner(spec: &WernerSpec) -> Result<StateVector> {
    let n = spec.n();
    let mut amps = vec![Amplitude::new(0.0, 0.0); 1 << n];
    for (i, &c) in spec.c.iter().enumerate() {
        amps[1 << (n - 1 - i)] = c;
    }
    StateVector::new(n, amps, false)
}

pub fn dicke(spec: &DickeSpec) -> Result<StateVector> {
    let a = Amplitude::new(spec.amplitude(), 0.0);
    let zero = Amplitude::new(0.0, 0.0);
    let amps = (0..1usize << spec.n)
        .map(|j| if j.count_ones() as usize == spec.k { a } else { zero })
        .collect();
    StateVector::new(spec.n, amps, false)
}

pub fn ghz(spec: &GhzSpec) -> Result<StateVector> {
    let mut amps = vec![Amplitude::new(0.0, 0.0); 1 << spec.n];
    amps[0] = spec.c1;
    amps[(1 << spec.n) - 1] = spec.c2;
    StateVector::new(spec.n, amps, false)
}

/// Sign pattern of the trigonometric states on Hamming weight `w`.
fn trig_amplitudes(n: usize, parity: usize) -> Vec<Amplitude> {
    let scale = 2f64.powf(-((n - 1) as f64) / 2.0);
    (0..1usize << n)
        .map(|j| {
            let w = j.count_ones() as usize;
            if w % 2 != parity {
                return Amplitude::new(0.0, 0.0);
            }
            let sign = if (w / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
            Amplitude::new(sign * scale, 0.0)
        })
        .collect()
}

/// `2^{-(n-1)/2} Σ_{w odd} (−1)^{(w−1)/2} |w ones⟩`.
pub fn trig_sin(n: usize) -> Result<StateVector> {
    check_n(n, 2)?;
    StateVector::new(n, trig_amplitudes(n, 1), false)
}

/// `2^{-(n-1)/2} Σ_{w even} (−1)^{w/2} |w ones⟩`.
pub fn trig_cos(n: usize) -> Result<StateVector> {
    check_n(n, 2)?;
    StateVector::new(n, trig_amplitudes(n, 0), false)
}

/// A parsed member of one of the families.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Werner(WernerSpec),
    Dicke(DickeSpec),
    Ghz(GhzSpec),
    Sin(usize),
    Cos(usize),
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Werner(_) => "werner",
            FamilySpec::Dicke(_) => "dicke",
            FamilySpec::Ghz(_) => "ghz",
            FamilySpec::Sin(_) => "sin",
            FamilySpec::Cos(_) => "cos",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            FamilySpec::Werner(w) => w.n(),
            FamilySpec::Dicke(d) => d.n(),
            FamilySpec::Ghz(g) => g.n(),
            FamilySpec::Sin(n) | FamilySpec::Cos(n) => *n,
        }
    }

    pub fn build(&self) -> Result<StateVector> {
        match self {
            FamilySpec::Werner(w) => werner(w),
            FamilySpec::Dicke(d) => dicke(d),
            FamilySpec::Ghz(g) => ghz(g),
            FamilySpec::Sin(n) => trig_sin(*n),
            FamilySpec::Cos(n) => trig_cos(*n),
        }
    }

    pub fn predicted_entanglement(&self, qubit_index: usize) -> Result<f64> {
        predicted_entanglement(self, qubit_index)
    }
}

/// Analytic measure of `qubit_index` against the rest, per family.
pub fn predicted_entanglement(family: &FamilySpec, qubit_index: usize) -> Result<f64> {
    let n = family.n();
    if qubit_index == 0 || qubit_index > n {
        return Err(Error::IndexOutOfRange { index: qubit_index, n });
    }
    Ok(match family {
        FamilySpec::Werner(w) => tent(w.c[qubit_index - 1].norm_sqr()),
        FamilySpec::Dicke(d) => tent(d.k as f64 / d.n as f64),
        FamilySpec::Ghz(g) => tent(g.c1.norm_sqr()),
        FamilySpec::Sin(_) | FamilySpec::Cos(_) => 0.5,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{entanglement_profile, geometric_entanglement};
    use crate::statevector::{embed_qubit, BasisLabel};
    use approx::assert_abs_diff_eq;

    fn real(x: f64) -> Amplitude {
        Amplitude::new(x, 0.0)
    }

    fn kets(psi: &StateVector) -> Vec<(String, f64)> {
        psi.support(1e-14).map(|(l, a)| (l.to_string(), a.re)).collect()
    }

    #[test]
    fn proper_w3() {
        let psi = werner(&WernerSpec::proper(3).unwrap()).unwrap();
        let s = 1.0 / 3f64.sqrt();
        let got = kets(&psi);
        assert_eq!(got.len(), 3);
        for ((label, a), want) in got.iter().zip(["|001⟩", "|010⟩", "|100⟩"]) {
            assert_eq!(label, want);
            assert_abs_diff_eq!(*a, s, epsilon = 1e-15);
        }
        for e in entanglement_profile(&psi).unwrap().per_qubit {
            assert_abs_diff_eq!(e, 1.0 / 3.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn werner_product_and_balanced_profile() {
        let psi = werner(&WernerSpec::new(vec![real(1.0), real(0.0)]).unwrap()).unwrap();
        assert_eq!(psi, StateVector::basis(2, 0b10).unwrap());
        assert_eq!(geometric_entanglement(&psi, 1).unwrap().entanglement, 0.0);

        let c = [0.5f64, 0.3, 0.2].map(|p| real(p.sqrt())).to_vec();
        let p = entanglement_profile(&werner(&WernerSpec::new(c).unwrap()).unwrap()).unwrap();
        for (e, want) in p.per_qubit.iter().zip([0.5, 0.3, 0.2]) {
            assert_abs_diff_eq!(*e, want, epsilon = 1e-15);
        }
        assert_abs_diff_eq!(p.total, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn werner_rejects_bad_normalization() {
        let err = WernerSpec::new(vec![real(0.5), real(0.5)]).unwrap_err();
        assert!(matches!(err, Error::BadNormalization(_)));
        assert!(matches!(WernerSpec::new(vec![real(1.0)]), Err(Error::NTooSmall { .. })));
    }

    #[test]
    fn dicke_examples() {
        let d42 = dicke(&DickeSpec::new(4, 2).unwrap()).unwrap();
        let got = kets(&d42);
        assert_eq!(got.len(), 6);
        for (_, a) in &got {
            assert_abs_diff_eq!(*a, 1.0 / 6f64.sqrt(), epsilon = 1e-15);
        }
        assert_abs_diff_eq!(geometric_entanglement(&d42, 1).unwrap().entanglement, 0.5, epsilon = 1e-15);

        let d31 = dicke(&DickeSpec::new(3, 1).unwrap()).unwrap();
        let w3 = werner(&WernerSpec::proper(3).unwrap()).unwrap();
        assert!(d31.max_amp_diff(&w3).unwrap() < 1e-15);

        let d50 = dicke(&DickeSpec::new(5, 0).unwrap()).unwrap();
        assert_eq!(d50, StateVector::basis(5, 0).unwrap());
        assert!(matches!(DickeSpec::new(3, 4), Err(Error::KOutOfRange { n: 3, k: 4 })));
    }

    #[test]
    fn dicke_split_weights_and_companions() {
        use crate::decompose::{split_qubit, QubitBasis};
        for n in 2..=8 {
            for k in 1..n {
                let psi = dicke(&DickeSpec::new(n, k).unwrap()).unwrap();
                let s = split_qubit(&psi, 1, &QubitBasis::flipped()).unwrap();
                assert_abs_diff_eq!(s.a * s.a, k as f64 / n as f64, epsilon = 1e-12);
                assert_abs_diff_eq!(s.b * s.b, (n - k) as f64 / n as f64, epsilon = 1e-12);
                let lower = dicke(&DickeSpec::new(n - 1, k - 1).unwrap()).unwrap();
                let same = dicke(&DickeSpec::new(n - 1, k).unwrap()).unwrap();
                assert!(s.phi1.unwrap().max_amp_diff(&lower).unwrap() < 1e-12);
                assert!(s.phi2.unwrap().max_amp_diff(&same).unwrap() < 1e-12);
            }
        }
    }

    #[test]
    fn ghz_examples() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let psi = ghz(&GhzSpec::new(3, real(h), real(h)).unwrap()).unwrap();
        for q in 1..=3 {
            assert_abs_diff_eq!(geometric_entanglement(&psi, q).unwrap().entanglement, 0.5, epsilon = 1e-15);
        }
        let spec = GhzSpec::from_c1(4, real(0.3f64.sqrt())).unwrap();
        let e = geometric_entanglement(&ghz(&spec).unwrap(), 2).unwrap().entanglement;
        assert_abs_diff_eq!(e, 0.3, epsilon = 1e-15);
        let prod = ghz(&GhzSpec::from_c1(3, real(1.0)).unwrap()).unwrap();
        assert_eq!(geometric_entanglement(&prod, 1).unwrap().entanglement, 0.0);
        assert!(matches!(GhzSpec::from_c1(3, real(1.1)), Err(Error::BadNormalization(_))));
    }

    #[test]
    fn trig_displays_for_three_and_four_qubits() {
        let s3 = kets(&trig_sin(3).unwrap());
        let want = [("|001⟩", 0.5), ("|010⟩", 0.5), ("|100⟩", 0.5), ("|111⟩", -0.5)];
        assert_eq!(s3.len(), 4);
        for ((l, a), (wl, wa)) in s3.iter().zip(want) {
            assert_eq!(l, wl);
            assert_abs_diff_eq!(*a, wa, epsilon = 1e-15);
        }
        let c3 = kets(&trig_cos(3).unwrap());
        let want = [("|000⟩", 0.5), ("|011⟩", -0.5), ("|101⟩", -0.5), ("|110⟩", -0.5)];
        for ((l, a), (wl, wa)) in c3.iter().zip(want) {
            assert_eq!(l, wl);
            assert_abs_diff_eq!(*a, wa, epsilon = 1e-15);
        }

        let r = 1.0 / (2.0 * 2f64.sqrt());
        for (l, a) in kets(&trig_sin(4).unwrap()) {
            let w = BasisLabel::from_index(usize::from_str_radix(&l[1..5], 2).unwrap(), 4).weight();
            let want = if w == 1 { r } else { -r };
            assert!(w == 1 || w == 3);
            assert_abs_diff_eq!(a, want, epsilon = 1e-15);
        }
        let c4 = kets(&trig_cos(4).unwrap());
        assert_eq!(c4.len(), 8);
        assert_abs_diff_eq!(c4[0].1, r, epsilon = 1e-15);
        assert_abs_diff_eq!(c4[7].1, r, epsilon = 1e-15);
        assert!(c4[1..7].iter().all(|(_, a)| (*a + r).abs() < 1e-15));
    }

    #[test]
    fn cos2_is_ghz_minus() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let expected = StateVector::from_real(2, &[h, 0.0, 0.0, -h], false).unwrap();
        assert!(trig_cos(2).unwrap().max_amp_diff(&expected).unwrap() < 1e-15);
        assert!(matches!(trig_sin(1), Err(Error::NTooSmall { n: 1, min: 2 })));
    }

    #[test]
    fn trig_sum_of_angles_recursion() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let zero = StateVector::basis(1, 0).unwrap();
        let one = StateVector::basis(1, 1).unwrap();
        for n in 3..=10 {
            let (s_prev, c_prev) = (trig_sin(n - 1).unwrap(), trig_cos(n - 1).unwrap());
            let z_s = embed_qubit(&zero, &s_prev, 1).unwrap();
            let o_c = embed_qubit(&one, &c_prev, 1).unwrap();
            let z_c = embed_qubit(&zero, &c_prev, 1).unwrap();
            let o_s = embed_qubit(&one, &s_prev, 1).unwrap();
            let sin_n = trig_sin(n).unwrap();
            let cos_n = trig_cos(n).unwrap();
            for j in 0..1 << n {
                let s = (z_s.amp(j) + o_c.amp(j)) * h;
                let c = (z_c.amp(j) - o_s.amp(j)) * h;
                assert!((sin_n.amp(j) - s).norm() <= 1e-12);
                assert!((cos_n.amp(j) - c).norm() <= 1e-12);
            }
        }
    }

    #[test]
    fn predicted_values() {
        let d = FamilySpec::Dicke(DickeSpec::new(6, 2).unwrap());
        assert_abs_diff_eq!(d.predicted_entanglement(1).unwrap(), 1.0 / 3.0, epsilon = 1e-15);
        let c = [0.7f64, 0.1, 0.1, 0.1].map(|p| real(p.sqrt())).to_vec();
        let w = FamilySpec::Werner(WernerSpec::new(c).unwrap());
        assert_abs_diff_eq!(w.predicted_entanglement(1).unwrap(), 0.3, epsilon = 1e-15);
        for n in 2..=7 {
            for q in 1..=n {
                assert_eq!(FamilySpec::Sin(n).predicted_entanglement(q).unwrap(), 0.5);
            }
        }
        assert!(matches!(d.predicted_entanglement(7), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6.0);
        assert_eq!(binomial(24, 12), 2_704_156.0);
        assert_eq!(binomial(5, 0), 1.0);
        assert_eq!(binomial(3, 4), 0.0);
    }
}
