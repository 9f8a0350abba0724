//! Claim-by-claim verification of the closed form, the family results and
//! the supporting identities, on seeded corpora.
//!
//! Every claim runs at a fixed tolerance. With `max_n = 12` the corpora are
//! the full reference sizes; smaller `max_n` truncates the qubit ranges.

use std::fmt;

use rayon::prelude::*;

use crate::corpus::{
    balanced_werner, dominant_werner, random_product_state, random_state, random_werner, seeded_rng,
};
use crate::decompose::{reassemble, split_qubit, standard_bases};
use crate::error::{Error, Result};
use crate::families::{DickeSpec, FamilySpec, GhzSpec, WernerSpec};
use crate::measure::{
    concurrence_two_qubit, entanglement_from_concurrence, entanglement_of_split,
    entanglement_profile, geometric_entanglement,
};
use crate::oracle::{eigen_oracle, grid_oracle};
use crate::statevector::{embed_qubit, inner_product, Amplitude, StateVector};

pub const TOL_EIGEN: f64 = 1e-10;
pub const TOL_GRID: f64 = 1e-6;
pub const TOL_SUM_RULE: f64 = 1e-9;
pub const TOL_EXACT: f64 = 1e-12;
pub const TOL_TRIG: f64 = 1e-9;
pub const TOL_CONCURRENCE: f64 = 1e-9;
pub const TOL_SEPARABLE: f64 = 1e-10;
pub const TOL_BASIS: f64 = 1e-9;
pub const TOL_MAXIMIZER: f64 = 1e-9;
pub const TOL_ROUND_TRIP: f64 = 1e-12;

pub const MIN_MAX_N: usize = 2;
pub const MAX_MAX_N: usize = 14;

/// Qubit ceiling of the random-state corpora.
const RANDOM_MAX_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub seed: u64,
    pub random_states: usize,
    pub sum_rule_vectors: usize,
    pub majorization_vectors: usize,
    pub two_qubit_states: usize,
    pub product_states: usize,
    pub basis_states: usize,
    pub grid_points: usize,
    pub grid_rounds: usize,
}

impl VerifyConfig {
    pub fn new(max_n: usize, seed: u64) -> Result<Self> {
        if !(MIN_MAX_N..=MAX_MAX_N).contains(&max_n) {
            return Err(Error::BadRange(format!(
                "max-n must lie in {MIN_MAX_N}..={MAX_MAX_N}, got {max_n}"
            )));
        }
        Ok(Self {
            max_n,
            seed,
            random_states: 1000,
            sum_rule_vectors: 200,
            majorization_vectors: 200,
            two_qubit_states: 500,
            product_states: 200,
            basis_states: 200,
            grid_points: 64,
            grid_rounds: 8,
        })
    }

    fn random_max_n(&self) -> usize {
        self.max_n.min(RANDOM_MAX_N)
    }
}

/// One quantitative check inside a claim.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub label: &'static str,
    pub cases: usize,
    pub max_deviation: f64,
    /// `None` for qualitative checks, which only carry `passed`.
    pub tolerance: Option<f64>,
    pub passed: bool,
}

impl Check {
    fn within(label: &'static str, deviations: &[f64], tolerance: f64) -> Self {
        let max_deviation = deviations.iter().copied().fold(0.0, max_nan);
        Self {
            label,
            cases: deviations.len(),
            max_deviation,
            tolerance: Some(tolerance),
            passed: max_deviation <= tolerance,
        }
    }

    fn holds(label: &'static str, cases: usize, passed: bool) -> Self {
        Self { label, cases, max_deviation: 0.0, tolerance: None, passed }
    }
}

/// NaN-propagating max, so a NaN deviation always fails.
fn max_nan(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClaimReport {
    pub id: usize,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn cases(&self) -> usize {
        self.checks.iter().map(|c| c.cases).sum()
    }
}

impl fmt::Display for ClaimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} [{:>2}] {}:", self.id, self.title)?;
        for (i, c) in self.checks.iter().enumerate() {
            let sep = if i == 0 { " " } else { "; " };
            match c.tolerance {
                Some(tol) => write!(
                    f,
                    "{sep}{} max_dev={:.3e} tol={:.0e} n={}",
                    c.label, c.max_deviation, tol, c.cases
                )?,
                None => write!(f, "{sep}{} {} n={}", c.label, if c.passed { "holds" } else { "VIOLATED" }, c.cases)?,
            }
        }
        Ok(())
    }
}

/// A state of the verification corpus.
#[derive(Debug, Clone)]
pub struct CorpusState {
    pub label: String,
    pub psi: StateVector,
    pub family: Option<FamilySpec>,
}

fn real(x: f64) -> Amplitude {
    Amplitude::new(x, 0.0)
}

/// Family members for `n = 2..=max_n`: proper and three random Werner-like
/// states, every Dicke `k`, a 21-point GHZ sweep and both trigonometric states.
pub fn family_corpus(max_n: usize, seed: u64) -> Vec<CorpusState> {
    let mut rng = seeded_rng(seed, 100);
    let mut out = Vec::new();
    let mut push = |label: String, spec: FamilySpec| {
        let psi = spec.build().expect("corpus family members are valid");
        out.push(CorpusState { label, psi, family: Some(spec) });
    };
    for n in 2..=max_n {
        push(format!("werner-proper:{n}"), FamilySpec::Werner(WernerSpec::proper(n).unwrap()));
        for r in 0..3 {
            push(format!("werner-random:{n}#{r}"), FamilySpec::Werner(random_werner(&mut rng, n)));
        }
        for k in 0..=n {
            push(format!("dicke:{n},{k}"), FamilySpec::Dicke(DickeSpec::new(n, k).unwrap()));
        }
        for j in 0..=20 {
            let p = j as f64 / 20.0;
            let phase: f64 = rand::Rng::gen_range(&mut rng, 0.0..std::f64::consts::TAU);
            let spec = GhzSpec::new(n, real(p.sqrt()), Amplitude::from_polar((1.0 - p).sqrt(), phase))
                .unwrap();
            push(format!("ghz:{n},p={p}"), FamilySpec::Ghz(spec));
        }
        push(format!("sin:{n}"), FamilySpec::Sin(n));
        push(format!("cos:{n}"), FamilySpec::Cos(n));
    }
    out
}

/// `count` random states with `n` cycling through `2..=max_n`.
pub fn random_corpus(count: usize, max_n: usize, seed: u64, stream: u64) -> Vec<CorpusState> {
    let mut rng = seeded_rng(seed, stream);
    let span = max_n - 1;
    (0..count)
        .map(|i| {
            let n = 2 + i % span;
            CorpusState { label: format!("random:{n}#{i}"), psi: random_state(&mut rng, n), family: None }
        })
        .collect()
}

fn closed_form_corpus(cfg: &VerifyConfig) -> Vec<CorpusState> {
    let mut corpus = family_corpus(cfg.max_n, cfg.seed);
    corpus.extend(random_corpus(cfg.random_states, cfg.random_max_n(), cfg.seed, 1));
    corpus
}

/// Applies `f` to every (state, qubit) pair in parallel; results keep corpus order.
fn per_qubit<F>(corpus: &[CorpusState], f: F) -> Vec<f64>
where
    F: Fn(&StateVector, usize) -> f64 + Sync,
{
    corpus
        .par_iter()
        .flat_map_iter(|c| (1..=c.psi.n()).map(|q| f(&c.psi, q)).collect::<Vec<_>>())
        .collect()
}

fn closed(psi: &StateVector, q: usize) -> f64 {
    geometric_entanglement(psi, q).map_or(f64::NAN, |r| r.entanglement)
}

pub fn claim_closed_form_vs_eigen(cfg: &VerifyConfig) -> ClaimReport {
    let corpus = closed_form_corpus(cfg);
    let dev = per_qubit(&corpus, |psi, q| {
        (closed(psi, q) - eigen_oracle(psi, q).unwrap_or(f64::NAN)).abs()
    });
    ClaimReport {
        id: 1,
        title: "closed form vs eigenvalue oracle",
        checks: vec![Check::within("|E_closed - E_eigen|", &dev, TOL_EIGEN)],
    }
}

pub fn claim_closed_form_vs_grid(cfg: &VerifyConfig) -> ClaimReport {
    let corpus: Vec<_> =
        closed_form_corpus(cfg).into_iter().filter(|c| c.psi.n() <= RANDOM_MAX_N).collect();
    let dev = per_qubit(&corpus, |psi, q| {
        let g = grid_oracle(psi, q, cfg.grid_points, cfg.grid_rounds).map_or(f64::NAN, |r| r.e_est);
        (closed(psi, q) - g).abs()
    });
    ClaimReport {
        id: 2,
        title: "closed form vs grid oracle",
        checks: vec![Check::within("|E_closed - E_grid|", &dev, TOL_GRID)],
    }
}

fn werner_n_range(max_n: usize) -> std::ops::RangeInclusive<usize> {
    3..=max_n.clamp(3, 10)
}

pub fn claim_werner_sum_rule(cfg: &VerifyConfig) -> ClaimReport {
    let mut rng = seeded_rng(cfg.seed, 3);
    let sizes: Vec<usize> = werner_n_range(cfg.max_n).collect();
    let dev: Vec<f64> = (0..cfg.sum_rule_vectors)
        .map(|i| {
            let spec = balanced_werner(&mut rng, sizes[i % sizes.len()]);
            let psi = crate::families::werner(&spec).unwrap();
            entanglement_profile(&psi).map_or(f64::NAN, |p| (p.total - 1.0).abs())
        })
        .collect();
    ClaimReport {
        id: 3,
        title: "Werner sum rule, all |c_i|^2 <= 1/2",
        checks: vec![Check::within("|sum E_i - 1|", &dev, TOL_SUM_RULE)],
    }
}

pub fn claim_werner_majorization(cfg: &VerifyConfig) -> ClaimReport {
    let mut rng = seeded_rng(cfg.seed, 4);
    let sizes: Vec<usize> = werner_n_range(cfg.max_n).collect();
    let mut dev = Vec::with_capacity(cfg.majorization_vectors);
    let mut below_one = true;
    for i in 0..cfg.majorization_vectors {
        let (spec, _, p) = dominant_werner(&mut rng, sizes[i % sizes.len()]);
        let psi = crate::families::werner(&spec).unwrap();
        let total = entanglement_profile(&psi).map_or(f64::NAN, |p| p.total);
        dev.push((total - 2.0 * (1.0 - p)).abs());
        below_one &= total < 1.0;
    }
    ClaimReport {
        id: 4,
        title: "Werner majorization, one |c_m|^2 > 1/2",
        checks: vec![
            Check::within("|sum E_i - 2(1 - |c_m|^2)|", &dev, TOL_SUM_RULE),
            Check::holds("sum E_i < 1", dev.len(), below_one),
        ],
    }
}

pub fn claim_proper_werner(cfg: &VerifyConfig) -> ClaimReport {
    let mut dev = Vec::new();
    for n in 2..=cfg.max_n {
        let psi = crate::families::werner(&WernerSpec::proper(n).unwrap()).unwrap();
        dev.extend((1..=n).map(|q| (closed(&psi, q) - 1.0 / n as f64).abs()));
    }
    ClaimReport {
        id: 5,
        title: "proper Werner, E_i = 1/n",
        checks: vec![Check::within("|E_i - 1/n|", &dev, TOL_EXACT)],
    }
}

pub fn claim_dicke(cfg: &VerifyConfig) -> ClaimReport {
    let mut formula = Vec::new();
    let mut duality = Vec::new();
    let mut peak = Vec::new();
    let mut argmax_ok = true;
    for n in 2..=cfg.max_n {
        let e1: Vec<f64> = (0..=n)
            .map(|k| {
                let spec = DickeSpec::new(n, k).unwrap();
                let psi = crate::families::dicke(&spec).unwrap();
                let predicted = 0.5 * (1.0 - (1.0 - 2.0 * k as f64 / n as f64).abs());
                formula.extend((1..=n).map(|q| (closed(&psi, q) - predicted).abs()));
                closed(&psi, 1)
            })
            .collect();
        duality.extend((0..=n).map(|k| (e1[k] - e1[n - k]).abs()));
        if n % 2 == 0 {
            peak.push((e1[n / 2] - 0.5).abs());
            argmax_ok &= e1.iter().enumerate().all(|(k, &e)| k == n / 2 || e < e1[n / 2]);
        }
    }
    ClaimReport {
        id: 6,
        title: "Dicke E_1 = (1 - |1 - 2k/n|)/2",
        checks: vec![
            Check::within("|E - formula|", &formula, TOL_EXACT),
            Check::within("|E - 1/2| at k = n/2", &peak, TOL_EXACT),
            Check::holds("maximum only at k = n/2", peak.len(), argmax_ok),
            Check::within("|E(n,k) - E(n,n-k)|", &duality, TOL_EXACT),
        ],
    }
}

pub fn claim_ghz(cfg: &VerifyConfig) -> ClaimReport {
    let mut tent = Vec::new();
    let mut proper = Vec::new();
    for n in 2..=cfg.max_n {
        for j in 0..=20 {
            let p = j as f64 / 20.0;
            let psi = crate::families::ghz(&GhzSpec::from_c1(n, real(p.sqrt())).unwrap()).unwrap();
            let predicted = 0.5 * (1.0 - (1.0 - 2.0 * p).abs());
            tent.extend((1..=n).map(|q| (closed(&psi, q) - predicted).abs()));
        }
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let psi = crate::families::ghz(&GhzSpec::new(n, real(h), real(h)).unwrap()).unwrap();
        proper.extend((1..=n).map(|q| (closed(&psi, q) - 0.5).abs()));
    }
    ClaimReport {
        id: 7,
        title: "GHZ tent map E = (1 - |1 - 2|c_1|^2|)/2",
        checks: vec![
            Check::within("|E - tent(|c_1|^2)|", &tent, TOL_EXACT),
            Check::within("|E - 1/2| proper GHZ", &proper, TOL_EXACT),
        ],
    }
}

pub fn claim_trig(cfg: &VerifyConfig) -> ClaimReport {
    let mut values = Vec::new();
    let mut recursion = Vec::new();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let zero = StateVector::basis(1, 0).unwrap();
    let one = StateVector::basis(1, 1).unwrap();
    // one-qubit sine and cosine states, |1⟩ and |0⟩
    let (mut sin_prev, mut cos_prev) = (one.clone(), zero.clone());
    for n in 2..=cfg.max_n {
        let sin_n = crate::families::trig_sin(n).unwrap();
        let cos_n = crate::families::trig_cos(n).unwrap();
        for psi in [&sin_n, &cos_n] {
            values.extend((1..=n).map(|q| (closed(psi, q) - 0.5).abs()));
        }
        let z_s = embed_qubit(&zero, &sin_prev, 1).unwrap();
        let o_c = embed_qubit(&one, &cos_prev, 1).unwrap();
        let z_c = embed_qubit(&zero, &cos_prev, 1).unwrap();
        let o_s = embed_qubit(&one, &sin_prev, 1).unwrap();
        for j in 0..1usize << n {
            recursion.push((sin_n.amp(j) - (z_s.amp(j) + o_c.amp(j)) * h).norm());
            recursion.push((cos_n.amp(j) - (z_c.amp(j) - o_s.amp(j)) * h).norm());
        }
        sin_prev = sin_n;
        cos_prev = cos_n;
    }
    ClaimReport {
        id: 8,
        title: "trigonometric states, E = 1/2 for every n",
        checks: vec![
            Check::within("|E - 1/2|", &values, TOL_TRIG),
            Check::within("sum-of-angles recursion per amplitude", &recursion, TOL_EXACT),
        ],
    }
}

pub fn claim_two_qubit(cfg: &VerifyConfig) -> ClaimReport {
    let mut rng = seeded_rng(cfg.seed, 9);
    let dev: Vec<f64> = (0..cfg.two_qubit_states)
        .map(|_| {
            let psi = random_state(&mut rng, 2);
            let via_c = concurrence_two_qubit(&psi)
                .and_then(entanglement_from_concurrence)
                .unwrap_or(f64::NAN);
            (closed(&psi, 1) - via_c).abs()
        })
        .collect();
    let worked = entanglement_from_concurrence(0.8).map_or(f64::NAN, |e| (e - 0.2).abs());
    let skew = StateVector::from_real(2, &[0.8f64.sqrt(), 0.0, 0.0, 0.2f64.sqrt()], false).unwrap();
    let worked_state = concurrence_two_qubit(&skew).map_or(f64::NAN, |c| (c - 0.8).abs());
    ClaimReport {
        id: 9,
        title: "two-qubit E = (1 - sqrt(1 - C^2))/2",
        checks: vec![
            Check::within("|E - E(C)|", &dev, TOL_CONCURRENCE),
            Check::within("C = 0.8 gives E = 0.2", &[worked, worked_state], TOL_EXACT),
        ],
    }
}

pub fn claim_separable(cfg: &VerifyConfig) -> ClaimReport {
    let mut rng = seeded_rng(cfg.seed, 10);
    let span = cfg.random_max_n() - 1;
    let dev: Vec<f64> = (0..cfg.product_states)
        .map(|i| closed(&random_product_state(&mut rng, 2 + i % span), 1))
        .collect();
    ClaimReport {
        id: 10,
        title: "product states have E = 0 at the product cut",
        checks: vec![Check::within("E", &dev, TOL_SEPARABLE)],
    }
}

fn basis_corpus(cfg: &VerifyConfig) -> Vec<CorpusState> {
    random_corpus(cfg.basis_states, cfg.random_max_n(), cfg.seed, 11)
}

pub fn claim_basis_invariance(cfg: &VerifyConfig) -> ClaimReport {
    let bases = standard_bases();
    let dev = per_qubit(&basis_corpus(cfg), |psi, q| {
        let e: Vec<f64> = bases
            .iter()
            .map(|b| split_qubit(psi, q, b).and_then(|s| entanglement_of_split(&s)).unwrap_or(f64::NAN))
            .collect();
        let mut worst: f64 = 0.0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                worst = max_nan(worst, (e[i] - e[j]).abs());
            }
        }
        worst
    });
    ClaimReport {
        id: 11,
        title: "basis invariance (computational, flipped, X)",
        checks: vec![Check::within("pairwise |E_B - E_B'|", &dev, TOL_BASIS)],
    }
}

pub fn claim_maximizer(cfg: &VerifyConfig) -> ClaimReport {
    let dev = per_qubit(&closed_form_corpus(cfg), |psi, q| {
        let Ok(r) = geometric_entanglement(psi, q) else { return f64::NAN };
        let Some(sep) = r.separable_state() else { return f64::NAN };
        let f = inner_product(psi, &sep).map_or(f64::NAN, |z| z.norm_sqr());
        (f - (1.0 - r.entanglement)).abs()
    });
    ClaimReport {
        id: 12,
        title: "optimal product state attains 1 - E",
        checks: vec![Check::within("||<psi|chi x phi>|^2 - (1 - E)|", &dev, TOL_MAXIMIZER)],
    }
}

pub fn claim_round_trip(cfg: &VerifyConfig) -> ClaimReport {
    let bases = standard_bases();
    let dev = per_qubit(&basis_corpus(cfg), |psi, q| {
        bases
            .iter()
            .map(|b| {
                split_qubit(psi, q, b)
                    .and_then(|s| reassemble(&s, psi.n()))
                    .ok()
                    .and_then(|back| back.max_amp_diff(psi))
                    .unwrap_or(f64::NAN)
            })
            .fold(0.0, max_nan)
    });
    ClaimReport {
        id: 13,
        title: "reassemble(split) = psi",
        checks: vec![Check::within("max amplitude difference", &dev, TOL_ROUND_TRIP)],
    }
}

pub type ClaimFn = fn(&VerifyConfig) -> ClaimReport;

/// Every claim in order.
pub const CLAIMS: [ClaimFn; 13] = [
    claim_closed_form_vs_eigen,
    claim_closed_form_vs_grid,
    claim_werner_sum_rule,
    claim_werner_majorization,
    claim_proper_werner,
    claim_dicke,
    claim_ghz,
    claim_trig,
    claim_two_qubit,
    claim_separable,
    claim_basis_invariance,
    claim_maximizer,
    claim_round_trip,
];

pub fn run_all(cfg: &VerifyConfig) -> Vec<ClaimReport> {
    CLAIMS.iter().map(|claim| claim(cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_range() {
        assert!(VerifyConfig::new(1, 0).is_err());
        assert!(VerifyConfig::new(15, 0).is_err());
        assert!(VerifyConfig::new(2, 0).is_ok());
    }

    #[test]
    fn small_run_passes_everything() {
        let mut cfg = VerifyConfig::new(4, 42).unwrap();
        cfg.random_states = 30;
        cfg.sum_rule_vectors = 10;
        cfg.majorization_vectors = 10;
        cfg.two_qubit_states = 10;
        cfg.product_states = 10;
        cfg.basis_states = 10;
        for report in run_all(&cfg) {
            assert!(report.passed(), "{report}");
            assert!(report.cases() > 0);
        }
    }

    #[test]
    fn nan_deviation_fails() {
        let c = Check::within("x", &[0.0, f64::NAN, 0.0], 1.0);
        assert!(!c.passed);
    }

    #[test]
    fn corpus_is_reproducible() {
        let a = random_corpus(5, 6, 9, 1);
        let b = random_corpus(5, 6, 9, 1);
        assert!(a.iter().zip(&b).all(|(x, y)| x.psi == y.psi));
        assert_eq!(a.iter().map(|c| c.psi.n()).collect::<Vec<_>>(), vec![2, 3, 4, 5, 6]);
    }
}
