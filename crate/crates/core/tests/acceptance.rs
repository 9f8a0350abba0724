//! Acceptance criteria at full corpus size (`max_n = 12`, seed 42).
//!
//! Each test prints one PASS/FAIL line. Tolerances are restated here as
//! literals so a change to the library constants cannot loosen a criterion.
//! Run with `cargo test -p geoment-core --test acceptance -- --nocapture`.

use geoment::verify::{self, ClaimReport, VerifyConfig};

const SEED: u64 = 42;
const MAX_N: usize = 12;

fn config() -> VerifyConfig {
    let cfg = VerifyConfig::new(MAX_N, SEED).unwrap();
    assert_eq!(cfg.random_states, 1000);
    assert_eq!(cfg.sum_rule_vectors, 200);
    assert_eq!(cfg.majorization_vectors, 200);
    assert_eq!(cfg.two_qubit_states, 500);
    assert_eq!(cfg.product_states, 200);
    assert_eq!(cfg.basis_states, 200);
    assert_eq!((cfg.grid_points, cfg.grid_rounds), (64, 8));
    cfg
}

/// Runs a claim, prints its line, and checks every quantitative sub-check
/// against the pinned tolerances in order.
fn accept(claim: verify::ClaimFn, id: usize, tolerances: &[Option<f64>]) {
    let report: ClaimReport = claim(&config());
    println!("criterion {id:>2} seed={SEED}: {report}");
    assert_eq!(report.id, id);
    assert_eq!(report.checks.len(), tolerances.len(), "{report}");
    for (check, &tol) in report.checks.iter().zip(tolerances) {
        assert_eq!(check.tolerance, tol, "tolerance drift in `{}`", check.label);
        assert!(check.cases > 0, "`{}` ran no cases", check.label);
        if let Some(tol) = tol {
            assert!(check.max_deviation <= tol, "{report}");
        }
        assert!(check.passed, "{report}");
    }
    assert!(report.passed());
}

#[test]
fn criterion_01_closed_form_vs_eigen_oracle() {
    accept(verify::claim_closed_form_vs_eigen, 1, &[Some(1e-10)]);
}

#[test]
fn criterion_02_closed_form_vs_grid_oracle() {
    accept(verify::claim_closed_form_vs_grid, 2, &[Some(1e-6)]);
}

#[test]
fn criterion_03_werner_sum_rule() {
    accept(verify::claim_werner_sum_rule, 3, &[Some(1e-9)]);
}

#[test]
fn criterion_04_werner_majorization() {
    accept(verify::claim_werner_majorization, 4, &[Some(1e-9), None]);
}

#[test]
fn criterion_05_proper_werner() {
    accept(verify::claim_proper_werner, 5, &[Some(1e-12)]);
}

#[test]
fn criterion_06_dicke() {
    accept(verify::claim_dicke, 6, &[Some(1e-12), Some(1e-12), None, Some(1e-12)]);
}

#[test]
fn criterion_07_ghz_tent_map() {
    accept(verify::claim_ghz, 7, &[Some(1e-12), Some(1e-12)]);
}

#[test]
fn criterion_08_trigonometric_states() {
    accept(verify::claim_trig, 8, &[Some(1e-9), Some(1e-12)]);
}

#[test]
fn criterion_09_two_qubit_concurrence() {
    accept(verify::claim_two_qubit, 9, &[Some(1e-9), Some(1e-12)]);
}

#[test]
fn criterion_10_separable_detection() {
    accept(verify::claim_separable, 10, &[Some(1e-10)]);
}

#[test]
fn criterion_11_basis_invariance() {
    accept(verify::claim_basis_invariance, 11, &[Some(1e-9)]);
}

#[test]
fn criterion_12_maximizer_validity() {
    accept(verify::claim_maximizer, 12, &[Some(1e-9)]);
}

#[test]
fn criterion_13_round_trip() {
    accept(verify::claim_round_trip, 13, &[Some(1e-12)]);
}

#[test]
fn corpus_sizes_match_the_criteria() {
    let fam = verify::family_corpus(MAX_N, SEED);
    // per n: 4 Werner, n + 1 Dicke, 21 GHZ, 2 trigonometric
    let expected: usize = (2..=MAX_N).map(|n| 4 + (n + 1) + 21 + 2).sum();
    assert_eq!(fam.len(), expected);
    assert_eq!(fam.iter().map(|c| c.psi.n()).max(), Some(12));
    let random = verify::random_corpus(1000, 8, SEED, 1);
    assert_eq!(random.len(), 1000);
    for n in 2..=8 {
        assert!(random.iter().any(|c| c.psi.n() == n));
    }
}
