//! Geometric measure of entanglement between one qubit and the rest of a pure
//! state.
//!
//! Splitting `|ψ⟩ = a|χ1⟩|φ1⟩ + b|χ2⟩|φ2⟩` around a qubit gives the measure in
//! closed form from `a`, `b` and `|⟨φ1|φ2⟩|` ([`measure`]). The crate also
//! builds Werner-like, Dicke, GHZ-like and trigonometric states
//! ([`families`]), carries two independent numerical checks of the closed
//! form ([`oracle`]), and a claim-by-claim verification suite ([`verify`]).
//!
//! Qubit 1 is the most significant bit of a basis index throughout.

pub mod corpus;
pub mod decompose;
pub mod error;
pub mod estimator;
pub mod families;
pub mod grammar;
pub mod measure;
pub mod oracle;
pub mod statevector;
pub mod verify;

pub use decompose::{reassemble, split_qubit, standard_bases, QubitBasis, QubitSplit};
pub use error::{Error, Result};
pub use estimator::{EntanglementEstimator, EstimatorRegistry};
pub use families::{predicted_entanglement, FamilySpec};
pub use grammar::{parse_family, FamilyParser, FamilyRegistry};
pub use measure::{
    concurrence_two_qubit, entanglement_closed_form, entanglement_from_concurrence,
    entanglement_profile, geometric_entanglement, EntanglementProfile, EntanglementResult,
};
pub use oracle::{eigen_oracle, grid_oracle, reduced_density, GridSearchReport, ReducedDensity};
pub use statevector::{embed_qubit, inner_product, tensor, Amplitude, BasisLabel, StateVector};
