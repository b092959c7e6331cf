//! Zero-temperature thermodynamics of a quantum oscillator coupled to a
//! heat bath with a single relaxation time.
//!
//! The crate computes the mean energy ⟨H_O⟩, the ground-state energy E₀ and
//! the free energy F_O of coupling the oscillator to the bath, both from
//! exact closed forms ([`closed_form`]) and from independent frequency
//! integrals ([`quadrature`]), and audits the inequality F_O > ⟨H_O⟩ over
//! parameter grids ([`verify`]).
//!
//! ```
//! use qbath::{closed_form, PoleDecomposition};
//!
//! // ħ = m = ω₀ = 1, Ω = 5ω₀, γ = ω₀
//! let poles = PoleDecomposition::reduced(5.0, 1.0).unwrap();
//! let energy = closed_form::mean_energy(&poles, 1.0).unwrap();
//! let work = closed_form::free_energy_t0(&poles, 1.0);
//! assert!(work > energy && energy > closed_form::ground_energy(&poles, 1.0));
//! ```

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod closed_form;
pub mod error;
pub mod model;
pub mod quadrature;
pub mod verify;

pub use closed_form::{DampingPhase, Method, ThermoReport};
pub use error::{Error, Result};
pub use model::{
    to_physical_parameters, to_pole_parameters, DampingRegime, OscillatorSpec, PoleDecomposition, Susceptibility,
};
pub use quadrature::{BathTemperature, QuadratureConfig};
