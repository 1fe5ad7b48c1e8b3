//! Exact Laurent-polynomial engine for the Penrose transform on the twistor
//! space of the 2-Dirac operator in two vector variables on C⁶.
//!
//! Cochain representatives are finite Laurent polynomials on the chart W₀;
//! the transform is exact residue extraction after the correspondence
//! substitution, and monogenicity is checked against an explicit first-order
//! operator built from the grading of g₋.

#![allow(clippy::needless_range_loop)]

pub mod charts;
pub mod cochain;
pub mod dirac;
pub mod exactalg;
pub mod interface;
pub mod reference;
pub mod repn;
pub mod transform;
pub mod vars;

pub use cochain::{CochainSection, RootLabel, Weight};
pub use exactalg::{LaurentPoly, Rational};
pub use repn::{IrrepLabel, ModuleDescriptor};
pub use transform::{penrose_transform, SpinorField};
