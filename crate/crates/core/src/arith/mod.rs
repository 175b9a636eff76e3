//! Exact arithmetic substrate.

mod abelian;
mod cyclo;
mod matrix;
mod rational;

pub use abelian::{quotient_group, AbelianGroup};
pub use cyclo::CycloNumber;
pub use matrix::{smith_normal_form, IntMatrix, SmithForm};
pub use rational::{format_fraction, parse_fraction, rat, Rational, ResidueMod2Z};
