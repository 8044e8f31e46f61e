#![no_std]

extern crate alloc;

pub mod error;
pub mod ladder;
pub mod matrix;
pub mod models;
pub mod oracle;
pub mod potential;
pub mod scalar;
pub mod solver;
pub mod spectrum;

pub use error::{Condition, Error, Result};
pub use scalar::{ratio, Rational, Scalar, Tolerance};
pub use spectrum::{EnergyUnit, Label, Level, Model, ModelSpectrum};
