//! Restricted enveloping algebras u(L) of finite-dimensional restricted Lie algebras over
//! prime fields, and exact checks of their Lie structure.

pub mod cli;
pub mod env;
pub mod error;
pub mod gfp;
pub mod lieprops;
pub mod rla;
pub mod theorems;
pub mod units;

pub use error::{Error, Result};
