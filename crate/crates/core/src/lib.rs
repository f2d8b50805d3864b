//! Exact computations on shifted shapes.
//!
//! * [`partitions`]: partitions, strict partitions, z_π, parity.
//! * [`bars`]: bar removal, bar tableaux, and the shifted rank.
//! * [`spin`]: negative characters of the double cover of Sₙ.
//! * [`qfunctions`]: Schur Q-functions in the power-sum basis.

pub mod bars;
pub mod error;
pub mod partitions;
pub mod qfunctions;
pub mod spin;

pub use error::{Error, Result};
pub use partitions::{Partition, StrictPartition};
