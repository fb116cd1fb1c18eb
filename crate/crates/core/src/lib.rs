//! Hecke algebra characters, cylindric broken rim hooks and the quantum cohomology of
//! Grassmannians through the free-fermion six-vertex model.

pub mod bethe;
pub mod coeff;
pub mod combinatorics;
pub mod cylindric;
pub mod error;
pub mod hecke;
pub mod qcoh;
pub mod report;
pub mod six_vertex;
pub mod verify;

pub use coeff::{QSeries, Ring, TPoly};
pub use combinatorics::{part, Partition};
pub use error::{Error, Result};
pub use report::{Check, Report};
