pub mod error;
pub mod lattice;
pub mod lattice_constants;
pub mod mero;
pub mod motive;
pub mod parabolic;
pub mod poly;
pub mod rat;
pub mod root_datum;
pub mod verify;

pub use error::{Error, Result};
