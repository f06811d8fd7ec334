pub mod assembly;
pub mod basis;
pub mod error;
pub mod limiter;
pub mod mesh;
pub mod projection;
pub mod quadrature;
pub mod sparse;

pub use error::{DgError, Result};
