pub mod audit;
pub mod code;
pub mod ensembles;
pub mod error;
pub mod field;
pub mod io;
pub mod linalg;
pub mod local;
pub mod tape;

pub use error::{Error, Result};
/// Exact fractions used for rates and radii.
pub use num_rational::Ratio;
