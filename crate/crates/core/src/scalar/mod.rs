//! The coefficient field ℚ(r, s).

mod laurent;
pub mod poly;
mod value;

pub use laurent::LaurentPoly;
pub use value::Scalar;
