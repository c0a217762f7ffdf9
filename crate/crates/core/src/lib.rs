//! Exact computation in two-parameter quantum groups and Kashiwara algebras.

pub mod algebra;
pub mod canonical;
pub mod category_o;
pub mod dsl;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod pairing;
pub mod projector;
pub mod report;
pub mod root_data;
pub mod scalar;
pub mod verify;

pub use algebra::{Element, Engine, Letter, Mutation, NormalMonomial, Parent, Side, TensorElement, Toral};
pub use canonical::{TruncatedElement, TruncatedTensor};
pub use category_o::{DirectSum, ModuleVector, SumVector, VermaModule};
pub use hopf::{AntipodeDirection, Coproduct};
pub use pairing::{GramData, Strategy};
pub use report::{Entry, Report};
pub use verify::{run_suite, run_suites, Suite, SuiteConfig};
pub use dsl::{parse_element, parse_scalar};
pub use error::{Error, Result};
pub use root_data::{CartanType, Weight};
pub use scalar::{LaurentPoly, Scalar};
