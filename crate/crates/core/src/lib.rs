//! Castelnuovo–Mumford regularity and saturation degrees of powers of monomial ideals in
//! quotients of polynomial rings.

pub mod degree;
pub mod constructions;
pub mod error;
pub mod functions;
pub mod graded;
pub mod io;
pub mod linalg;
pub mod monomial;
pub mod resolution;

pub use degree::Degree;
pub use error::{Error, Result};
pub use graded::Subquotient;
pub use monomial::{Monomial, MonomialIdeal, RingSpec};
pub use resolution::{betti, betti_table, regularity, BettiCache, BettiTable, Engine};
pub use functions::{DefectReport, Evaluator, FunctionKind, ModuleKind, PresentedIdeal};
pub use constructions::{verify, FamilySpec, Prediction, VerifyReport};
pub use io::{parse_spec, serialize_spec, ResultTable};
