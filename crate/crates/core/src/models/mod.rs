//! Concrete exact algebras and linear maps realizing the formal symbols.

pub mod catalog;
pub mod element;
pub mod env;
pub mod maps;
pub mod matrix;
pub mod model_file;
pub mod poly;
pub mod validate;

pub use catalog::{builtin_model_catalog, known_bad_model, CatalogEntry};
pub use element::{ConcreteRing, Element, Sampler};
pub use env::{MapEnv, RoleAssignment};
pub use maps::ConcreteMap;
pub use matrix::RationalMatrix;
pub use model_file::ModelFile;
pub use poly::TruncPoly;
pub use validate::{validate_commutation, validate_spec, Trials};
