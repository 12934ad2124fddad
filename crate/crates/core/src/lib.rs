//! Exact computation with affine Poisson algebras and Poisson orders.

pub mod error;
pub mod field;
pub mod ideals;
pub mod order;
pub mod envelope;
pub mod semiclassical;
pub mod session;
pub mod cli;
pub mod poisson;
pub mod poly;

pub use error::{Error, Result};
pub use field::{Coeff, CoefficientField};
pub use poly::{Ideal, Matrix, Monomial, MonomialOrder, Polynomial, Ring, Submodule};
pub use poisson::{LieAlgebra, PoissonAlgebra};
