pub mod error;
pub mod fporacle;
pub mod groebner;
pub mod jets;
pub mod lctlab;
pub mod polyring;

pub use error::{Error, Result};
pub use groebner::{Budget, GroebnerBasis, MonomialOrder, OrderKind};
pub use jets::Ideal;
pub use polyring::{JetVariable, Monomial, Polynomial, Rational};
