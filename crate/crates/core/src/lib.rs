pub mod certify;
pub mod charpoly;
pub mod cli;
pub mod error;
pub mod hankel;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod realroots;
pub mod resultant;
mod text;
pub mod unipoly;

pub use error::{Error, Result};
pub use poly::{HomogPoly, Monomial, MonomialBasis};
pub use rational::Rational;
pub use unipoly::UniPoly;
