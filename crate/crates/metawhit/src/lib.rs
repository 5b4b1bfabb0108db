//! Metaplectic Whittaker functions on covers of `GL(r+1)`: crystal and
//! Gelfand-Tsetlin descriptions, Lusztig transition maps, Gindikin-Karpelevich
//! identities and a finite-field simulation of the cell integrals.

pub mod algebra;
pub mod crystal;
pub mod error;
pub mod gt;
pub mod lusztig;
pub mod padic_sim;
pub mod roots;

pub use error::{Error, Result};
