//! Exact computations with finite modules over finite rings: pp-formulas,
//! plain, RD and pure embeddings, pushouts, independent squares and
//! relative injectivity, checked exhaustively on bounded universes.

pub mod cli;
pub mod error;
pub mod exactlin;
pub mod hom;
pub mod injectivity;
pub mod limits;
pub mod module;
pub mod pp;
pub mod pushout;
pub mod ring;
pub mod serial;
pub mod suite;

pub use error::{Error, Result};
pub use hom::{Hom, HomGroup};
pub use limits::Limits;
pub use module::{Module, Submodule};
pub use ring::{Ring, RingElement};
pub use pp::{Mode, PpFormula};
