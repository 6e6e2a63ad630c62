//! Exact computer algebra for modules of polynomial vectors over Z/p^r.
//!
//! The crate computes canonical minimal Gröbner bases under the positional
//! orders TOP and POT ([`groebner`]), turns them into minimal Gröbner p-bases
//! with unique digit-coefficient representations ([`pbasis`]), and uses those to
//! find and parametrize every shortest linear recurrence relation of a finite
//! sequence ([`lrr`]).

pub mod doc;
pub mod error;
pub mod groebner;
pub mod lrr;
pub mod pbasis;
pub mod poly;
pub mod polyvec;
pub mod ring;
pub mod text;

pub use error::{Error, Result};
pub use groebner::{buchberger, GroebnerBasis, LeadingData, PlmReport};
pub use lrr::{LrrSolution, Sequence};
pub use pbasis::{OrderDiffs, PBasis};
pub use poly::Poly;
pub use polyvec::{Monomial, MonomialOrder, PolyVec};
pub use ring::{RingElem, RingParams};
