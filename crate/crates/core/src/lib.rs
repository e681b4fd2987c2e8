//! Odd holes, perfection and multiplicities of graphs read off the square of
//! the cover ideal.
//!
//! The algebra is generic over the unsigned exponent type; the aliases below
//! fix the common widths.

pub mod algebra;
pub mod covers;
pub mod detection;
pub mod error;
pub mod graph;
pub mod scalar;

pub use algebra::{IrreducibleComponent, Monomial, MonomialIdeal, MonomialPrime, StandardPair};
pub use covers::{CoverVector, IrreducibleCoverCertificate, TwoCoverSplit};
pub use detection::{AdegReport, Analysis, DepthBounds, OddCycleReport, PerfectionVerdict, Witness};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use scalar::Exponent;

pub type Monomial8 = Monomial<u8>;
pub type Monomial16 = Monomial<u16>;
pub type Monomial32 = Monomial<u32>;
pub type Ideal8 = MonomialIdeal<u8>;
pub type Ideal16 = MonomialIdeal<u16>;
pub type Ideal32 = MonomialIdeal<u32>;
pub type Component8 = IrreducibleComponent<u8>;
pub type Component32 = IrreducibleComponent<u32>;
