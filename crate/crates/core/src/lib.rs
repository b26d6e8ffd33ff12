//! Finite rings given by structure constants, annihilator computations, and
//! verifiers for Rickart-type and Baer-type properties of group rings and
//! triangular matrix rings.

pub mod additive;
pub mod catalog;
pub mod constructions;
pub mod embedding;
pub mod error;
pub mod group;
pub mod harness;
pub mod ideals;
pub mod involution;
pub mod kernel;
pub mod limits;
pub mod properties;
pub mod recipe;
pub mod ring;
mod scan;
pub mod subset;

pub use additive::AdditiveGroup;
pub use error::{Error, Result};
pub use group::{cyclic_group, group_from_cayley, FiniteGroup};
pub use ideals::Side;
pub use involution::{identity_involution, make_involution, CheckMode, Involution, InvolutionCheck};
pub use ring::{make_ring, FiniteRing, RingElement, RingId, RingSpec, Symbol};
pub use subset::{ElementSubset, SubsetTag};
pub use embedding::IdealEmbedding;
