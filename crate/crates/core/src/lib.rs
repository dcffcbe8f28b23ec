//! Finite categories as explicit data, with functors, natural
//! transformations, limits, adjunctions and related constructions.
//!
//! Composition is written `comp(g, f) = g ∘ f` throughout. Every structure
//! has a validator that checks its laws by exhaustion; searches take a cap on
//! the number of candidates they may examine.

pub mod adjunction;
pub mod category;
pub mod corpus;
pub mod duality;
pub mod encoding;
pub mod error;
pub mod finset;
pub mod functorcat;
pub mod grothendieck;
pub mod json;
pub mod report;
pub mod universal;

pub use adjunction::{validate_adjunction, Adjunction, AdjunctionForm, HomIso, UnitCounit, UniversalFamily};
pub use category::{structural_eq, FinCategory, MorId, ObId};
pub use error::{Budget, Error, Result, DEFAULT_CAP};
pub use finset::{FinSetMor, FinSetObj};
pub use functorcat::{Functor, NatTrans};
pub use grothendieck::CatValuedFunctor;
pub use report::{ValidationReport, Violation};
