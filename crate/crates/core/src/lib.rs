//! Exact, brute-force workbench for finite formal topologies.
//!
//! A formal topology is a base set together with a covering relation
//! `a ◁ U` between elements and subsets. Everything here is finite: bases
//! are small (16 elements by default), subsets are bitmasks, and every law is
//! decided by exhaustive enumeration.
//!
//! The crate is organized bottom-up:
//!
//! * [`order`]: finite posets, down-sets, lattice and Heyting detection.
//! * [`cover`]: formal topologies, the covering calculus and the space
//!   constructors (MacNeille cover, double negation, point sets, closed
//!   subspaces, Booleanization, top adjunction, inductive generation).
//! * [`frame`]: the frame of saturated subsets, logical laws, the β cover and
//!   finite-subcover search.
//! * [`maps`]: morphisms, formal points, positivity and isomorphism search.
//! * [`workbench`]: the document format, analysis reports and DOT output used
//!   by the `ftw` binary.
//!
//! Inner loops over subsets, frame elements and candidate maps run on rayon
//! when the `parallel` feature is enabled (the default). Results never depend
//! on the schedule: every search returns the canonically least witness.

pub mod config;
pub mod corpus;
pub mod cover;
pub mod error;
mod exec;
pub mod frame;
pub mod maps;
pub mod order;
pub mod subset;
pub mod workbench;

pub use config::Config;
pub use cover::{CoverAxioms, FormalTopology, PointSetSpace, SpaceKind};
pub use error::{Error, Result};
pub use frame::{Frame, LawCheck, LawReport};
pub use maps::{FormalPoint, Morphism};
pub use order::{ElementId, LatticeInfo, Poset};
pub use subset::Subset;
