//! Morphisms, formal points, positivity predicates and isomorphism search.

mod iso;
mod morphism;
mod points;

pub use iso::{find_isomorphism, morphisms_from};
pub use morphism::{compose, identity_morphism, morphisms_equal, Morphism, MorphismAxiom,
    MorphismViolation};
pub use points::{
    canonical_positivity, check_positivity, enumerate_points, is_point, FormalPoint,
    PositivityPredicate, PositivityVerdict,
};
