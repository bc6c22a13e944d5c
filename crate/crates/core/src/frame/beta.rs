use super::enumerate_frame;
use crate::cover::{construct_beta, FormalTopology};
use crate::subset::Subset;
use crate::{Error, Result};

/// β cover: the base is the list of frame elements of `space`, and a family
/// `F` covers `U` iff `U ⊆ sat(⋃F₀)` for some finite `F₀ ⊆ F`. On a finite
/// base `F₀ = F` always works; [`beta_witness`] recovers a minimal `F₀`.
pub fn beta_cover(space: &FormalTopology) -> Result<FormalTopology> {
    let frame = enumerate_frame(space)?;
    construct_beta(space, frame.elements().to_vec())
}

/// A ⊆-minimal subfamily of `family` that β-covers the element `u` of a β
/// space, or `None` if `family` does not cover it. Smallest first, ties
/// broken canonically.
pub fn beta_witness(beta: &FormalTopology, u: usize, family: Subset) -> Option<Subset> {
    if !beta.covers(u, family) {
        return None;
    }
    sorted_subsets(family)
        .into_iter()
        .find(|&sub| beta.covers(u, sub))
}

fn sorted_subsets(u: Subset) -> Vec<Subset> {
    let mut all: Vec<Subset> = u.subsets().collect();
    all.sort();
    all
}

/// Every ⊆-minimal `u₀ ⊆ U` with `S ◁ u₀`, smallest first.
pub fn minimal_subcover(space: &FormalTopology, u: Subset) -> Result<Vec<Subset>> {
    space.config().check_base(u.len())?;
    let base = space.base();
    if !space.covers_set(base, u) {
        return Err(Error::NotACover);
    }
    let mut found: Vec<Subset> = Vec::new();
    for candidate in sorted_subsets(u) {
        if found.iter().any(|f| f.is_subset(candidate)) {
            continue;
        }
        if space.covers_set(base, candidate) {
            found.push(candidate);
        }
    }
    Ok(found)
}

/// Splits `u₀ ⊆ V ∪ W` as `u₀ = v₀ ∪ w₀` with `v₀ ⊆ V`, `w₀ ⊆ W`; shared
/// members go to `v₀`.
pub fn split_subcover(u0: Subset, v: Subset, w: Subset) -> Result<(Subset, Subset)> {
    if !u0.is_subset(v | w) {
        return Err(Error::Precondition("u0 must lie inside V ∪ W".into()));
    }
    let v0 = u0 & v;
    Ok((v0, u0 - v0))
}
