//! Space constructors.

use std::sync::Arc;

use dashmap::DashMap;

use super::{Backend, CoverAxioms, FormalTopology, PointSetSpace};
use crate::config::Config;
use crate::order::Poset;
use crate::subset::Subset;
use crate::{Error, Result};

/// Least `V ⊇ U` closed under the ≤-rule and the localized axiom rule:
/// `a ≤ b`, `i ∈ I(b)` and `↓a ∩ ↓C(b, i) ⊆ V` put `a` into `V`.
///
/// Elements are revisited round-robin until a full pass adds nothing.
pub(super) fn inductive_closure(poset: &Poset, regions: &[Vec<Subset>], u: Subset) -> Subset {
    let n = poset.len();
    let mut v = poset.down_closure(u);
    loop {
        let mut changed = false;
        for a in 0..n {
            if v.contains(a) {
                continue;
            }
            let below = poset.down_set(a);
            let fires = poset
                .up_set(a)
                .iter()
                .any(|b| regions[b].iter().any(|&r| (below & r).is_subset(v)));
            if fires {
                v = v | below;
                changed = true;
            }
        }
        if !changed {
            return v;
        }
    }
}

/// Cover inductively generated by a poset and axiom families.
pub fn generate_from_axioms(poset: &Poset, axioms: CoverAxioms) -> Result<FormalTopology> {
    let n = poset.len();
    let mut axioms = axioms;
    if axioms.covers.len() > n {
        return Err(Error::Precondition("axioms mention unknown elements".into()));
    }
    axioms.covers.resize(n, Vec::new());
    let full = poset.full();
    if axioms.covers.iter().flatten().any(|c| !c.is_subset(full)) {
        return Err(Error::Precondition("axiom subset outside the base".into()));
    }
    let regions = axioms
        .covers
        .iter()
        .map(|cs| cs.iter().map(|&c| poset.down_closure(c)).collect())
        .collect();
    FormalTopology::build(
        poset.labels().to_vec(),
        Some(poset.clone()),
        Backend::Axioms {
            regions: Arc::new(regions),
            axioms,
            memo: Arc::new(DashMap::new()),
        },
        None,
        Config::default(),
    )
}

/// Dedekind–MacNeille cover: `x ◁ U` iff `x ≤ y` for every upper bound `y`
/// of `U`.
///
/// The relation is not a covering on every poset, so the axiom verdict is
/// computed here (when the carrier is within the default size cap) and
/// attached instead of being enforced.
pub fn dm_cover(poset: &Poset) -> FormalTopology {
    let space = FormalTopology::build(
        poset.labels().to_vec(),
        Some(poset.clone()),
        Backend::MacNeille,
        None,
        Config::default(),
    )
    .expect("posets are within the representable size");
    with_verdict(space)
}

fn with_verdict(space: FormalTopology) -> FormalTopology {
    let verdict = match space.validate_axioms() {
        Ok(()) => Some(Ok(())),
        Err(Error::InvalidCover(v)) => Some(Err(v)),
        Err(_) => None,
    };
    let mut inner = (*space.0).clone();
    inner.verdict = verdict;
    FormalTopology(Arc::new(inner))
}

/// The one-element space with `⊤ ◁ U` iff `¬¬(⊤ ∈ U)`, which classically
/// is `⊤ ∈ U`.
pub fn double_negation_space() -> FormalTopology {
    FormalTopology::build(
        vec!["⊤".to_string()],
        None,
        Backend::DoubleNegation,
        None,
        Config::default(),
    )
    .expect("one element")
}

/// The one-element space with `⊤ ◁ U` iff `⊤ ∈ U`, generated without axioms.
/// Morphisms into it correspond to formal points.
pub fn one_point_space() -> FormalTopology {
    generate_from_axioms(&Poset::antichain(&["⊤"]), CoverAxioms::empty(1)).expect("one element")
}

/// `a ◁ U` iff `ext(a) ⊆ ⋃ ext(U)`.
///
/// This is a covering whenever the extents form a basis (see
/// [`PointSetSpace::basis_violation`]); otherwise stability can fail, so the
/// axiom verdict is attached as for [`dm_cover`].
pub fn point_set_cover(space: &PointSetSpace) -> FormalTopology {
    let cover = FormalTopology::build(
        space.elements.clone(),
        None,
        Backend::PointSet(space.clone()),
        None,
        Config::default(),
    )
    .expect("point-set spaces are size checked");
    if space.basis_violation().is_none() {
        let mut inner = (*cover.0).clone();
        inner.verdict = Some(Ok(()));
        return FormalTopology(Arc::new(inner));
    }
    with_verdict(cover)
}

/// Closed subspace `S^V` with `a ◁^V U` iff `a ◁ U ∪ V`.
pub fn closed_subspace(space: &FormalTopology, v: Subset) -> Result<FormalTopology> {
    if !v.is_subset(space.base()) {
        return Err(Error::Precondition("closed subspace needs V inside the base".into()));
    }
    FormalTopology::build(
        space.labels().to_vec(),
        None,
        Backend::Closed {
            parent: space.clone(),
            v,
        },
        None,
        space.config(),
    )
}

/// Booleanization `S**`: `a ◁** U` iff `{a}** ◁ U**`, pseudocomplements
/// taken in `S`.
pub fn booleanization(space: &FormalTopology) -> FormalTopology {
    let regular = (0..space.len())
        .map(|a| {
            space.pseudocomplement(space.pseudocomplement(Subset::singleton(a)))
        })
        .collect();
    FormalTopology::build(
        space.labels().to_vec(),
        None,
        Backend::Booleanized {
            parent: space.clone(),
            regular: Arc::new(regular),
        },
        None,
        space.config(),
    )
    .expect("same base as the parent")
}

/// Enlarges the base with a fresh top element `1`.
///
/// With `τ(U)` replacing the new element by the whole old base, old elements
/// keep their covers (`x ◁' U` iff `x ◁ τ(U)`) and the new element is covered
/// exactly by the `U` with `S ◁ τ(U)`.
pub fn adjoin_top(space: &FormalTopology) -> Result<FormalTopology> {
    if space.len() + 1 > crate::config::MAX_REPRESENTABLE {
        return Err(Error::SizeCap {
            size: space.len() + 1,
            cap: crate::config::MAX_REPRESENTABLE,
        });
    }
    let mut labels = space.labels().to_vec();
    let mut name = "1".to_string();
    if labels.contains(&name) {
        name = "1_S".to_string();
    }
    while labels.contains(&name) {
        name.push('\'');
    }
    labels.push(name);
    let top = space.len();
    FormalTopology::build(
        labels,
        None,
        Backend::AdjoinedTop {
            parent: space.clone(),
        },
        Some(top),
        space.config(),
    )
}

pub(crate) fn beta_space(
    parent: &FormalTopology,
    elements: Vec<Subset>,
) -> Result<FormalTopology> {
    if elements.len() > crate::config::MAX_REPRESENTABLE {
        return Err(Error::SizeCap {
            size: elements.len(),
            cap: crate::config::MAX_REPRESENTABLE,
        });
    }
    let labels = elements.iter().map(|&e| parent.display(e)).collect();
    FormalTopology::build(
        labels,
        None,
        Backend::Beta {
            parent: parent.clone(),
            elements: Arc::new(elements),
        },
        None,
        parent.config(),
    )
}
