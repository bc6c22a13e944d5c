//! The frame `Sat(S)` of saturated subsets and the laws decided on it.

mod beta;
mod laws;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::cover::FormalTopology;
use crate::exec;
use crate::order::find_order_isomorphism;
use crate::subset::Subset;
use crate::{Error, Result};

pub use beta::{beta_cover, beta_witness, minimal_subcover, split_subcover};
pub use laws::{
    is_boolean, is_de_morgan, is_nontrivial, is_strongly_de_morgan, LawCheck, LawReport,
};

/// An explicitly enumerated frame of saturated subsets.
///
/// Elements are kept in canonical subset order, so the bottom `sat(∅)` comes
/// first and the top (the whole base) last. Operations return subsets of the
/// base; `index_of` maps them back to positions.
#[derive(Clone)]
pub struct Frame {
    space: FormalTopology,
    elements: Vec<Subset>,
    index: HashMap<Subset, usize>,
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Frame").field("elements", &self.elements).finish()
    }
}

/// A frame law that failed, with the frame elements involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameLawViolation {
    pub law: &'static str,
    pub elements: Vec<Subset>,
}

impl fmt::Display for FrameLawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.elements)
    }
}

/// Index tables for the frame operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameTables {
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub arrow: Vec<Vec<usize>>,
    pub pseudo: Vec<usize>,
}

/// Enumerates `Sat(S)` as the closure of `{sat(∅)}` under joins with the
/// saturated singletons. Refuses frames above the configured bound.
pub fn enumerate_frame(space: &FormalTopology) -> Result<Frame> {
    let cap = space.config().max_frame;
    let mut seen: BTreeSet<Subset> = BTreeSet::new();
    let mut queue = vec![space.saturate(Subset::EMPTY)];
    seen.insert(queue[0]);
    while let Some(w) = queue.pop() {
        for a in space.base() - w {
            let next = space.saturate(w.with(a));
            if seen.insert(next) {
                if seen.len() > cap {
                    return Err(Error::FrameTooLarge { cap });
                }
                queue.push(next);
            }
        }
    }
    Ok(Frame::from_elements(space, seen.into_iter().collect()))
}

/// Enumerates `Sat(S)` as `{sat(U) : U ⊆ S}` over every subset.
pub fn enumerate_frame_exhaustive(space: &FormalTopology) -> Result<Frame> {
    let table = space.saturation_table()?;
    let elements: BTreeSet<Subset> = table.into_iter().collect();
    if elements.len() > space.config().max_frame {
        return Err(Error::FrameTooLarge {
            cap: space.config().max_frame,
        });
    }
    Ok(Frame::from_elements(space, elements.into_iter().collect()))
}

impl Frame {
    fn from_elements(space: &FormalTopology, elements: Vec<Subset>) -> Self {
        let index = elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Frame {
            space: space.clone(),
            elements,
            index,
        }
    }

    pub fn space(&self) -> &FormalTopology {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Subset] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> Subset {
        self.elements[i]
    }

    pub fn index_of(&self, u: Subset) -> Option<usize> {
        self.index.get(&u).copied()
    }

    pub fn bottom(&self) -> Subset {
        self.space.saturate(Subset::EMPTY)
    }

    pub fn top(&self) -> Subset {
        self.space.base()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elements[i].is_subset(self.elements[j])
    }

    pub fn meet(&self, u: Subset, v: Subset) -> Subset {
        u & v
    }

    pub fn join(&self, u: Subset, v: Subset) -> Subset {
        self.space.saturate(u | v)
    }

    /// Join of an arbitrary family.
    pub fn join_all<I: IntoIterator<Item = Subset>>(&self, family: I) -> Subset {
        let union = family.into_iter().fold(Subset::EMPTY, |acc, u| acc | u);
        self.space.saturate(union)
    }

    pub fn arrow(&self, u: Subset, v: Subset) -> Subset {
        self.space.implication(u, v)
    }

    pub fn pseudo(&self, u: Subset) -> Subset {
        self.space.pseudocomplement(u)
    }

    /// Operation tables by element index; `None` if some result falls outside
    /// the enumerated elements (only possible for invalid covers).
    pub fn tables(&self) -> Option<FrameTables> {
        let n = self.len();
        let lookup = |u: Subset| self.index_of(u);
        let table = |op: &dyn Fn(Subset, Subset) -> Subset| -> Option<Vec<Vec<usize>>> {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| lookup(op(self.elements[i], self.elements[j])))
                        .collect()
                })
                .collect()
        };
        Some(FrameTables {
            meet: table(&|u, v| self.meet(u, v))?,
            join: table(&|u, v| self.join(u, v))?,
            arrow: table(&|u, v| self.arrow(u, v))?,
            pseudo: self
                .elements
                .iter()
                .map(|&u| lookup(self.pseudo(u)))
                .collect::<Option<_>>()?,
        })
    }

    /// Covering pairs of the inclusion order, by element index.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        crate::order::hasse_edges(self.len(), |i, j| self.leq(i, j))
    }

    /// Order isomorphism onto another frame, `map[i]` = image of element `i`.
    pub fn isomorphism_to(&self, other: &Frame) -> Option<Vec<usize>> {
        find_order_isomorphism(
            self.len(),
            |i, j| self.leq(i, j),
            other.len(),
            |i, j| other.leq(i, j),
        )
    }

    pub fn is_isomorphic(&self, other: &Frame) -> bool {
        self.isomorphism_to(other).is_some()
    }

    /// Exhaustive check of the frame laws: saturation of every element,
    /// closure under the operations, lattice identities, distributivity of
    /// meet over joins, and the Heyting adjunction.
    ///
    /// Distributivity over arbitrary families is checked in its binary and
    /// empty forms, which on a finite lattice covers every family.
    pub fn verify_laws(&self) -> Result<(), FrameLawViolation> {
        let n = self.len();
        let e = &self.elements;
        let fail = |law: &'static str, elements: Vec<Subset>| FrameLawViolation { law, elements };
        for &u in e {
            if self.space.saturate(u) != u {
                return Err(fail("saturated", vec![u]));
            }
        }
        if self.index_of(self.bottom()).is_none() || self.index_of(self.top()).is_none() {
            return Err(fail("bounds", vec![self.bottom(), self.top()]));
        }
        let par = self.space.config().parallel;
        let found = exec::find_first(par, n as u64, |i| {
            let u = e[i as usize];
            if self.join(u, u) != u || self.meet(u, u) != u {
                return Some(fail("idempotence", vec![u]));
            }
            if self.meet(u, self.bottom()) != self.bottom() {
                return Some(fail("distributivity", vec![u]));
            }
            for &v in e {
                let (m, j, a) = (self.meet(u, v), self.join(u, v), self.arrow(u, v));
                if self.index_of(m).is_none() || self.index_of(j).is_none() {
                    return Some(fail("closure", vec![u, v]));
                }
                if self.index_of(a).is_none() {
                    return Some(fail("arrow closure", vec![u, v]));
                }
                if m != self.meet(v, u) || j != self.join(v, u) {
                    return Some(fail("commutativity", vec![u, v]));
                }
                if self.meet(u, j) != u || self.join(u, m) != u {
                    return Some(fail("absorption", vec![u, v]));
                }
                for &w in e {
                    if self.join(j, w) != self.join(u, self.join(v, w))
                        || self.meet(m, w) != self.meet(u, self.meet(v, w))
                    {
                        return Some(fail("associativity", vec![u, v, w]));
                    }
                    let lhs = self.meet(u, self.join(v, w));
                    let rhs = self.join(self.meet(u, v), self.meet(u, w));
                    if lhs != rhs {
                        return Some(fail("distributivity", vec![u, v, w]));
                    }
                    // w ≤ u → v  ⇔  w ∧ u ≤ v
                    if w.is_subset(a) != self.meet(w, u).is_subset(v) {
                        return Some(fail("adjunction", vec![u, v, w]));
                    }
                }
            }
            None
        });
        match found {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }
}
