//! Brute-force oracles. They only read the cover relation through a full
//! saturation table and recompute everything else from the definitions.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ftw_core::cover::{Axiom, AxiomViolation};
use ftw_core::{FormalTopology, Poset, Subset};

/// `sat(U)` for every `U`, indexed by bitmask.
pub struct Table {
    pub n: usize,
    pub sat: Vec<Subset>,
}

impl Table {
    pub fn of(space: &FormalTopology) -> Self {
        let n = space.len();
        let sat = (0..1u64 << n)
            .map(|bits| space.saturate(Subset::from_bits(bits)))
            .collect();
        Table { n, sat }
    }

    pub fn from_vec(n: usize, sat: Vec<Subset>) -> Self {
        assert_eq!(sat.len(), 1 << n);
        Table { n, sat }
    }

    pub fn all(&self) -> impl Iterator<Item = Subset> {
        (0..1u64 << self.n).map(Subset::from_bits)
    }

    pub fn base(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn covers(&self, a: usize, u: Subset) -> bool {
        self.sat[u.bits() as usize].contains(a)
    }

    pub fn sat(&self, u: Subset) -> Subset {
        self.sat[u.bits() as usize]
    }

    /// `U ◁ V`: every member of `U` is covered by `V`.
    pub fn covers_all(&self, u: Subset, v: Subset) -> bool {
        u.iter().all(|x| self.covers(x, v))
    }

    /// `U ↓ V = {c : c ◁ {u}, c ◁ {v} for some u ∈ U, v ∈ V}`.
    pub fn wedge(&self, u: Subset, v: Subset) -> Subset {
        (0..self.n)
            .filter(|&c| {
                u.iter().any(|x| self.covers(c, Subset::singleton(x)))
                    && v.iter().any(|y| self.covers(c, Subset::singleton(y)))
            })
            .collect()
    }

    /// `U → V = {a : {a} ↓ U ◁ V}`.
    pub fn implication(&self, u: Subset, v: Subset) -> Subset {
        (0..self.n)
            .filter(|&a| self.covers_all(self.wedge(Subset::singleton(a), u), v))
            .collect()
    }

    pub fn frame(&self) -> BTreeSet<Subset> {
        self.sat.iter().copied().collect()
    }
}

/// First failing instance of the three axioms by direct quantification, or
/// `None` when all hold. Suitable for bases up to 5 or so.
pub fn axiom_violation(t: &Table) -> Option<(Axiom, usize, Subset, Option<Subset>)> {
    for u in t.all() {
        for a in u {
            if !t.covers(a, u) {
                return Some((Axiom::Reflexivity, a, u, None));
            }
        }
    }
    for u in t.all() {
        for v in t.all() {
            if t.covers_all(u, v) {
                for a in 0..t.n {
                    if t.covers(a, u) && !t.covers(a, v) {
                        return Some((Axiom::Transitivity, a, u, Some(v)));
                    }
                }
            }
        }
    }
    for u in t.all() {
        for v in t.all() {
            let w = t.wedge(u, v);
            for a in 0..t.n {
                if t.covers(a, u) && t.covers(a, v) && !t.covers(a, w) {
                    return Some((Axiom::Stability, a, u, Some(v)));
                }
            }
        }
    }
    None
}

/// Whether a reported violation really is a failing instance of its axiom.
pub fn is_genuine(t: &Table, v: &AxiomViolation) -> bool {
    let a = v.element;
    match (v.axiom, v.v) {
        (Axiom::Reflexivity, None) => v.u.contains(a) && !t.covers(a, v.u),
        (Axiom::Transitivity, Some(w)) => {
            t.covers(a, v.u) && t.covers_all(v.u, w) && !t.covers(a, w)
        }
        (Axiom::Stability, Some(w)) => {
            t.covers(a, v.u) && t.covers(a, w) && !t.covers(a, t.wedge(v.u, w))
        }
        _ => false,
    }
}

/// Formal points straight from the definition: inhabited, filtering through
/// a common refinement, and splitting every cover of a member.
pub fn points(t: &Table) -> Vec<Subset> {
    let mut found: Vec<Subset> = t
        .all()
        .filter(|&alpha| {
            if alpha.is_empty() {
                return false;
            }
            let filtering = alpha.iter().all(|a| {
                alpha.iter().all(|b| {
                    alpha.iter().any(|c| {
                        t.covers(c, Subset::singleton(a)) && t.covers(c, Subset::singleton(b))
                    })
                })
            });
            let splitting = alpha
                .iter()
                .all(|a| t.all().all(|u| !t.covers(a, u) || u.intersects(alpha)));
            filtering && splitting
        })
        .collect();
    found.sort();
    found
}

/// Greatest lower bound of `x` by scanning every element.
pub fn glb(p: &Poset, x: Subset) -> Option<usize> {
    let lower: Vec<usize> = (0..p.len())
        .filter(|&l| x.iter().all(|e| p.le(l, e)))
        .collect();
    lower
        .iter()
        .copied()
        .find(|&g| lower.iter().all(|&l| p.le(l, g)))
}

pub fn lub(p: &Poset, x: Subset) -> Option<usize> {
    let upper: Vec<usize> = (0..p.len())
        .filter(|&u| x.iter().all(|e| p.le(e, u)))
        .collect();
    upper
        .iter()
        .copied()
        .find(|&l| upper.iter().all(|&u| p.le(l, u)))
}

/// Every partial order on `n ≤ 4` labelled elements, each exactly once.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| a != b).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let le = |a: usize, b: usize| a == b || chosen.contains(&(a, b));
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| !(le(a, b) && le(b, c)) || le(a, c)))
        });
        let antisymmetric = chosen.iter().all(|&(a, b)| !chosen.contains(&(b, a)));
        if transitive && antisymmetric {
            out.push(Poset::from_pairs(labels.clone(), &chosen).unwrap());
        }
    }
    out
}
