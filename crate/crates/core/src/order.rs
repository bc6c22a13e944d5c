//! Finite posets, down-sets and lattice structure.

use std::fmt;

use crate::config::MAX_REPRESENTABLE;
use crate::subset::Subset;
use crate::{Error, Result};

/// Index of an element within one carrier's canonical ordering.
pub type ElementId = usize;

/// First violated partial-order law, with the offending elements by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetViolation {
    DuplicateLabel(String),
    Reflexivity(String),
    Antisymmetry(String, String),
    Transitivity(String, String, String),
}

impl fmt::Display for PosetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetViolation::DuplicateLabel(a) => write!(f, "duplicate element name {a:?}"),
            PosetViolation::Reflexivity(a) => write!(f, "reflexivity fails at {a}"),
            PosetViolation::Antisymmetry(a, b) => {
                write!(f, "antisymmetry fails: {a} <= {b} and {b} <= {a}")
            }
            PosetViolation::Transitivity(a, b, c) => {
                write!(f, "transitivity fails: {a} <= {b} <= {c} but not {a} <= {c}")
            }
        }
    }
}

/// A finite partial order stored as a full relation matrix.
///
/// Row `down[y]` holds `{x : x <= y}` and `up[x]` holds `{y : x <= y}`, so
/// every comparison is a single bit test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    down: Vec<Subset>,
    up: Vec<Subset>,
}

/// Checks that `up[x] = {y : x <= y}` describes a partial order.
///
/// Reports the first violation in the order reflexivity, antisymmetry,
/// transitivity, scanning elements by index.
pub fn validate_relation(labels: &[String], up: &[Subset]) -> Result<(), PosetViolation> {
    for (i, a) in labels.iter().enumerate() {
        if labels[..i].contains(a) {
            return Err(PosetViolation::DuplicateLabel(a.clone()));
        }
    }
    let n = labels.len();
    let name = |i: usize| labels[i].clone();
    for a in 0..n {
        if !up[a].contains(a) {
            return Err(PosetViolation::Reflexivity(name(a)));
        }
    }
    for a in 0..n {
        for b in up[a].iter() {
            if b != a && up[b].contains(a) {
                return Err(PosetViolation::Antisymmetry(name(a), name(b)));
            }
        }
    }
    for a in 0..n {
        for b in up[a].iter() {
            for c in up[b].iter() {
                if !up[a].contains(c) {
                    return Err(PosetViolation::Transitivity(name(a), name(b), name(c)));
                }
            }
        }
    }
    Ok(())
}

impl Poset {
    /// Builds a poset from an explicit relation, `up[x] = {y : x <= y}`.
    pub fn from_relation(labels: Vec<String>, up: Vec<Subset>) -> Result<Self> {
        if labels.len() > MAX_REPRESENTABLE {
            return Err(Error::SizeCap {
                size: labels.len(),
                cap: MAX_REPRESENTABLE,
            });
        }
        if up.len() != labels.len() {
            return Err(Error::Precondition(
                "relation rows must match the number of elements".into(),
            ));
        }
        let full = Subset::full(labels.len());
        if up.iter().any(|row| !row.is_subset(full)) {
            return Err(Error::Precondition("relation mentions unknown elements".into()));
        }
        validate_relation(&labels, &up).map_err(Error::InvalidPoset)?;
        let n = labels.len();
        let down = (0..n)
            .map(|y| (0..n).filter(|&x| up[x].contains(y)).collect())
            .collect();
        Ok(Poset { labels, down, up })
    }

    /// Builds a poset from generating pairs `(a, b)` meaning `a <= b`; the
    /// reflexive-transitive closure is taken before antisymmetry is checked.
    pub fn from_pairs(labels: Vec<String>, pairs: &[(ElementId, ElementId)]) -> Result<Self> {
        let n = labels.len();
        if n > MAX_REPRESENTABLE {
            return Err(Error::SizeCap {
                size: n,
                cap: MAX_REPRESENTABLE,
            });
        }
        let mut up: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Precondition("pair mentions unknown elements".into()));
            }
            up[a] = up[a].with(b);
        }
        // Warshall on bitsets
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i] | up[k];
                }
            }
        }
        Poset::from_relation(labels, up)
    }

    pub fn chain<S: ToString>(labels: &[S]) -> Self {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let pairs: Vec<_> = (1..labels.len()).map(|i| (i - 1, i)).collect();
        Poset::from_pairs(labels, &pairs).expect("chains are partial orders")
    }

    pub fn antichain<S: ToString>(labels: &[S]) -> Self {
        let labels = labels.iter().map(|s| s.to_string()).collect();
        Poset::from_pairs(labels, &[]).expect("antichains are partial orders")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn le(&self, a: ElementId, b: ElementId) -> bool {
        self.up[a].contains(b)
    }

    /// `{x : x <= y}`.
    pub fn down_set(&self, y: ElementId) -> Subset {
        self.down[y]
    }

    /// `{x : y <= x}`.
    pub fn up_set(&self, y: ElementId) -> Subset {
        self.up[y]
    }

    /// Downward closure of a subset.
    pub fn down_closure(&self, u: Subset) -> Subset {
        u.iter().fold(Subset::EMPTY, |acc, y| acc | self.down[y])
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Lower bounds common to every member of `x` (all elements when `x` is empty).
    pub fn lower_bounds(&self, x: Subset) -> Subset {
        x.iter().fold(self.full(), |acc, a| acc & self.down[a])
    }

    pub fn upper_bounds(&self, x: Subset) -> Subset {
        x.iter().fold(self.full(), |acc, a| acc & self.up[a])
    }

    /// Greatest lower bound of `x`, when it exists.
    pub fn meet_of(&self, x: Subset) -> Option<ElementId> {
        let lower = self.lower_bounds(x);
        lower.iter().find(|&g| lower.is_subset(self.down[g]))
    }

    /// Least upper bound of `x`, when it exists.
    pub fn join_of(&self, x: Subset) -> Option<ElementId> {
        let upper = self.upper_bounds(x);
        upper.iter().find(|&l| upper.is_subset(self.up[l]))
    }

    pub fn bottom(&self) -> Option<ElementId> {
        (0..self.len()).find(|&a| self.up[a] == self.full())
    }

    pub fn top(&self) -> Option<ElementId> {
        (0..self.len()).find(|&a| self.down[a] == self.full())
    }

    /// Covering pairs `(a, b)` of the Hasse diagram: `a < b` with nothing
    /// strictly between. Sorted by `(a, b)`.
    pub fn hasse_edges(&self) -> Vec<(ElementId, ElementId)> {
        hasse_edges(self.len(), |a, b| self.le(a, b))
    }

    pub fn analyze_lattice(&self) -> LatticeInfo {
        LatticeInfo::of(self)
    }
}

/// Covering pairs of an order given by a comparison function.
pub fn hasse_edges<F: Fn(usize, usize) -> bool>(n: usize, le: F) -> Vec<(usize, usize)> {
    let lt = |a: usize, b: usize| a != b && le(a, b);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// Meet/join tables and Heyting structure of a finite poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeInfo {
    pub has_all_meets: bool,
    pub has_all_joins: bool,
    /// Binary meets, `None` where the two elements have no greatest lower bound.
    pub meet: Vec<Vec<Option<ElementId>>>,
    pub join: Vec<Vec<Option<ElementId>>>,
    pub bottom: Option<ElementId>,
    pub top: Option<ElementId>,
    /// Relative pseudocomplement, present only when every `a -> b` exists.
    pub heyting_arrow: Option<Vec<Vec<ElementId>>>,
}

impl LatticeInfo {
    fn of(p: &Poset) -> Self {
        let n = p.len();
        let pair = |a: usize, b: usize| Subset::singleton(a).with(b);
        let meet: Vec<Vec<_>> = (0..n)
            .map(|a| (0..n).map(|b| p.meet_of(pair(a, b))).collect())
            .collect();
        let join: Vec<Vec<_>> = (0..n)
            .map(|a| (0..n).map(|b| p.join_of(pair(a, b))).collect())
            .collect();
        let has_all_meets = meet.iter().flatten().all(Option::is_some);
        let has_all_joins = join.iter().flatten().all(Option::is_some);
        let bottom = p.bottom();
        let top = p.top();
        let heyting_arrow = if has_all_meets && has_all_joins && bottom.is_some() {
            heyting_table(p, &meet)
        } else {
            None
        };
        LatticeInfo {
            has_all_meets,
            has_all_joins,
            meet,
            join,
            bottom,
            top,
            heyting_arrow,
        }
    }

    pub fn is_lattice(&self) -> bool {
        self.has_all_meets && self.has_all_joins
    }

    pub fn is_heyting(&self) -> bool {
        self.heyting_arrow.is_some()
    }
}

fn heyting_table(p: &Poset, meet: &[Vec<Option<ElementId>>]) -> Option<Vec<Vec<ElementId>>> {
    let n = p.len();
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let candidates: Subset = (0..n)
                .filter(|&c| meet[c][a].is_some_and(|m| p.le(m, b)))
                .collect();
            let greatest = candidates
                .iter()
                .find(|&g| candidates.is_subset(p.down_set(g)))?;
            table[a][b] = greatest;
        }
    }
    Some(table)
}

/// Searches for an order isomorphism between two finite orders given by
/// comparison functions. Returns `map[i]` = image of element `i`.
///
/// Elements are first matched on (number below, number above); the search then
/// backtracks, trying the identical index first so that equal orders map by
/// the identity.
pub fn find_order_isomorphism<F, G>(n1: usize, le1: F, n2: usize, le2: G) -> Option<Vec<usize>>
where
    F: Fn(usize, usize) -> bool,
    G: Fn(usize, usize) -> bool,
{
    if n1 != n2 {
        return None;
    }
    let n = n1;
    let signature = |le: &dyn Fn(usize, usize) -> bool, i: usize| {
        let below = (0..n).filter(|&k| le(k, i)).count();
        let above = (0..n).filter(|&k| le(i, k)).count();
        (below, above)
    };
    let sig1: Vec<_> = (0..n).map(|i| signature(&le1, i)).collect();
    let sig2: Vec<_> = (0..n).map(|i| signature(&le2, i)).collect();
    let mut sorted1 = sig1.clone();
    let mut sorted2 = sig2.clone();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend<F: Fn(usize, usize) -> bool, G: Fn(usize, usize) -> bool>(
        i: usize,
        n: usize,
        le1: &F,
        le2: &G,
        sig1: &[(usize, usize)],
        sig2: &[(usize, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == n {
            return true;
        }
        let candidates = std::iter::once(i).chain((0..n).filter(move |&j| j != i));
        for j in candidates {
            if used[j] || sig1[i] != sig2[j] {
                continue;
            }
            let consistent = (0..i)
                .all(|k| le1(k, i) == le2(map[k], j) && le1(i, k) == le2(j, map[k]));
            if !consistent {
                continue;
            }
            map[i] = j;
            used[j] = true;
            if extend(i + 1, n, le1, le2, sig1, sig2, map, used) {
                return true;
            }
            used[j] = false;
        }
        map[i] = usize::MAX;
        false
    }

    extend(0, n, &le1, &le2, &sig1, &sig2, &mut map, &mut used).then_some(map)
}
