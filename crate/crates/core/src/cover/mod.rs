//! Formal topologies and the covering calculus.
//!
//! A [`FormalTopology`] is a base of named elements plus a saturation
//! operator `sat(U) = {a : a ◁ U}` supplied by one of several backends. All
//! derived notions (wedge, implication, pseudocomplement, equality of formal
//! opens) are computed from `sat` and the saturations of singletons.

mod construct;
mod presentation;

use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;

use crate::config::{Config, MAX_REPRESENTABLE};
use crate::exec;
use crate::order::{ElementId, Poset};
use crate::subset::Subset;
use crate::{Error, Result};

pub use construct::{
    adjoin_top, booleanization, closed_subspace, dm_cover, double_negation_space,
    generate_from_axioms, one_point_space, point_set_cover,
};
pub use presentation::extract_presentation;
pub(crate) use construct::beta_space as construct_beta;

/// Axiom families `C(x, i)`: for each base element, the subsets that cover it
/// by fiat.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverAxioms {
    pub covers: Vec<Vec<Subset>>,
}

impl CoverAxioms {
    pub fn empty(n: usize) -> Self {
        CoverAxioms {
            covers: vec![Vec::new(); n],
        }
    }

    pub fn with(mut self, element: ElementId, cover: Subset) -> Self {
        self.covers[element].push(cover);
        self
    }

    pub fn of(&self, element: ElementId) -> &[Subset] {
        self.covers.get(element).map_or(&[], Vec::as_slice)
    }
}

/// A classical comparison space: base elements are interpreted as sets of
/// points, and `a ◁ U` iff the extent of `a` lies inside the union of the
/// extents of `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSetSpace {
    pub points: Vec<String>,
    pub elements: Vec<String>,
    pub extents: Vec<Subset>,
}

impl PointSetSpace {
    pub fn new<P: ToString, E: ToString>(
        points: &[P],
        elements: &[E],
        extents: Vec<Subset>,
    ) -> Result<Self> {
        let points: Vec<String> = points.iter().map(|p| p.to_string()).collect();
        let elements: Vec<String> = elements.iter().map(|e| e.to_string()).collect();
        if points.len() > MAX_REPRESENTABLE || elements.len() > MAX_REPRESENTABLE {
            return Err(Error::SizeCap {
                size: points.len().max(elements.len()),
                cap: MAX_REPRESENTABLE,
            });
        }
        if extents.len() != elements.len() {
            return Err(Error::Precondition("one extent per base element".into()));
        }
        let all = Subset::full(points.len());
        if extents.iter().any(|e| !e.is_subset(all)) {
            return Err(Error::Precondition("extent mentions unknown points".into()));
        }
        Ok(PointSetSpace {
            points,
            elements,
            extents,
        })
    }

    pub fn extent_of(&self, u: Subset) -> Subset {
        u.iter().fold(Subset::EMPTY, |acc, a| acc | self.extents[a])
    }

    /// First `(a, b, x)` with `x ∈ ext(a) ∩ ext(b)` but no element `c` with
    /// `x ∈ ext(c) ⊆ ext(a) ∩ ext(b)`. `None` means the extents form a basis,
    /// which makes the induced cover valid.
    pub fn basis_violation(&self) -> Option<(ElementId, ElementId, usize)> {
        let n = self.elements.len();
        for a in 0..n {
            for b in a + 1..n {
                let both = self.extents[a] & self.extents[b];
                let reached = self
                    .extents
                    .iter()
                    .filter(|e| e.is_subset(both))
                    .fold(Subset::EMPTY, |acc, &e| acc | e);
                if let Some(x) = (both - reached).first() {
                    return Some((a, b, x));
                }
            }
        }
        None
    }
}

/// Which of the cover axioms failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    /// `a ∈ U` implies `a ◁ U`.
    Reflexivity,
    /// `a ◁ U` and `U ◁ V` imply `a ◁ V`.
    Transitivity,
    /// `a ◁ U` and `a ◁ V` imply `a ◁ U ↓ V`.
    Stability,
}

impl Axiom {
    pub fn roman(self) -> &'static str {
        match self {
            Axiom::Reflexivity => "i",
            Axiom::Transitivity => "ii",
            Axiom::Stability => "iii",
        }
    }
}

/// A concrete failing instance `(a, U, V)` of one cover axiom. `v` is absent
/// for reflexivity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub element: ElementId,
    pub u: Subset,
    pub v: Option<Subset>,
}

impl AxiomViolation {
    pub fn render<S: AsRef<str>>(&self, labels: &[S]) -> String {
        let mut out = format!(
            "axiom={} a={} U={}",
            self.axiom.roman(),
            labels[self.element].as_ref(),
            self.u.display(labels)
        );
        if let Some(v) = self.v {
            out.push_str(&format!(" V={}", v.display(labels)));
        }
        out
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "axiom {} fails at a=#{} U={:?}", self.axiom.roman(), self.element, self.u)?;
        if let Some(v) = self.v {
            write!(f, " V={v:?}")?;
        }
        Ok(())
    }
}

/// Which construction produced a space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceKind {
    Table,
    Axioms,
    MacNeille,
    PointSet,
    DoubleNegation,
    ClosedSubspace,
    Booleanization,
    AdjoinedTop,
    Beta,
}

impl SpaceKind {
    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::Table => "table",
            SpaceKind::Axioms => "axioms",
            SpaceKind::MacNeille => "macneille",
            SpaceKind::PointSet => "pointset",
            SpaceKind::DoubleNegation => "double-negation",
            SpaceKind::ClosedSubspace => "closed-subspace",
            SpaceKind::Booleanization => "booleanization",
            SpaceKind::AdjoinedTop => "adjoined-top",
            SpaceKind::Beta => "beta",
        }
    }
}

#[derive(Clone)]
enum Backend {
    Table(Arc<Vec<Subset>>),
    Axioms {
        /// `↓C(b, i)` for every axiom, indexed by `b`.
        regions: Arc<Vec<Vec<Subset>>>,
        axioms: CoverAxioms,
        memo: Arc<DashMap<u64, Subset>>,
    },
    MacNeille,
    PointSet(PointSetSpace),
    DoubleNegation,
    Closed {
        parent: FormalTopology,
        v: Subset,
    },
    Booleanized {
        parent: FormalTopology,
        /// `{a}**` in the parent, per base element.
        regular: Arc<Vec<Subset>>,
    },
    AdjoinedTop {
        parent: FormalTopology,
    },
    Beta {
        parent: FormalTopology,
        elements: Arc<Vec<Subset>>,
    },
}

#[derive(Clone)]
struct Inner {
    labels: Vec<String>,
    poset: Option<Poset>,
    backend: Backend,
    singles: Vec<Subset>,
    top: Option<ElementId>,
    config: Config,
    verdict: Option<Result<(), AxiomViolation>>,
}

/// A finite formal topology: a base and a covering relation.
///
/// Values are immutable and cheap to clone; clones share the backend,
/// including the saturation memo of inductively generated covers.
#[derive(Clone)]
pub struct FormalTopology(Arc<Inner>);

impl fmt::Debug for FormalTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FormalTopology")
            .field("kind", &self.kind())
            .field("labels", &self.0.labels)
            .field("top", &self.0.top)
            .finish()
    }
}

impl FormalTopology {
    fn build(
        labels: Vec<String>,
        poset: Option<Poset>,
        backend: Backend,
        top: Option<ElementId>,
        config: Config,
    ) -> Result<Self> {
        if labels.len() > MAX_REPRESENTABLE {
            return Err(Error::SizeCap {
                size: labels.len(),
                cap: MAX_REPRESENTABLE,
            });
        }
        let n = labels.len();
        let mut inner = Inner {
            labels,
            poset,
            backend,
            singles: Vec::new(),
            top: None,
            config,
            verdict: None,
        };
        inner.singles = (0..n)
            .map(|a| inner.raw_saturate(Subset::singleton(a)))
            .collect();
        let full = Subset::full(n);
        inner.top = top.or_else(|| (0..n).find(|&a| inner.singles[a] == full));
        Ok(FormalTopology(Arc::new(inner)))
    }

    /// Builds a space from an explicit saturation table indexed by subset
    /// bitmask; the table must have `2^n` entries.
    pub fn from_table<S: ToString>(labels: &[S], table: Vec<Subset>) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let n = labels.len();
        Config::default().check_base(n)?;
        if table.len() != 1usize << n {
            return Err(Error::Precondition(format!(
                "saturation table needs {} entries, got {}",
                1usize << n,
                table.len()
            )));
        }
        let full = Subset::full(n);
        if table.iter().any(|s| !s.is_subset(full)) {
            return Err(Error::Precondition("table mentions unknown elements".into()));
        }
        Self::build(labels, None, Backend::Table(Arc::new(table)), None, Config::default())
    }

    /// Same space with different limits and execution strategy.
    pub fn with_config(&self, config: Config) -> Self {
        let mut inner = (*self.0).clone();
        inner.config = config;
        FormalTopology(Arc::new(inner))
    }

    pub fn config(&self) -> Config {
        self.0.config
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn index_of(&self, label: &str) -> Option<ElementId> {
        self.0.labels.iter().position(|l| l == label)
    }

    /// The whole base as a subset.
    pub fn base(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Underlying poset for order-backed spaces.
    pub fn poset(&self) -> Option<&Poset> {
        self.0.poset.as_ref()
    }

    /// The element `1_S` with `S =_S {1_S}`, when the base has one.
    pub fn top(&self) -> Option<ElementId> {
        self.0.top
    }

    pub fn kind(&self) -> SpaceKind {
        match &self.0.backend {
            Backend::Table(_) => SpaceKind::Table,
            Backend::Axioms { .. } => SpaceKind::Axioms,
            Backend::MacNeille => SpaceKind::MacNeille,
            Backend::PointSet(_) => SpaceKind::PointSet,
            Backend::DoubleNegation => SpaceKind::DoubleNegation,
            Backend::Closed { .. } => SpaceKind::ClosedSubspace,
            Backend::Booleanized { .. } => SpaceKind::Booleanization,
            Backend::AdjoinedTop { .. } => SpaceKind::AdjoinedTop,
            Backend::Beta { .. } => SpaceKind::Beta,
        }
    }

    /// Axiom verdict computed when the space was constructed, for covers that
    /// are not guaranteed valid (MacNeille and point-set covers).
    pub fn construction_verdict(&self) -> Option<&Result<(), AxiomViolation>> {
        self.0.verdict.as_ref()
    }

    /// Axiom families of an inductively generated space.
    pub fn axioms(&self) -> Option<&CoverAxioms> {
        match &self.0.backend {
            Backend::Axioms { axioms, .. } => Some(axioms),
            _ => None,
        }
    }

    /// Frame elements of the parent for a β cover, indexed like the base.
    pub fn beta_elements(&self) -> Option<&[Subset]> {
        match &self.0.backend {
            Backend::Beta { elements, .. } => Some(elements),
            _ => None,
        }
    }

    pub fn display(&self, u: Subset) -> String {
        u.display(&self.0.labels).to_string()
    }

    /// `{a : a ◁ U}`.
    pub fn saturate(&self, u: Subset) -> Subset {
        self.0.raw_saturate(u & self.base())
    }

    /// `a ◁ U`.
    pub fn covers(&self, a: ElementId, u: Subset) -> bool {
        self.saturate(u).contains(a)
    }

    /// `W ◁ V`, i.e. every member of `w` is covered by `v`.
    pub fn covers_set(&self, w: Subset, v: Subset) -> bool {
        w.is_subset(self.saturate(v))
    }

    /// `sat({a})`.
    pub fn singleton_saturation(&self, a: ElementId) -> Subset {
        self.0.singles[a]
    }

    /// `{d : ∃u ∈ U, d ◁ {u}}`.
    pub fn localize(&self, u: Subset) -> Subset {
        u.iter().fold(Subset::EMPTY, |acc, x| acc | self.0.singles[x])
    }

    /// `U ↓ V`.
    pub fn wedge(&self, u: Subset, v: Subset) -> Subset {
        self.localize(u) & self.localize(v)
    }

    /// `U → V = {a : a ↓ U ◁ V}`.
    pub fn implication(&self, u: Subset, v: Subset) -> Subset {
        let local = self.localize(u);
        let target = self.saturate(v);
        (0..self.len())
            .filter(|&a| (self.0.singles[a] & local).is_subset(target))
            .collect()
    }

    /// `U* = U → ∅`.
    pub fn pseudocomplement(&self, u: Subset) -> Subset {
        self.implication(u, Subset::EMPTY)
    }

    /// `U =_S V`.
    pub fn subsets_equal(&self, u: Subset, v: Subset) -> bool {
        self.saturate(u) == self.saturate(v)
    }

    /// `¬(S ◁ ∅)`.
    pub fn is_nontrivial(&self) -> bool {
        !self.base().is_subset(self.saturate(Subset::EMPTY))
    }

    /// Specialization order `a ◁ {b}`.
    pub fn specialization_le(&self, a: ElementId, b: ElementId) -> bool {
        self.0.singles[b].contains(a)
    }

    /// Identity of the underlying value; used to match morphism endpoints.
    pub fn same_value(&self, other: &FormalTopology) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// True when both spaces have the same element names and the same
    /// saturation operator. Exponential; honors the size cap.
    pub fn same_cover(&self, other: &FormalTopology) -> Result<bool> {
        if self.same_value(other) {
            return Ok(true);
        }
        if self.labels() != other.labels() {
            return Ok(false);
        }
        self.0.config.check_base(self.len())?;
        let n = self.len();
        Ok(exec::all(self.0.config.parallel, 1 << n, |bits| {
            let u = Subset::from_bits(bits);
            self.saturate(u) == other.saturate(u)
        }))
    }

    /// Saturation of every subset, indexed by bitmask.
    pub fn saturation_table(&self) -> Result<Vec<Subset>> {
        self.0.config.check_base(self.len())?;
        Ok(exec::map(self.0.config.parallel, 1 << self.len(), |bits| {
            self.saturate(Subset::from_bits(bits))
        }))
    }

    /// Exhaustively checks cover axioms i–iii and reports the first failing
    /// instance.
    ///
    /// Axiom ii is checked as monotonicity along single-element extensions
    /// plus idempotence, and axiom iii with `V` ranging over singletons; given
    /// the earlier axioms both reductions are equivalent to the full
    /// quantification over all `U`, `V`. Phases run in axiom order, subsets in
    /// bitmask order.
    pub fn validate_axioms(&self) -> Result<()> {
        let n = self.len();
        self.0.config.check_base(n)?;
        let par = self.0.config.parallel;
        let count = 1u64 << n;
        let violation = exec::find_first(par, count, |bits| {
            let u = Subset::from_bits(bits);
            let missing = u - self.saturate(u);
            missing.first().map(|a| AxiomViolation {
                axiom: Axiom::Reflexivity,
                element: a,
                u,
                v: None,
            })
        })
        .or_else(|| {
            exec::find_first(par, count, |bits| {
                let u = Subset::from_bits(bits);
                let sat_u = self.saturate(u);
                for x in self.base() - u {
                    let bigger = u.with(x);
                    if let Some(a) = (sat_u - self.saturate(bigger)).first() {
                        return Some(AxiomViolation {
                            axiom: Axiom::Transitivity,
                            element: a,
                            u,
                            v: Some(bigger),
                        });
                    }
                }
                (self.saturate(sat_u) - sat_u).first().map(|a| AxiomViolation {
                    axiom: Axiom::Transitivity,
                    element: a,
                    u: sat_u,
                    v: Some(u),
                })
            })
        })
        .or_else(|| {
            exec::find_first(par, count, |bits| {
                let u = Subset::from_bits(bits);
                let sat_u = self.saturate(u);
                let local = self.localize(u);
                (0..n).find_map(|b| {
                    let both = sat_u & self.0.singles[b];
                    let meet = self.saturate(local & self.0.singles[b]);
                    (both - meet).first().map(|a| AxiomViolation {
                        axiom: Axiom::Stability,
                        element: a,
                        u,
                        v: Some(Subset::singleton(b)),
                    })
                })
            })
        });
        match violation {
            Some(v) => Err(Error::InvalidCover(v)),
            None => Ok(()),
        }
    }
}

impl Inner {
    fn full(&self) -> Subset {
        Subset::full(self.labels.len())
    }

    fn raw_saturate(&self, u: Subset) -> Subset {
        match &self.backend {
            Backend::Table(table) => table[u.bits() as usize],
            Backend::Axioms {
                regions, memo, ..
            } => {
                if let Some(hit) = memo.get(&u.bits()) {
                    return *hit;
                }
                let poset = self.poset.as_ref().expect("axiom spaces carry a poset");
                let sat = construct::inductive_closure(poset, regions, u);
                memo.insert(u.bits(), sat);
                sat
            }
            Backend::MacNeille => {
                let poset = self.poset.as_ref().expect("MacNeille spaces carry a poset");
                (0..poset.len())
                    .map(|y| poset.down_set(y))
                    .filter(|&down| u.is_subset(down))
                    .fold(self.full(), |acc, down| acc & down)
            }
            Backend::PointSet(space) => {
                let covered = space.extent_of(u);
                (0..space.elements.len())
                    .filter(|&a| space.extents[a].is_subset(covered))
                    .collect()
            }
            Backend::DoubleNegation => u,
            Backend::Closed { parent, v } => parent.saturate(u | *v),
            Backend::Booleanized { parent, regular } => {
                let u2 = parent.pseudocomplement(parent.pseudocomplement(u));
                let target = parent.saturate(u2);
                (0..regular.len())
                    .filter(|&a| regular[a].is_subset(target))
                    .collect()
            }
            Backend::AdjoinedTop { parent } => {
                let old = parent.base();
                let top = old.len();
                let tau = if u.contains(top) { old } else { u & old };
                let sat = parent.saturate(tau);
                if sat == old {
                    sat.with(top)
                } else {
                    sat
                }
            }
            Backend::Beta { parent, elements } => {
                let union = u.iter().fold(Subset::EMPTY, |acc, i| acc | elements[i]);
                let sat = parent.saturate(union);
                (0..elements.len())
                    .filter(|&i| elements[i].is_subset(sat))
                    .collect()
            }
        }
    }
}
