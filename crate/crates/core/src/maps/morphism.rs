use std::fmt;

use crate::cover::FormalTopology;
use crate::exec;
use crate::order::ElementId;
use crate::subset::Subset;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismAxiom {
    /// `f(S₁) =_{S₂} S₂`.
    Total,
    /// `f(a) ↓ f(b) ◁ f(a ↓ b)`.
    Meets,
    /// `a ◁ U` implies `f(a) ◁ f(U)`.
    Covers,
}

impl MorphismAxiom {
    pub fn roman(self) -> &'static str {
        match self {
            MorphismAxiom::Total => "i",
            MorphismAxiom::Meets => "ii",
            MorphismAxiom::Covers => "iii",
        }
    }
}

/// First failing morphism axiom. `elements` holds `(a, b)` for axiom ii and
/// `a` for axiom iii; `u` is the source subset for axiom iii.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismViolation {
    pub axiom: MorphismAxiom,
    pub elements: Vec<ElementId>,
    pub u: Option<Subset>,
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "morphism axiom {} fails", self.axiom.roman())?;
        if !self.elements.is_empty() {
            write!(f, " at {:?}", self.elements)?;
        }
        if let Some(u) = self.u {
            write!(f, " with U={u:?}")?;
        }
        Ok(())
    }
}

/// A map from source base elements to subsets of the target base.
#[derive(Clone)]
pub struct Morphism {
    source: FormalTopology,
    target: FormalTopology,
    map: Vec<Subset>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                self.map
                    .iter()
                    .enumerate()
                    .map(|(a, &fa)| (&self.source.labels()[a], self.target.display(fa))),
            )
            .finish()
    }
}

impl Morphism {
    pub fn new(source: &FormalTopology, target: &FormalTopology, map: Vec<Subset>) -> Result<Self> {
        if map.len() != source.len() {
            return Err(Error::Precondition(
                "a morphism assigns one subset to every source element".into(),
            ));
        }
        if map.iter().any(|fa| !fa.is_subset(target.base())) {
            return Err(Error::Precondition("image outside the target base".into()));
        }
        Ok(Morphism {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn source(&self) -> &FormalTopology {
        &self.source
    }

    pub fn target(&self) -> &FormalTopology {
        &self.target
    }

    pub fn map(&self) -> &[Subset] {
        &self.map
    }

    pub fn apply(&self, a: ElementId) -> Subset {
        self.map[a]
    }

    /// `f(U) = ⋃_{a ∈ U} f(a)`.
    pub fn image(&self, u: Subset) -> Subset {
        u.iter().fold(Subset::EMPTY, |acc, a| acc | self.map[a])
    }

    /// Checks axioms i–iii, axiom iii over every source subset.
    pub fn validate(&self) -> Result<()> {
        let (s1, s2) = (&self.source, &self.target);
        s1.config().check_base(s1.len())?;
        let fail = |axiom, elements, u| {
            Err(Error::InvalidMorphism(MorphismViolation { axiom, elements, u }))
        };
        if !s2.subsets_equal(self.image(s1.base()), s2.base()) {
            return fail(MorphismAxiom::Total, vec![], None);
        }
        for a in 0..s1.len() {
            for b in 0..s1.len() {
                let lhs = s2.wedge(self.map[a], self.map[b]);
                let meet = s1.wedge(Subset::singleton(a), Subset::singleton(b));
                if !s2.covers_set(lhs, self.image(meet)) {
                    return fail(MorphismAxiom::Meets, vec![a, b], None);
                }
            }
        }
        let par = s1.config().parallel;
        let broken = exec::find_first(par, 1u64 << s1.len(), |bits| {
            let u = Subset::from_bits(bits);
            let target = s2.saturate(self.image(u));
            s1.saturate(u)
                .iter()
                .find(|&a| !self.map[a].is_subset(target))
                .map(|a| (a, u))
        });
        match broken {
            Some((a, u)) => fail(MorphismAxiom::Covers, vec![a], Some(u)),
            None => Ok(()),
        }
    }

    /// `a -> {b1,b2,...}` lines in source order.
    pub fn render(&self) -> String {
        self.map
            .iter()
            .enumerate()
            .map(|(a, &fa)| format!("{} -> {}\n", self.source.labels()[a], self.target.display(fa)))
            .collect()
    }
}

/// `a ↦ {a}`.
pub fn identity_morphism(space: &FormalTopology) -> Morphism {
    let map = (0..space.len()).map(Subset::singleton).collect();
    Morphism {
        source: space.clone(),
        target: space.clone(),
        map,
    }
}

fn same_space(a: &FormalTopology, b: &FormalTopology) -> Result<bool> {
    a.same_cover(b)
}

/// `f` followed by `g`: `a ↦ ⋃_{b ∈ f(a)} g(b)`.
pub fn compose(f: &Morphism, g: &Morphism) -> Result<Morphism> {
    if !same_space(&f.target, &g.source)? {
        return Err(Error::MismatchedSpaces);
    }
    let map = f.map.iter().map(|&fa| g.image(fa)).collect();
    Ok(Morphism {
        source: f.source.clone(),
        target: g.target.clone(),
        map,
    })
}

/// `f(a) =_{S₂} g(a)` for every `a`.
pub fn morphisms_equal(f: &Morphism, g: &Morphism) -> Result<bool> {
    if !same_space(&f.source, &g.source)? || !same_space(&f.target, &g.target)? {
        return Err(Error::MismatchedSpaces);
    }
    Ok(f
        .map
        .iter()
        .zip(&g.map)
        .all(|(&x, &y)| f.target.subsets_equal(x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{dm_cover, double_negation_space};
    use crate::order::Poset;

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    fn sdm() -> FormalTopology {
        dm_cover(&Poset::chain(&["0", "1"]))
    }

    #[test]
    fn chain_and_double_negation_maps_are_morphisms() {
        let (a, b) = (sdm(), double_negation_space());
        let f = Morphism::new(&a, &b, vec![Subset::EMPTY, s(&[0])]).unwrap();
        let g = Morphism::new(&b, &a, vec![s(&[1])]).unwrap();
        f.validate().unwrap();
        g.validate().unwrap();
        let gf = compose(&f, &g).unwrap();
        assert!(morphisms_equal(&gf, &identity_morphism(&a)).unwrap());
        let fg = compose(&g, &f).unwrap();
        assert!(morphisms_equal(&fg, &identity_morphism(&b)).unwrap());
        assert_eq!(f.render(), "0 -> {}\n1 -> {⊤}\n");
    }

    #[test]
    fn total_axiom_failure() {
        let f = Morphism::new(&sdm(), &double_negation_space(), vec![Subset::EMPTY; 2]).unwrap();
        let Err(Error::InvalidMorphism(v)) = f.validate() else {
            panic!("expected failure")
        };
        assert_eq!(v.axiom, MorphismAxiom::Total);
    }

    #[test]
    fn identity_laws() {
        let t = dm_cover(&Poset::chain(&["0", "h", "1"]));
        let id = identity_morphism(&t);
        id.validate().unwrap();
        let f = Morphism::new(&t, &t, vec![s(&[0]), s(&[1]), s(&[1, 2])]).unwrap();
        assert!(morphisms_equal(&compose(&id, &f).unwrap(), &f).unwrap());
        assert!(morphisms_equal(&compose(&f, &id).unwrap(), &f).unwrap());
    }

    #[test]
    fn equality_is_up_to_saturation() {
        let a = sdm();
        let x = Morphism::new(&a, &a, vec![s(&[0]), s(&[1])]).unwrap();
        let y = Morphism::new(&a, &a, vec![Subset::EMPTY, s(&[1])]).unwrap();
        assert!(morphisms_equal(&x, &y).unwrap());
        let b = double_negation_space();
        let f = Morphism::new(&a, &b, vec![Subset::EMPTY, s(&[0])]).unwrap();
        let g = Morphism::new(&a, &b, vec![Subset::EMPTY, Subset::EMPTY]).unwrap();
        assert!(!morphisms_equal(&f, &g).unwrap());
    }

    #[test]
    fn mismatched_composition() {
        let a = sdm();
        let b = double_negation_space();
        let f = Morphism::new(&a, &b, vec![Subset::EMPTY, s(&[0])]).unwrap();
        assert_eq!(compose(&f, &f).unwrap_err(), Error::MismatchedSpaces);
    }

    #[test]
    fn covers_axiom_failure() {
        // sends the bottom, which is covered by ∅, to an inhabited open
        let a = sdm();
        let f = Morphism::new(&a, &a, vec![s(&[1]), s(&[1])]).unwrap();
        let Err(Error::InvalidMorphism(v)) = f.validate() else {
            panic!("expected failure")
        };
        assert_eq!(v.axiom, MorphismAxiom::Covers);
        assert_eq!(v.elements, vec![0]);
    }
}
