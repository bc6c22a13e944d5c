use super::morphism::Morphism;
use crate::cover::FormalTopology;
use crate::exec;
use crate::frame::enumerate_frame;
use crate::subset::Subset;
use crate::{Error, Result};

/// Upper bound on candidate maps examined by [`morphisms_from`].
const MAX_CANDIDATES: u128 = 1 << 22;

/// Searches for an isomorphism of the two frames and, if one exists, returns
/// the base-level morphisms `f: S₁ → S₂` and `g: S₂ → S₁` realizing it.
///
/// `f(a)` is the image of `sat({a})` under the frame isomorphism, i.e. the
/// set of target elements whose saturation lies below that image.
pub fn find_isomorphism(
    s1: &FormalTopology,
    s2: &FormalTopology,
) -> Result<Option<(Morphism, Morphism)>> {
    let f1 = enumerate_frame(s1)?;
    let f2 = enumerate_frame(s2)?;
    let Some(forward) = f1.isomorphism_to(&f2) else {
        return Ok(None);
    };
    let mut backward = vec![0; forward.len()];
    for (i, &j) in forward.iter().enumerate() {
        backward[j] = i;
    }
    let transport = |from: &crate::frame::Frame,
                     to: &crate::frame::Frame,
                     map: &[usize],
                     space: &FormalTopology| {
        (0..space.len())
            .map(|a| {
                let i = from
                    .index_of(space.singleton_saturation(a))
                    .expect("saturated singletons are frame elements");
                to.element(map[i])
            })
            .collect::<Vec<_>>()
    };
    let f = Morphism::new(s1, s2, transport(&f1, &f2, &forward, s1))?;
    let g = Morphism::new(s2, s1, transport(&f2, &f1, &backward, s2))?;
    Ok(Some((f, g)))
}

/// All valid morphisms `S₁ → S₂` up to equality, one representative per class.
///
/// Each class has a unique representative sending every element to a
/// saturated subset, so the search ranges over maps into the target frame.
/// Results are ordered lexicographically by the frame positions of
/// `f(0), f(1), ...`.
pub fn morphisms_from(s1: &FormalTopology, s2: &FormalTopology) -> Result<Vec<Morphism>> {
    s1.config().check_base(s1.len())?;
    s2.config().check_base(s2.len())?;
    let frame = enumerate_frame(s2)?;
    let k = frame.len() as u128;
    let n = s1.len() as u32;
    let candidates = k
        .checked_pow(n)
        .filter(|&c| c <= MAX_CANDIDATES)
        .ok_or(Error::SearchTooLarge {
            candidates: k.saturating_pow(n),
            cap: MAX_CANDIDATES,
        })?;
    let decode = |mut code: u64| {
        let mut map = vec![Subset::EMPTY; n as usize];
        for slot in map.iter_mut().rev() {
            *slot = frame.element((code % k as u64) as usize);
            code /= k as u64;
        }
        map
    };
    let par = s1.config().parallel;
    exec::filter_map(par, candidates as u64, |code| {
        let f = Morphism::new(s1, s2, decode(code)).ok()?;
        f.validate().is_ok().then_some(f)
    })
    .into_iter()
    .map(Ok)
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{dm_cover, double_negation_space};
    use crate::maps::{compose, identity_morphism, morphisms_equal};
    use crate::order::Poset;

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    #[test]
    fn chain_double_negation_isomorphism() {
        let a = dm_cover(&Poset::chain(&["0", "1"]));
        let b = double_negation_space();
        let (f, g) = find_isomorphism(&a, &b).unwrap().unwrap();
        assert_eq!(f.map(), &[Subset::EMPTY, s(&[0])]);
        assert_eq!(g.map(), &[s(&[0, 1])]);
        f.validate().unwrap();
        g.validate().unwrap();
        assert!(morphisms_equal(&compose(&f, &g).unwrap(), &identity_morphism(&a)).unwrap());
        assert!(morphisms_equal(&compose(&g, &f).unwrap(), &identity_morphism(&b)).unwrap());
    }

    #[test]
    fn size_obstruction() {
        let a = dm_cover(&Poset::chain(&["0", "h", "1"]));
        assert!(find_isomorphism(&a, &double_negation_space()).unwrap().is_none());
    }

    #[test]
    fn self_isomorphism_is_identity() {
        let a = dm_cover(&Poset::chain(&["0", "h", "1"]));
        let (f, g) = find_isomorphism(&a, &a).unwrap().unwrap();
        assert!(morphisms_equal(&f, &identity_morphism(&a)).unwrap());
        assert!(morphisms_equal(&g, &identity_morphism(&a)).unwrap());
    }

    #[test]
    fn morphisms_out_of_double_negation() {
        let dn = double_negation_space();
        let sdm = dm_cover(&Poset::chain(&["0", "1"]));
        assert_eq!(morphisms_from(&dn, &sdm).unwrap().len(), 1);
        let ch3 = dm_cover(&Poset::chain(&["0", "h", "1"]));
        let found = morphisms_from(&dn, &ch3).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].map(), &[s(&[0, 1, 2])]);
    }

    #[test]
    fn endomorphisms_include_identity() {
        let ch3 = dm_cover(&Poset::chain(&["0", "h", "1"]));
        let found = morphisms_from(&ch3, &ch3).unwrap();
        let id = identity_morphism(&ch3);
        assert!(found.iter().any(|f| morphisms_equal(f, &id).unwrap()));
    }
}
