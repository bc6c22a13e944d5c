use super::{CoverAxioms, FormalTopology};
use crate::exec;
use crate::subset::Subset;
use crate::Result;

/// Set-presentation of a finite space: for each element `a`, the
/// ⊆-minimal subsets `U` with `a ◁ U`, in canonical order.
///
/// Scans every subset of the base once. Minimality is checked against
/// single-element removals, which suffices because covering is monotone.
pub fn extract_presentation(space: &FormalTopology) -> Result<CoverAxioms> {
    let table = space.saturation_table()?;
    let n = space.len();
    let par = space.config().parallel;
    let mut covers: Vec<Vec<Subset>> = (0..n)
        .map(|a| {
            exec::filter_map(par, table.len() as u64, |bits| {
                let u = Subset::from_bits(bits);
                let minimal = table[bits as usize].contains(a)
                    && u.iter()
                        .all(|x| !table[u.without(x).bits() as usize].contains(a));
                minimal.then_some(u)
            })
        })
        .collect();
    for list in &mut covers {
        list.sort();
    }
    Ok(CoverAxioms { covers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{dm_cover, double_negation_space, generate_from_axioms};
    use crate::order::Poset;

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    #[test]
    fn discrete_presentation_is_singletons() {
        let t = generate_from_axioms(&Poset::antichain(&["a", "b"]), CoverAxioms::empty(2)).unwrap();
        let p = extract_presentation(&t).unwrap();
        assert_eq!(p.covers, vec![vec![s(&[0])], vec![s(&[1])]]);
    }

    #[test]
    fn chain_presentation() {
        let t = dm_cover(&Poset::chain(&["0", "h", "1"]));
        let p = extract_presentation(&t).unwrap();
        assert_eq!(p.of(0), &[Subset::EMPTY]);
        assert_eq!(p.of(1), &[s(&[1]), s(&[2])]);
        assert_eq!(p.of(2), &[s(&[2])]);
    }

    #[test]
    fn double_negation_presentation() {
        let p = extract_presentation(&double_negation_space()).unwrap();
        assert_eq!(p.covers, vec![vec![s(&[0])]]);
    }
}
