mod common;

use common::Table;
use ftw_core::cover::{booleanization, closed_subspace, generate_from_axioms, point_set_cover};
use ftw_core::frame::enumerate_frame;
use ftw_core::maps::enumerate_points;
use ftw_core::workbench::{parse_document, to_table_document};
use ftw_core::{Config, CoverAxioms, FormalTopology, LawReport, PointSetSpace, Poset, Subset};
use proptest::prelude::*;

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

/// A poset on `n` elements from an arbitrary set of upward pairs `i < j`.
fn poset(n: usize) -> impl Strategy<Value = Poset> {
    let pairs = n * n.saturating_sub(1) / 2;
    proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
        let mut chosen = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits[k] {
                    chosen.push((i, j));
                }
                k += 1;
            }
        }
        Poset::from_pairs(labels(n), &chosen).unwrap()
    })
}

fn axiom_space() -> impl Strategy<Value = FormalTopology> {
    (1usize..=5)
        .prop_flat_map(|n| {
            let axioms = proptest::collection::vec((0..n, 0u64..1 << n), 0..4);
            (poset(n), axioms)
        })
        .prop_map(|(p, list)| {
            let mut ax = CoverAxioms::empty(p.len());
            for (a, bits) in list {
                ax = ax.with(a, Subset::from_bits(bits));
            }
            generate_from_axioms(&p, ax).unwrap()
        })
}

fn extents() -> impl Strategy<Value = PointSetSpace> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(points, elements)| {
            proptest::collection::vec(0u64..1 << points, elements)
                .prop_map(move |ext| (points, ext))
        })
        .prop_map(|(points, ext)| {
            let extents = ext.into_iter().map(Subset::from_bits).collect::<Vec<_>>();
            PointSetSpace::new(&labels(points), &labels(extents.len()), extents).unwrap()
        })
}

/// Point-set spaces whose extents form a basis.
fn point_set_space() -> impl Strategy<Value = FormalTopology> {
    extents()
        .prop_filter("extents must form a basis", |x| x.basis_violation().is_none())
        .prop_map(|x| point_set_cover(&x))
}

fn any_space() -> impl Strategy<Value = FormalTopology> {
    prop_oneof![axiom_space(), point_set_space()]
}

fn pick(space: &FormalTopology, bits: u64) -> Subset {
    Subset::from_bits(bits) & space.base()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn point_set_verdicts_match_brute_force(x in extents()) {
        let space = point_set_cover(&x);
        let oracle = common::axiom_violation(&Table::of(&space));
        let verdict = space.construction_verdict().unwrap();
        prop_assert_eq!(verdict.is_ok(), oracle.is_none());
        prop_assert_eq!(space.validate_axioms().is_ok(), oracle.is_none());
        if x.basis_violation().is_none() {
            prop_assert!(verdict.is_ok());
        }
    }

    #[test]
    fn generated_spaces_are_valid(space in any_space()) {
        prop_assert!(space.validate_axioms().is_ok());
        prop_assert_eq!(common::axiom_violation(&Table::of(&space)), None);
    }

    #[test]
    fn saturation_is_a_closure(space in any_space(), u in any::<u64>(), v in any::<u64>()) {
        let (u, v) = (pick(&space, u), pick(&space, v));
        let su = space.saturate(u);
        prop_assert!(u.is_subset(su));
        prop_assert_eq!(space.saturate(su), su);
        prop_assert!(su.is_subset(space.saturate(u | v)));
        prop_assert_eq!(su & space.saturate(v), space.saturate(space.wedge(u, v)));
    }

    #[test]
    fn heyting_adjunction(space in any_space()) {
        let frame = enumerate_frame(&space).unwrap();
        for &u in frame.elements() {
            for &v in frame.elements() {
                let arrow = frame.arrow(u, v);
                for &w in frame.elements() {
                    prop_assert_eq!(w.is_subset(arrow), frame.meet(w, u).is_subset(v));
                }
            }
        }
        prop_assert!(frame.verify_laws().is_ok());
    }

    #[test]
    fn closed_subspaces_compose(space in any_space(), v in any::<u64>(), w in any::<u64>()) {
        let (v, w) = (pick(&space, v), pick(&space, w));
        let twice = closed_subspace(&closed_subspace(&space, v).unwrap(), w).unwrap();
        let once = closed_subspace(&space, v | w).unwrap();
        prop_assert!(twice.same_cover(&once).unwrap());
        prop_assert!(once.validate_axioms().is_ok());
    }

    #[test]
    fn booleanization_is_boolean_and_idempotent(space in any_space()) {
        let b = booleanization(&space);
        prop_assert!(b.validate_axioms().is_ok());
        let frame = enumerate_frame(&b).unwrap();
        prop_assert!(LawReport::of(&frame).boolean.holds);
        prop_assert!(b.saturate(Subset::EMPTY).is_subset(space.saturate(Subset::EMPTY)));
        let bb = enumerate_frame(&booleanization(&b)).unwrap();
        prop_assert!(frame.is_isomorphic(&bb));
    }

    #[test]
    fn law_hierarchy(space in any_space()) {
        let laws = LawReport::of(&enumerate_frame(&space).unwrap());
        prop_assert!(!laws.boolean.holds || laws.de_morgan.holds);
        prop_assert!(!laws.strongly_de_morgan.holds || laws.de_morgan.holds);
    }

    #[test]
    fn points_match_brute_force(space in any_space()) {
        let points: Vec<Subset> =
            enumerate_points(&space).unwrap().into_iter().map(|p| p.alpha).collect();
        prop_assert_eq!(points, common::points(&Table::of(&space)));
    }

    #[test]
    fn tables_round_trip(space in any_space()) {
        let text = to_table_document(&space).unwrap();
        let again = parse_document(&text).unwrap().build(Config::default()).unwrap();
        prop_assert_eq!(again.saturation_table().unwrap(), space.saturation_table().unwrap());
        prop_assert_eq!(to_table_document(&again).unwrap(), text);
    }

    #[test]
    fn sequential_and_parallel_agree(space in any_space()) {
        let seq = space.with_config(Config::sequential());
        let par = space.with_config(Config::default().with_parallel(true));
        prop_assert_eq!(seq.validate_axioms().is_ok(), par.validate_axioms().is_ok());
        prop_assert_eq!(enumerate_points(&seq).unwrap(), enumerate_points(&par).unwrap());
        prop_assert_eq!(
            LawReport::of_space(&seq).unwrap(),
            LawReport::of_space(&par).unwrap()
        );
    }
}
