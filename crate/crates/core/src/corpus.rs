//! Named small spaces and posets used by the tests, benches and the
//! `builtin` document kind.

use crate::cover::{
    adjoin_top, closed_subspace, dm_cover, double_negation_space, generate_from_axioms,
    one_point_space, point_set_cover, CoverAxioms, FormalTopology, PointSetSpace,
};
use crate::order::Poset;
use crate::subset::Subset;

fn s(ix: &[usize]) -> Subset {
    Subset::from_indices(ix.iter().copied())
}

fn named(names: &[&str]) -> Vec<String> {
    names.iter().map(|n| n.to_string()).collect()
}

/// The chain `0 < h < 1`.
pub fn chain3() -> Poset {
    Poset::chain(&["0", "h", "1"])
}

/// The chain `0 < 1`.
pub fn chain2() -> Poset {
    Poset::chain(&["0", "1"])
}

pub fn antichain2() -> Poset {
    Poset::antichain(&["a", "b"])
}

/// The Boolean square `⊥ < a, b < ⊤`.
pub fn boolean_square() -> Poset {
    Poset::from_pairs(named(&["⊥", "a", "b", "⊤"]), &[(0, 1), (0, 2), (1, 3), (2, 3)])
        .expect("square")
}

/// `0 < a, 0 < b` with no top.
pub fn vee() -> Poset {
    Poset::from_pairs(named(&["0", "a", "b"]), &[(0, 1), (0, 2)]).expect("vee")
}

/// Pentagon N5: `0 < a < c < 1`, `0 < b < 1`.
pub fn pentagon() -> Poset {
    Poset::from_pairs(
        named(&["0", "a", "b", "c", "1"]),
        &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)],
    )
    .expect("pentagon")
}

/// Diamond M3: bottom, three atoms, top.
pub fn diamond() -> Poset {
    Poset::from_pairs(
        named(&["0", "a", "b", "c", "1"]),
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )
    .expect("diamond")
}

/// Two incomparable maximal elements over two incomparable minimal ones
/// (the "bowtie"); its MacNeille completion adds a middle element.
pub fn bowtie() -> Poset {
    Poset::from_pairs(
        named(&["a", "b", "c", "d"]),
        &[(0, 2), (0, 3), (1, 2), (1, 3)],
    )
    .expect("bowtie")
}

/// `S_DM`: the MacNeille cover on the two-element chain.
pub fn sdm() -> FormalTopology {
    dm_cover(&chain2())
}

pub fn dm_chain3() -> FormalTopology {
    dm_cover(&chain3())
}

/// Three points, opens `∅, {x}, {y}, {x,y}, X`.
pub fn ndm5() -> FormalTopology {
    point_set_cover(
        &PointSetSpace::new(
            &["x", "y", "z"],
            &["bx", "by", "bxy", "bX"],
            vec![s(&[0]), s(&[1]), s(&[0, 1]), s(&[0, 1, 2])],
        )
        .expect("ndm5"),
    )
}

/// Discrete two-point space with a top basic open.
pub fn b4sp() -> FormalTopology {
    point_set_cover(
        &PointSetSpace::new(
            &["x", "y"],
            &["bx", "by", "bxy"],
            vec![s(&[0]), s(&[1]), s(&[0, 1])],
        )
        .expect("b4sp"),
    )
}

/// Sierpiński space as a point-set cover.
pub fn sierpinski() -> FormalTopology {
    point_set_cover(
        &PointSetSpace::new(&["x", "y"], &["bx", "bxy"], vec![s(&[0]), s(&[0, 1])])
            .expect("sierpinski"),
    )
}

/// Three points, every nonempty interval of `x, y, z` as a basic open.
pub fn intervals3() -> FormalTopology {
    point_set_cover(
        &PointSetSpace::new(
            &["x", "y", "z"],
            &["x", "y", "z", "xy", "yz", "xyz"],
            vec![s(&[0]), s(&[1]), s(&[2]), s(&[0, 1]), s(&[1, 2]), s(&[0, 1, 2])],
        )
        .expect("intervals"),
    )
}

/// Discrete cover on a two-element antichain.
pub fn discrete2() -> FormalTopology {
    generate_from_axioms(&antichain2(), CoverAxioms::empty(2)).expect("discrete")
}

/// `0 < h < 1` with the axiom `1 ◁ {h}`.
pub fn chain3_axiom() -> FormalTopology {
    generate_from_axioms(&chain3(), CoverAxioms::empty(3).with(2, s(&[1]))).expect("axioms")
}

/// Three atoms under a top `t`, with `t ◁ {a, b}`.
pub fn fan_axiom() -> FormalTopology {
    let p = Poset::from_pairs(named(&["a", "b", "c", "t"]), &[(0, 3), (1, 3), (2, 3)])
        .expect("fan");
    generate_from_axioms(&p, CoverAxioms::empty(4).with(3, s(&[0, 1]))).expect("axioms")
}

/// The trivial space: `0 < h < 1` with `1 ◁ ∅`.
pub fn trivial3() -> FormalTopology {
    generate_from_axioms(&chain3(), CoverAxioms::empty(3).with(2, Subset::EMPTY))
        .expect("axioms")
}

/// Posets whose MacNeille cover is checked against the completion properties.
pub fn posets() -> Vec<(&'static str, Poset)> {
    vec![
        ("chain2", chain2()),
        ("chain3", chain3()),
        ("chain4", Poset::chain(&["0", "1", "2", "3"])),
        ("antichain2", antichain2()),
        ("antichain3", Poset::antichain(&["a", "b", "c"])),
        ("boolean-square", boolean_square()),
        ("vee", vee()),
        ("pentagon", pentagon()),
        ("diamond", diamond()),
        ("bowtie", bowtie()),
    ]
}

/// Posets in [`posets`] that are complete lattices.
pub fn complete_lattices() -> Vec<(&'static str, Poset)> {
    posets()
        .into_iter()
        .filter(|(_, p)| p.analyze_lattice().is_lattice() && !p.is_empty())
        .collect()
}

/// Valid spaces with at most six base elements, mixing MacNeille covers,
/// point-set covers, axiom-generated covers and derived spaces.
pub fn spaces() -> Vec<(&'static str, FormalTopology)> {
    let ch3 = dm_chain3();
    vec![
        ("sdm", sdm()),
        ("dm-chain3", ch3.clone()),
        ("dm-chain4", dm_cover(&Poset::chain(&["0", "1", "2", "3"]))),
        ("dm-antichain2", dm_cover(&antichain2())),
        ("dm-boolean-square", dm_cover(&boolean_square())),
        ("dm-vee", dm_cover(&vee())),
        ("double-negation", double_negation_space()),
        ("one-point", one_point_space()),
        ("ndm5", ndm5()),
        ("b4sp", b4sp()),
        ("sierpinski", sierpinski()),
        ("intervals3", intervals3()),
        ("discrete2", discrete2()),
        ("chain3-axiom", chain3_axiom()),
        ("fan-axiom", fan_axiom()),
        ("trivial3", trivial3()),
        ("closed-dm-chain3", closed_subspace(&ch3, s(&[1])).expect("closed")),
        ("top-discrete2", adjoin_top(&discrete2()).expect("top")),
    ]
}

/// Looks up a builtin space by name.
pub fn builtin(name: &str) -> Option<FormalTopology> {
    spaces()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, space)| space)
}
