use crate::cover::FormalTopology;
use crate::exec;
use crate::subset::Subset;
use crate::Result;

/// A formal point: an inhabited, filtering subset that splits every cover
/// of its members.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormalPoint {
    pub alpha: Subset,
}

/// Point axioms for `alpha`.
///
/// Axiom iii is checked against the single cover `S ∖ α`: any `U` missing
/// `α` lies inside it, so by monotonicity no member of `α` may be covered by
/// it.
pub fn is_point(space: &FormalTopology, alpha: Subset) -> bool {
    if alpha.is_empty() {
        return false;
    }
    let filtering = alpha.iter().all(|a| {
        alpha.iter().all(|b| {
            let meet = space.wedge(Subset::singleton(a), Subset::singleton(b));
            meet.intersects(alpha)
        })
    });
    filtering && !space.saturate(space.base() - alpha).intersects(alpha)
}

/// Every formal point, in canonical order.
pub fn enumerate_points(space: &FormalTopology) -> Result<Vec<FormalPoint>> {
    space.config().check_base(space.len())?;
    let par = space.config().parallel;
    let mut points = exec::filter_map(par, 1u64 << space.len(), |bits| {
        let alpha = Subset::from_bits(bits);
        is_point(space, alpha).then_some(FormalPoint { alpha })
    });
    points.sort();
    Ok(points)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PositivityPredicate {
    pub pos: Subset,
}

/// Result of checking the two positivity axioms; each failure carries the
/// offending `(a, U)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PositivityVerdict {
    pub monotone: Result<(), (usize, Subset)>,
    pub positive: Result<(), (usize, Subset)>,
}

impl PositivityVerdict {
    pub fn is_valid(&self) -> bool {
        self.monotone.is_ok() && self.positive.is_ok()
    }
}

/// Checks monotonicity (`Pos(a)`, `a ◁ U` ⇒ `U` meets `Pos`) and positivity
/// (`a ◁ U` ⇒ `a ◁ U ∩ Pos`) over every subset.
pub fn check_positivity(space: &FormalTopology, pos: Subset) -> Result<PositivityVerdict> {
    space.config().check_base(space.len())?;
    let par = space.config().parallel;
    let count = 1u64 << space.len();
    let monotone = exec::find_first(par, count, |bits| {
        let u = Subset::from_bits(bits);
        if u.intersects(pos) {
            return None;
        }
        (space.saturate(u) & pos).first().map(|a| (a, u))
    });
    let positive = exec::find_first(par, count, |bits| {
        let u = Subset::from_bits(bits);
        (space.saturate(u) - space.saturate(u & pos))
            .first()
            .map(|a| (a, u))
    });
    Ok(PositivityVerdict {
        monotone: monotone.map_or(Ok(()), Err),
        positive: positive.map_or(Ok(()), Err),
    })
}

/// The classical positivity predicate `Pos(a) ≡ ¬(a ◁ ∅)` with its verdict.
pub fn canonical_positivity(
    space: &FormalTopology,
) -> Result<(PositivityPredicate, PositivityVerdict)> {
    let pos = space.base() - space.saturate(Subset::EMPTY);
    let verdict = check_positivity(space, pos)?;
    Ok((PositivityPredicate { pos }, verdict))
}
