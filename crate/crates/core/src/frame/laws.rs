use super::{enumerate_frame, Frame};
use crate::cover::FormalTopology;
use crate::exec;
use crate::subset::Subset;
use crate::Result;

/// Outcome of one law. A failing law carries the canonically least
/// counterexample among frame elements (a single element, or a pair for the
/// two-variable law).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub holds: bool,
    pub witness: Option<Vec<Subset>>,
}

impl LawCheck {
    fn from_witness(witness: Option<Vec<Subset>>) -> Self {
        LawCheck {
            holds: witness.is_none(),
            witness,
        }
    }

    /// `-`, `{a,b}` or `({a},{b})`.
    pub fn render_witness<S: AsRef<str>>(&self, labels: &[S]) -> String {
        match self.witness.as_deref() {
            None => "-".to_string(),
            Some([u]) => u.display(labels).to_string(),
            Some(many) => {
                let parts: Vec<String> =
                    many.iter().map(|u| u.display(labels).to_string()).collect();
                format!("({})", parts.join(","))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub nontrivial: LawCheck,
    pub boolean: LawCheck,
    pub de_morgan: LawCheck,
    pub strongly_de_morgan: LawCheck,
}

impl LawReport {
    pub fn of(frame: &Frame) -> Self {
        LawReport {
            nontrivial: frame.nontrivial_law(),
            boolean: frame.boolean_law(),
            de_morgan: frame.de_morgan_law(),
            strongly_de_morgan: frame.strongly_de_morgan_law(),
        }
    }

    pub fn of_space(space: &FormalTopology) -> Result<Self> {
        Ok(LawReport::of(&enumerate_frame(space)?))
    }

    /// One `law=<name> holds=<bool> witness=<...>` line per law.
    pub fn render<S: AsRef<str>>(&self, labels: &[S]) -> String {
        let mut out = String::new();
        for (name, check) in self.entries() {
            out.push_str(&format!(
                "law={name} holds={} witness={}\n",
                check.holds,
                check.render_witness(labels)
            ));
        }
        out
    }

    pub fn entries(&self) -> [(&'static str, &LawCheck); 4] {
        [
            ("nontrivial", &self.nontrivial),
            ("boolean", &self.boolean),
            ("de_morgan", &self.de_morgan),
            ("strongly_de_morgan", &self.strongly_de_morgan),
        ]
    }
}

impl Frame {
    fn first_failing<F>(&self, fails: F) -> Option<Vec<Subset>>
    where
        F: Fn(Subset) -> bool + Sync + Send,
    {
        let par = self.space.config().parallel;
        exec::find_first(par, self.len() as u64, |i| {
            let u = self.elements[i as usize];
            fails(u).then(|| vec![u])
        })
    }

    /// `¬(S ◁ ∅)`; a trivial space is witnessed by the empty subset.
    pub fn nontrivial_law(&self) -> LawCheck {
        let trivial = self.bottom() == self.top();
        LawCheck::from_witness(trivial.then(|| vec![Subset::EMPTY]))
    }

    /// `S =_S U ∪ U*` for every element.
    pub fn boolean_law(&self) -> LawCheck {
        let top = self.top();
        LawCheck::from_witness(self.first_failing(|u| {
            !self.space.subsets_equal(top, u | self.pseudo(u))
        }))
    }

    /// `S ◁ U** ∪ U*` for every element.
    pub fn de_morgan_law(&self) -> LawCheck {
        let top = self.top();
        LawCheck::from_witness(self.first_failing(|u| {
            let star = self.pseudo(u);
            !self.space.covers_set(top, self.pseudo(star) | star)
        }))
    }

    /// `(U → V) ∨ (V → U) = S` for every pair of elements.
    pub fn strongly_de_morgan_law(&self) -> LawCheck {
        let n = self.len() as u64;
        let top = self.top();
        let par = self.space.config().parallel;
        let witness = exec::find_first(par, n * n, |k| {
            let u = self.elements[(k / n) as usize];
            let v = self.elements[(k % n) as usize];
            let j = self.join(self.arrow(u, v), self.arrow(v, u));
            (j != top).then(|| vec![u, v])
        });
        LawCheck::from_witness(witness)
    }
}

pub fn is_nontrivial(space: &FormalTopology) -> bool {
    space.is_nontrivial()
}

pub fn is_boolean(space: &FormalTopology) -> Result<LawCheck> {
    Ok(enumerate_frame(space)?.boolean_law())
}

pub fn is_de_morgan(space: &FormalTopology) -> Result<LawCheck> {
    Ok(enumerate_frame(space)?.de_morgan_law())
}

pub fn is_strongly_de_morgan(space: &FormalTopology) -> Result<LawCheck> {
    Ok(enumerate_frame(space)?.strongly_de_morgan_law())
}
