use std::fmt::Write;

use super::document::Document;
use crate::config::Config;
use crate::cover::{
    adjoin_top, booleanization, closed_subspace, dm_cover, extract_presentation, FormalTopology,
};
use crate::frame::{beta_cover, enumerate_frame, minimal_subcover, LawReport};
use crate::maps::{canonical_positivity, enumerate_points, find_isomorphism};
use crate::subset::Subset;
use crate::{Error, Result};

/// Flags of `ftw analyze`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub laws: bool,
    pub points: bool,
    /// List every frame element, not just the summary.
    pub frame: bool,
    pub presentation: bool,
    pub booleanize: bool,
    pub beta: bool,
    /// Element names spanning the closed complement.
    pub closed: Option<Vec<String>>,
    pub adjoin_top: bool,
    /// Analyze the MacNeille cover of a poset document instead of its
    /// down-set cover.
    pub complete: bool,
    pub max_base: Option<usize>,
}

impl AnalyzeOptions {
    pub fn config(&self) -> Config {
        match self.max_base {
            Some(n) => Config::default().with_max_base(n),
            None => Config::default(),
        }
    }
}

/// Builds the document's space and renders the requested analyses.
pub fn run_analyze(doc: &Document, opts: &AnalyzeOptions) -> Result<String> {
    let config = opts.config();
    let space = if opts.complete {
        let poset = doc.poset(config)?.ok_or_else(|| {
            Error::Semantic("--complete needs a poset or axioms document".into())
        })?;
        dm_cover(&poset).with_config(config)
    } else {
        doc.build(config)?
    };
    let mut out = String::new();
    section(&mut out, &space, opts)?;

    if let Some(names) = &opts.closed {
        let v = names
            .iter()
            .map(|n| {
                space
                    .index_of(n)
                    .ok_or_else(|| Error::Semantic(format!("undeclared element {n:?}")))
            })
            .collect::<Result<Subset>>()?;
        out.push_str(&format!("\n== closed {} ==\n", space.display(v)));
        section(&mut out, &closed_subspace(&space, v)?, opts)?;
    }
    if opts.booleanize {
        out.push_str("\n== booleanization ==\n");
        section(&mut out, &booleanization(&space), opts)?;
    }
    if opts.beta {
        out.push_str("\n== beta ==\n");
        let beta = beta_cover(&space)?;
        config.check_base(beta.len())?;
        section(&mut out, &beta, opts)?;
        let witness = minimal_subcover(&beta, beta.base())?;
        let parts: Vec<String> = witness.iter().map(|u| beta.display(*u)).collect();
        writeln!(out, "compact-witness {}", parts.join(" ")).unwrap();
    }
    if opts.adjoin_top {
        out.push_str("\n== adjoin-top ==\n");
        config.check_base(space.len() + 1)?;
        section(&mut out, &adjoin_top(&space)?, opts)?;
    }
    Ok(out)
}

fn section(out: &mut String, space: &FormalTopology, opts: &AnalyzeOptions) -> Result<()> {
    let labels = space.labels();
    let top = space.top().map_or("-", |t| labels[t].as_str());
    writeln!(
        out,
        "space kind={} base={} top={} nontrivial={}",
        space.kind().name(),
        space.len(),
        top,
        space.is_nontrivial()
    )
    .unwrap();
    writeln!(out, "elements {}", space.display(space.base())).unwrap();
    match space.validate_axioms() {
        Ok(()) => out.push_str("axioms valid=true\n"),
        Err(Error::InvalidCover(v)) => {
            writeln!(out, "axioms valid=false {}", v.render(labels)).unwrap()
        }
        Err(e) => return Err(e),
    }

    let frame = enumerate_frame(space)?;
    writeln!(
        out,
        "frame size={} bottom={} top={}",
        frame.len(),
        space.display(frame.bottom()),
        space.display(frame.top())
    )
    .unwrap();
    if opts.frame {
        for &u in frame.elements() {
            writeln!(out, "element {}", space.display(u)).unwrap();
        }
    }
    if opts.laws {
        out.push_str(&LawReport::of(&frame).render(labels));
        let (pos, verdict) = canonical_positivity(space)?;
        writeln!(
            out,
            "positivity pos={} monotone={} positive={}",
            space.display(pos.pos),
            verdict.monotone.is_ok(),
            verdict.positive.is_ok()
        )
        .unwrap();
    }
    if opts.points {
        let points = enumerate_points(space)?;
        writeln!(out, "points count={}", points.len()).unwrap();
        for p in points {
            writeln!(out, "point {}", space.display(p.alpha)).unwrap();
        }
    }
    if opts.presentation {
        let axioms = extract_presentation(space)?;
        for (a, label) in labels.iter().enumerate() {
            let covers: Vec<String> = axioms.of(a).iter().map(|u| space.display(*u)).collect();
            writeln!(out, "cover {label} <| {}", covers.join(" ")).unwrap();
        }
    }
    Ok(())
}

/// Decides whether two documents denote isomorphic spaces and prints the
/// witnessing morphisms.
pub fn run_iso(a: &Document, b: &Document, config: Config) -> Result<String> {
    let s1 = a.build(config)?;
    let s2 = b.build(config)?;
    match find_isomorphism(&s1, &s2)? {
        None => Ok("isomorphic=false\n".to_string()),
        Some((f, g)) => Ok(format!(
            "isomorphic=true\nforward:\n{}backward:\n{}",
            f.render(),
            g.render()
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workbench::parse_document;

    fn analyze(text: &str, opts: AnalyzeOptions) -> String {
        run_analyze(&parse_document(text).unwrap(), &opts).unwrap()
    }

    const CH3: &str = r#"{"kind":"poset","elements":["0","h","1"],"le":[["0","h"],["h","1"]]}"#;

    #[test]
    fn chain_completion_laws() {
        let opts = AnalyzeOptions {
            laws: true,
            complete: true,
            ..Default::default()
        };
        let report = analyze(CH3, opts);
        assert!(report.contains("law=de_morgan holds=true"), "{report}");
        assert!(report.contains("law=boolean holds=false witness={0,h}"), "{report}");
        assert!(report.contains("frame size=3"), "{report}");
    }

    #[test]
    fn double_negation_point() {
        let opts = AnalyzeOptions {
            points: true,
            ..Default::default()
        };
        let report = analyze(r#"{"kind":"builtin","name":"double-negation"}"#, opts);
        assert!(report.contains("points count=1\npoint {⊤}\n"), "{report}");
    }

    #[test]
    fn ndm5_fails_de_morgan() {
        let opts = AnalyzeOptions {
            laws: true,
            ..Default::default()
        };
        let report = analyze(r#"{"kind":"builtin","name":"ndm5"}"#, opts);
        assert!(report.contains("law=de_morgan holds=false witness={bx}"), "{report}");
        assert!(report.contains("law=strongly_de_morgan holds=false witness=({bx},{by})"));
    }

    #[test]
    fn invalid_table_is_reported() {
        let text = r#"{"kind":"table","elements":["a"],
            "sat":[{"of":[],"is":[]},{"of":["a"],"is":[]}]}"#;
        let report = analyze(text, AnalyzeOptions::default());
        assert!(report.contains("axioms valid=false axiom=i a=a U={a}"), "{report}");
    }

    #[test]
    fn derivation_sections() {
        let opts = AnalyzeOptions {
            laws: true,
            points: true,
            frame: true,
            presentation: true,
            booleanize: true,
            beta: true,
            closed: Some(vec!["h".into()]),
            adjoin_top: true,
            complete: true,
            max_base: None,
        };
        let report = analyze(CH3, opts.clone());
        for header in ["== closed {h} ==", "== booleanization ==", "== beta ==", "== adjoin-top =="] {
            assert!(report.contains(header), "{report}");
        }
        assert!(report.contains("compact-witness {{0,h,1}}"), "{report}");
        assert_eq!(report, analyze(CH3, opts));
    }

    #[test]
    fn size_cap_is_refused() {
        let opts = AnalyzeOptions {
            max_base: Some(2),
            ..Default::default()
        };
        let err = run_analyze(&parse_document(CH3).unwrap(), &opts).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn iso_report() {
        let a = parse_document(r#"{"kind":"builtin","name":"sdm"}"#).unwrap();
        let b = parse_document(r#"{"kind":"builtin","name":"double-negation"}"#).unwrap();
        let out = run_iso(&a, &b, Config::default()).unwrap();
        assert!(out.starts_with("isomorphic=true\nforward:\n"), "{out}");
        let c = parse_document(r#"{"kind":"builtin","name":"ndm5"}"#).unwrap();
        assert_eq!(run_iso(&a, &c, Config::default()).unwrap(), "isomorphic=false\n");
    }
}
