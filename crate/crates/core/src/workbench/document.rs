use std::collections::{BTreeMap, HashMap};

use serde::Deserialize;
use serde_json::value::RawValue;

use crate::config::Config;
use crate::cover::{
    adjoin_top, booleanization, closed_subspace, dm_cover, generate_from_axioms,
    point_set_cover, CoverAxioms, FormalTopology, PointSetSpace,
};
use crate::frame::beta_cover;
use crate::order::Poset;
use crate::subset::Subset;
use crate::{corpus, Error, Result};

/// One input file. Orders are given by generating pairs `[a, b]` meaning
/// `a <= b`; their reflexive-transitive closure is taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Poset {
        elements: Vec<String>,
        le: Vec<(String, String)>,
    },
    Axioms {
        elements: Vec<String>,
        le: Vec<(String, String)>,
        /// Element name to its list of covering subsets.
        axioms: BTreeMap<String, Vec<Vec<String>>>,
    },
    Pointset {
        points: Vec<String>,
        elements: Vec<String>,
        extent: BTreeMap<String, Vec<String>>,
    },
    Table {
        elements: Vec<String>,
        sat: Vec<TableEntry>,
    },
    Derived {
        parent: Box<Document>,
        derivation: Derivation,
    },
    Builtin {
        name: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub of: Vec<String>,
    pub is: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Derivation {
    /// MacNeille cover of a poset parent.
    Complete,
    Booleanization,
    Beta,
    AdjoinTop,
    Closed(Vec<String>),
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Poset,
    Axioms,
    Pointset,
    Table,
    Derived,
    Builtin,
}

#[derive(Deserialize)]
struct Head {
    kind: Kind,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetDoc {
    #[allow(dead_code)]
    kind: String,
    elements: Vec<String>,
    #[serde(default)]
    le: Vec<(String, String)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AxiomsDoc {
    #[allow(dead_code)]
    kind: String,
    elements: Vec<String>,
    #[serde(default)]
    le: Vec<(String, String)>,
    axioms: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointsetDoc {
    #[allow(dead_code)]
    kind: String,
    points: Vec<String>,
    elements: Vec<String>,
    extent: BTreeMap<String, Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    #[allow(dead_code)]
    kind: String,
    elements: Vec<String>,
    sat: Vec<TableEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DerivedDoc<'a> {
    #[allow(dead_code)]
    kind: String,
    #[serde(borrow)]
    parent: &'a RawValue,
    derivation: Derivation,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BuiltinDoc {
    #[allow(dead_code)]
    kind: String,
    name: String,
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses the JSON document format; syntax errors carry line and column.
pub fn parse_document(text: &str) -> Result<Document> {
    serde_json::from_str::<serde::de::IgnoredAny>(text).map_err(parse_error)?;
    let head: Head = serde_json::from_str(text).map_err(parse_error)?;
    let doc = match head.kind {
        Kind::Poset => {
            let d: PosetDoc = serde_json::from_str(text).map_err(parse_error)?;
            Document::Poset {
                elements: d.elements,
                le: d.le,
            }
        }
        Kind::Axioms => {
            let d: AxiomsDoc = serde_json::from_str(text).map_err(parse_error)?;
            Document::Axioms {
                elements: d.elements,
                le: d.le,
                axioms: d.axioms,
            }
        }
        Kind::Pointset => {
            let d: PointsetDoc = serde_json::from_str(text).map_err(parse_error)?;
            Document::Pointset {
                points: d.points,
                elements: d.elements,
                extent: d.extent,
            }
        }
        Kind::Table => {
            let d: TableDoc = serde_json::from_str(text).map_err(parse_error)?;
            Document::Table {
                elements: d.elements,
                sat: d.sat,
            }
        }
        Kind::Derived => {
            let d: DerivedDoc = serde_json::from_str(text).map_err(parse_error)?;
            let inner = d.parent.get();
            let offset = inner.as_ptr() as usize - text.as_ptr() as usize;
            let parent = parse_document(inner).map_err(|e| relocate(e, &text[..offset]))?;
            Document::Derived {
                parent: Box::new(parent),
                derivation: d.derivation,
            }
        }
        Kind::Builtin => {
            let d: BuiltinDoc = serde_json::from_str(text).map_err(parse_error)?;
            Document::Builtin { name: d.name }
        }
    };
    Ok(doc)
}

/// Shifts a position reported inside a nested slice by the text preceding it.
fn relocate(err: Error, before: &str) -> Error {
    match err {
        Error::Parse {
            line,
            column,
            message,
        } => {
            let lines_before = before.matches('\n').count();
            let tail = before.rsplit('\n').next().unwrap_or("").len();
            let (new_line, new_col) = if line <= 1 {
                (line + lines_before, column + tail)
            } else {
                (line + lines_before, column)
            };
            let message = match message.rfind(" at line ") {
                Some(i) => format!("{} at line {new_line} column {new_col}", &message[..i]),
                None => message,
            };
            Error::Parse {
                line: new_line,
                column: new_col,
                message,
            }
        }
        other => other,
    }
}

struct Names<'a> {
    index: HashMap<&'a str, usize>,
    what: &'static str,
}

impl<'a> Names<'a> {
    fn new(names: &'a [String], what: &'static str) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::Semantic(format!("empty {what} name")));
            }
            if index.insert(n.as_str(), i).is_some() {
                return Err(Error::Semantic(format!("duplicate {what} {n:?}")));
            }
        }
        Ok(Names { index, what })
    }

    fn get(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::Semantic(format!("undeclared {} {name:?}", self.what)))
    }

    fn subset(&self, names: &[String]) -> Result<Subset> {
        names.iter().map(|n| self.get(n)).collect()
    }
}

fn build_poset(elements: &[String], le: &[(String, String)]) -> Result<Poset> {
    let names = Names::new(elements, "element")?;
    let pairs = le
        .iter()
        .map(|(a, b)| Ok((names.get(a)?, names.get(b)?)))
        .collect::<Result<Vec<_>>>()?;
    Poset::from_pairs(elements.to_vec(), &pairs)
}

impl Document {
    /// The order carried by `poset` and `axioms` documents.
    pub fn poset(&self, config: Config) -> Result<Option<Poset>> {
        match self {
            Document::Poset { elements, le } | Document::Axioms { elements, le, .. } => {
                config.check_base(elements.len())?;
                build_poset(elements, le).map(Some)
            }
            _ => Ok(None),
        }
    }

    /// Builds the described space. A bare poset denotes its down-set cover
    /// (`a ◁ U` iff `a ≤ u` for some `u ∈ U`).
    pub fn build(&self, config: Config) -> Result<FormalTopology> {
        let space = match self {
            Document::Poset { .. } => {
                let poset = self.poset(config)?.expect("poset document");
                let n = poset.len();
                generate_from_axioms(&poset, CoverAxioms::empty(n))?
            }
            Document::Axioms {
                elements, axioms, ..
            } => {
                let poset = self.poset(config)?.expect("axioms document");
                let names = Names::new(elements, "element")?;
                let mut ax = CoverAxioms::empty(elements.len());
                for (name, covers) in axioms {
                    let a = names.get(name)?;
                    for cover in covers {
                        ax = ax.with(a, names.subset(cover)?);
                    }
                }
                generate_from_axioms(&poset, ax)?
            }
            Document::Pointset {
                points,
                elements,
                extent,
            } => {
                config.check_base(elements.len())?;
                let point_names = Names::new(points, "point")?;
                let names = Names::new(elements, "element")?;
                let mut extents = vec![None; elements.len()];
                for (name, ext) in extent {
                    extents[names.get(name)?] = Some(point_names.subset(ext)?);
                }
                let extents = extents
                    .into_iter()
                    .zip(elements)
                    .map(|(e, name)| {
                        e.ok_or_else(|| Error::Semantic(format!("no extent for element {name:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                point_set_cover(&PointSetSpace::new(points, elements, extents)?)
            }
            Document::Table { elements, sat } => {
                config.check_base(elements.len())?;
                let names = Names::new(elements, "element")?;
                let n = elements.len();
                let mut table: Vec<Option<Subset>> = vec![None; 1 << n];
                for entry in sat {
                    let of = names.subset(&entry.of)?;
                    let is = names.subset(&entry.is)?;
                    let slot = &mut table[of.bits() as usize];
                    if slot.is_some() {
                        return Err(Error::Semantic(format!(
                            "saturation of {} given twice",
                            of.display(elements)
                        )));
                    }
                    *slot = Some(is);
                }
                let table = table
                    .into_iter()
                    .enumerate()
                    .map(|(bits, s)| {
                        s.ok_or_else(|| {
                            Error::Semantic(format!(
                                "missing saturation of {}",
                                Subset::from_bits(bits as u64).display(elements)
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                FormalTopology::from_table(elements, table)?
            }
            Document::Derived { parent, derivation } => {
                let base = parent.build(config)?;
                match derivation {
                    Derivation::Complete => {
                        let poset = parent.poset(config)?.ok_or_else(|| {
                            Error::Semantic("completion needs a poset or axioms parent".into())
                        })?;
                        dm_cover(&poset)
                    }
                    Derivation::Booleanization => booleanization(&base),
                    Derivation::Beta => {
                        let beta = beta_cover(&base)?;
                        config.check_base(beta.len())?;
                        beta
                    }
                    Derivation::AdjoinTop => {
                        config.check_base(base.len() + 1)?;
                        adjoin_top(&base)?
                    }
                    Derivation::Closed(names) => {
                        let v = Names::new(base.labels(), "element")?.subset(names)?;
                        closed_subspace(&base, v)?
                    }
                }
            }
            Document::Builtin { name } => corpus::builtin(name)
                .ok_or_else(|| Error::Semantic(format!("unknown builtin {name:?}")))?,
        };
        config.check_base(space.len())?;
        Ok(space.with_config(config))
    }
}

/// Serializes any space as a `table` document listing `sat(U)` for every
/// subset in bitmask order.
pub fn to_table_document(space: &FormalTopology) -> Result<String> {
    let table = space.saturation_table()?;
    let labels = space.labels();
    let names = |u: Subset| -> String {
        let items: Vec<String> = u
            .iter()
            .map(|i| serde_json::to_string(&labels[i]).expect("strings serialize"))
            .collect();
        format!("[{}]", items.join(","))
    };
    let mut out = String::from("{\"kind\":\"table\",\"elements\":");
    out.push_str(&names(space.base()));
    out.push_str(",\"sat\":[\n");
    for (bits, sat) in table.iter().enumerate() {
        let sep = if bits + 1 == table.len() { "" } else { "," };
        out.push_str(&format!(
            "  {{\"of\":{},\"is\":{}}}{sep}\n",
            names(Subset::from_bits(bits as u64)),
            names(*sat)
        ));
    }
    out.push_str("]}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_document_is_closed() {
        let doc = parse_document(
            r#"{"kind":"poset","elements":["0","h","1"],"le":[["0","h"],["h","1"]]}"#,
        )
        .unwrap();
        let p = doc.poset(Config::default()).unwrap().unwrap();
        assert_eq!(p, corpus::chain3());
        assert!(p.le(0, 2));
    }

    #[test]
    fn builtin_double_negation() {
        let doc = parse_document(r#"{"kind":"builtin","name":"double-negation"}"#).unwrap();
        let space = doc.build(Config::default()).unwrap();
        assert_eq!(space.labels(), &["⊤".to_string()]);
        assert!(!space.covers(0, Subset::EMPTY));
    }

    #[test]
    fn undeclared_name_is_reported() {
        let doc = parse_document(
            r#"{"kind":"poset","elements":["0","h"],"le":[["0","q"]]}"#,
        )
        .unwrap();
        let err = doc.build(Config::default()).unwrap_err();
        assert!(matches!(&err, Error::Semantic(m) if m.contains("\"q\"")), "{err}");
    }

    #[test]
    fn syntax_errors_have_positions() {
        let err = parse_document("{\n  \"kind\": \"poset\",\n  \"elements\": [1]\n}").unwrap_err();
        let Error::Parse { line, .. } = err else {
            panic!("expected parse error")
        };
        assert_eq!(line, 3);
        assert!(parse_document(r#"{"kind":"nope"}"#).is_err());
        let nested = "{\"kind\":\"derived\",\"derivation\":\"beta\",\n \"parent\":{\"kind\":\"builtin\",\n   \"nme\":\"sdm\"}}";
        let Error::Parse { line, column, .. } = parse_document(nested).unwrap_err() else {
            panic!("expected parse error")
        };
        let flat = "{\"kind\":\"builtin\",\n\n   \"nme\":\"sdm\"}";
        let Error::Parse { line: l2, column: c2, .. } = parse_document(flat).unwrap_err() else {
            panic!("expected parse error")
        };
        assert_eq!((line, column), (l2, c2));
        assert_eq!(line, 3);
        assert!(parse_document(r#"{"kind":"builtin","name":"x","extra":1}"#).is_err());
    }

    #[test]
    fn derived_documents() {
        let doc = parse_document(
            r#"{"kind":"derived","derivation":{"closed":["h"]},
                "parent":{"kind":"derived","derivation":"complete",
                          "parent":{"kind":"poset","elements":["0","h","1"],
                                    "le":[["0","h"],["h","1"]]}}}"#,
        )
        .unwrap();
        let space = doc.build(Config::default()).unwrap();
        assert_eq!(space.saturate(Subset::EMPTY), Subset::from_indices([0, 1]));
    }

    #[test]
    fn pointset_and_axioms_documents() {
        let doc = parse_document(
            r#"{"kind":"pointset","points":["x","y"],"elements":["a","b"],
                "extent":{"a":["x"],"b":["x","y"]}}"#,
        )
        .unwrap();
        let space = doc.build(Config::default()).unwrap();
        assert!(space.same_cover(&FormalTopology::from_table(
            &["a", "b"],
            space.saturation_table().unwrap()
        ).unwrap()).unwrap());
        let doc = parse_document(
            r#"{"kind":"axioms","elements":["0","h","1"],"le":[["0","h"],["h","1"]],
                "axioms":{"1":[["h"]]}}"#,
        )
        .unwrap();
        let space = doc.build(Config::default()).unwrap();
        assert_eq!(space.saturate(Subset::singleton(1)), space.base());
        let missing = parse_document(
            r#"{"kind":"pointset","points":["x"],"elements":["a"],"extent":{}}"#,
        )
        .unwrap();
        assert!(missing.build(Config::default()).is_err());
    }

    #[test]
    fn size_cap_on_documents() {
        let names: Vec<String> = (0..20).map(|i| format!("\"e{i}\"")).collect();
        let text = format!(r#"{{"kind":"poset","elements":[{}]}}"#, names.join(","));
        let doc = parse_document(&text).unwrap();
        let err = doc.build(Config::default()).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(doc.build(Config::default().with_max_base(20)).is_ok());
    }

    #[test]
    fn table_round_trip() {
        for (_, space) in corpus::spaces() {
            let text = to_table_document(&space).unwrap();
            let again = parse_document(&text).unwrap().build(Config::default()).unwrap();
            assert_eq!(again.saturation_table().unwrap(), space.saturation_table().unwrap());
            assert_eq!(to_table_document(&again).unwrap(), text);
        }
    }

    #[test]
    fn incomplete_table_is_rejected() {
        let doc = parse_document(
            r#"{"kind":"table","elements":["a"],"sat":[{"of":[],"is":[]}]}"#,
        )
        .unwrap();
        let err = doc.build(Config::default()).unwrap_err();
        assert!(err.to_string().contains("missing saturation of {a}"));
    }
}
