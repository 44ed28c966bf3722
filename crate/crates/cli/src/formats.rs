//! Context and database file formats.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use triclique_core::{Axis, Mrd, TriContext};

use crate::CliError;

/// Structured context document; the only format that can hold isolated entities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextDoc {
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub conditions: Vec<String>,
    pub triples: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MrdDoc {
    pub entity_types: Vec<String>,
    pub entities: BTreeMap<String, Vec<String>>,
    pub relationship_types: Vec<[String; 2]>,
    pub edges: Vec<[String; 2]>,
}

/// What an input file turned out to contain.
#[derive(Debug, Clone)]
pub enum Input {
    Context(TriContext),
    Mrd(Mrd),
}

fn parse_err(e: impl std::fmt::Display) -> CliError {
    CliError::Parse(e.to_string())
}

impl ContextDoc {
    pub fn into_context(self) -> Result<TriContext, CliError> {
        let idx = |ls: &[String], axis: Axis, l: &str| {
            ls.iter()
                .position(|x| x == l)
                .ok_or_else(|| CliError::Parse(format!("triple mentions undeclared {} `{l}`", axis.name())))
        };
        let mut t = Vec::with_capacity(self.triples.len());
        for [g, m, b] in &self.triples {
            t.push((
                idx(&self.objects, Axis::Object, g)?,
                idx(&self.attributes, Axis::Attribute, m)?,
                idx(&self.conditions, Axis::Condition, b)?,
            ));
        }
        Ok(TriContext::new(self.objects, self.attributes, self.conditions, &t)?)
    }

    pub fn from_context(ctx: &TriContext) -> Self {
        let l = |a: Axis| ctx.labels(a).to_vec();
        ContextDoc {
            objects: l(Axis::Object),
            attributes: l(Axis::Attribute),
            conditions: l(Axis::Condition),
            triples: ctx
                .triples()
                .map(|(g, m, b)| {
                    [
                        ctx.labels(Axis::Object)[g].clone(),
                        ctx.labels(Axis::Attribute)[m].clone(),
                        ctx.labels(Axis::Condition)[b].clone(),
                    ]
                })
                .collect(),
        }
    }
}

impl MrdDoc {
    pub fn into_mrd(self) -> Result<Mrd, CliError> {
        for t in self.entities.keys() {
            if !self.entity_types.contains(t) {
                return Err(CliError::Parse(format!("entities listed for undeclared type `{t}`")));
            }
        }
        let mut b = Mrd::builder(&self.entity_types);
        for t in &self.entity_types {
            for l in self.entities.get(t).into_iter().flatten() {
                b = b.entity(t, l);
            }
        }
        for [x, y] in &self.relationship_types {
            b = b.relationship(x, y);
        }
        let split = |s: &str| -> Result<(String, String), CliError> {
            s.split_once(':')
                .map(|(t, l)| (t.to_string(), l.to_string()))
                .ok_or_else(|| CliError::Parse(format!("edge endpoint `{s}` is not `type:label`")))
        };
        for [x, y] in &self.edges {
            let (a, b2) = (split(x)?, split(y)?);
            b = b.edge((&a.0, &a.1), (&b2.0, &b2.1));
        }
        Ok(b.build()?)
    }

    pub fn from_mrd(m: &Mrd) -> Self {
        let mut entities: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for t in m.types() {
            entities.insert(t.clone(), Vec::new());
        }
        for e in 0..m.len() {
            entities
                .get_mut(&m.types()[m.entity_type(e)])
                .expect("declared type")
                .push(m.label(e).to_string());
        }
        MrdDoc {
            entity_types: m.types().to_vec(),
            entities,
            relationship_types: m
                .relationship_types()
                .into_iter()
                .map(|(a, b)| [m.types()[a].clone(), m.types()[b].clone()])
                .collect(),
            edges: m
                .edges()
                .into_iter()
                .map(|(a, b)| [m.qualified(a), m.qualified(b)])
                .collect(),
        }
    }
}

/// One `object,attribute,condition` triple per line; `#` starts a comment.
/// Entities are declared in order of first appearance.
pub fn parse_csv(text: &str) -> Result<TriContext, CliError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut labels: [Vec<String>; 3] = Default::default();
    let mut triples = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(parse_err)?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.len() == 1 && rec[0].is_empty() {
            continue;
        }
        if rec.len() != 3 || rec.iter().any(str::is_empty) {
            return Err(CliError::Parse(format!(
                "line {line}: expected `object,attribute,condition`"
            )));
        }
        let mut t = [0; 3];
        for (i, field) in rec.iter().enumerate() {
            t[i] = match labels[i].iter().position(|l| l == field) {
                Some(p) => p,
                None => {
                    labels[i].push(field.to_string());
                    labels[i].len() - 1
                }
            };
        }
        triples.push((t[0], t[1], t[2]));
    }
    let [g, m, b] = labels;
    Ok(TriContext::new(g, m, b, &triples)?)
}

/// Structured documents start with `{`; anything else is read as CSV.
pub fn parse_input(text: &str) -> Result<Input, CliError> {
    if text.trim_start().starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(text).map_err(parse_err)?;
        if v.get("entity_types").is_some() {
            let doc: MrdDoc = serde_json::from_value(v).map_err(parse_err)?;
            Ok(Input::Mrd(doc.into_mrd()?))
        } else {
            let doc: ContextDoc = serde_json::from_value(v).map_err(parse_err)?;
            Ok(Input::Context(doc.into_context()?))
        }
    } else {
        Ok(Input::Context(parse_csv(text)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use triclique_core::fixtures;

    #[test]
    fn csv_with_comments() {
        let k = parse_csv("# K\nu1,t1,r1\n\n u2 , t1 ,r1\n# done\n").unwrap();
        assert_eq!(k.sizes(), [2, 1, 1]);
        assert_eq!(k.incidence_len(), 2);
    }

    #[test]
    fn csv_rejects_short_rows() {
        assert!(matches!(parse_csv("u1,t1\n"), Err(CliError::Parse(_))));
        assert!(matches!(parse_csv("u1,,r1\n"), Err(CliError::Parse(_))));
    }

    #[test]
    fn context_doc_round_trip() {
        let k = fixtures::closed_non_maximal();
        let doc = ContextDoc::from_context(&k);
        assert_eq!(doc.conditions.len(), 3);
        assert_eq!(doc.clone().into_context().unwrap(), k);
    }

    #[test]
    fn mrd_doc_round_trip() {
        let m = fixtures::idempotency_left();
        let doc = MrdDoc::from_mrd(&m);
        assert_eq!(doc.into_mrd().unwrap(), m);
    }

    #[test]
    fn detects_kind() {
        let ctx = r#"{"objects":["a"],"attributes":["b"],"conditions":["c"],"triples":[["a","b","c"]]}"#;
        assert!(matches!(parse_input(ctx), Ok(Input::Context(_))));
        let mrd = r#"{"entity_types":["x","y"],"entities":{"x":["a"],"y":["b"]},"relationship_types":[["x","y"]],"edges":[["x:a","y:b"]]}"#;
        assert!(matches!(parse_input(mrd), Ok(Input::Mrd(_))));
        let bad = r#"{"objects":["a"],"attributes":[],"conditions":[],"triples":[["a","b","c"]]}"#;
        assert!(matches!(parse_input(bad), Err(CliError::Parse(_))));
    }
}
