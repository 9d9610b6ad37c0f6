//! Job files: the field, the quiver, the generator matrices and run options.

use std::collections::BTreeMap;

use invcat_core::action::DEFAULT_GROUP_CAP;
use invcat_core::field::{CyclotomicField, Field, FieldSpec, PrimeField, Rationals};
use invcat_core::quiver::{Quiver, VertexId, DEFAULT_PATH_CAP};
use serde::{Deserialize, Serialize};

use crate::InputError;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_MAX_DEGREE: usize = 6;
pub const MAX_VERIFY_DEPTH: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldJson {
    Rationals,
    Cyclotomic { n: u32 },
    Prime { p: u64 },
}

impl From<FieldJson> for FieldSpec {
    fn from(f: FieldJson) -> Self {
        match f {
            FieldJson::Rationals => FieldSpec::Rationals,
            FieldJson::Cyclotomic { n } => FieldSpec::Cyclotomic { n },
            FieldJson::Prime { p } => FieldSpec::Prime { p },
        }
    }
}

impl From<FieldSpec> for FieldJson {
    fn from(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rationals => FieldJson::Rationals,
            FieldSpec::Cyclotomic { n } => FieldJson::Cyclotomic { n },
            FieldSpec::Prime { p } => FieldJson::Prime { p },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowJson {
    pub source: String,
    pub target: String,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverJson {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorJson {
    pub name: String,
    /// Keyed `"target<-source"`; rows of field-element strings.
    pub matrices: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionJson {
    #[serde(default)]
    pub generators: Vec<GeneratorJson>,
    /// Closure cap; `options.group_cap` and the command line take precedence.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_cap: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify_depth: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_cap: Option<usize>,
}

/// The on-disk job document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    pub schema_version: u32,
    pub field: FieldJson,
    pub quiver: QuiverJson,
    #[serde(default)]
    pub action: ActionJson,
    #[serde(default)]
    pub options: OptionsJson,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub max_degree: usize,
    pub verify_depth: usize,
    pub path_cap: usize,
    pub group_cap: usize,
}

/// Option values given on the command line; they win over the file.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub max_degree: Option<usize>,
    pub verify_depth: Option<usize>,
    pub path_cap: Option<usize>,
    pub group_cap: Option<usize>,
}

impl Options {
    fn resolve(file: &OptionsJson, action_cap: Option<usize>, cli: &Overrides) -> Self {
        let max_degree = cli.max_degree.or(file.max_degree).unwrap_or(DEFAULT_MAX_DEGREE);
        Options {
            max_degree,
            verify_depth: cli
                .verify_depth
                .or(file.verify_depth)
                .unwrap_or(max_degree.min(MAX_VERIFY_DEPTH)),
            path_cap: cli.path_cap.or(file.path_cap).unwrap_or(DEFAULT_PATH_CAP),
            group_cap: cli
                .group_cap
                .or(file.group_cap)
                .or(action_cap)
                .unwrap_or(DEFAULT_GROUP_CAP),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorEntries {
    pub name: String,
    /// Keyed `(source, target)`; entries in canonical text form.
    pub matrices: BTreeMap<(VertexId, VertexId), Vec<Vec<String>>>,
}

/// A validated job: vertices exist, matrices have the arrow dimensions, every
/// entry parses in the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Job {
    pub field: FieldSpec,
    pub quiver: Quiver,
    pub generators: Vec<GeneratorEntries>,
    pub options: Options,
}

fn arrow_key(quiver: &Quiver, source: VertexId, target: VertexId) -> String {
    format!("{}<-{}", quiver.label(target), quiver.label(source))
}

impl Job {
    pub fn from_json(text: &str, overrides: &Overrides) -> Result<Self, InputError> {
        let file: JobFile = serde_json::from_str(text).map_err(|e| InputError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Self::from_file(&file, overrides)
    }

    pub fn from_file(file: &JobFile, overrides: &Overrides) -> Result<Self, InputError> {
        let at = |path: String| move |message: String| InputError::Invalid { path, message };
        if file.schema_version != SCHEMA_VERSION {
            return Err(at("schema_version".into())(format!(
                "unsupported version {}, expected {SCHEMA_VERSION}",
                file.schema_version
            )));
        }
        let field: FieldSpec = file.field.clone().into();
        field.validate().map_err(|e| at("field".into())(e.to_string()))?;

        let mut quiver = Quiver::new(file.quiver.vertices.iter().cloned())
            .map_err(|e| at("quiver.vertices".into())(e.to_string()))?;
        for (i, a) in file.quiver.arrows.iter().enumerate() {
            let here = format!("quiver.arrows[{i}]");
            let s = quiver.vertex(&a.source).map_err(|e| at(here.clone())(e.to_string()))?;
            let t = quiver.vertex(&a.target).map_err(|e| at(here.clone())(e.to_string()))?;
            if a.dim == 0 {
                return Err(at(here)("arrow space dimension must be positive".into()));
            }
            quiver.set_arrow(s, t, a.dim).map_err(|e| at(here)(e.to_string()))?;
        }

        let mut generators = Vec::with_capacity(file.action.generators.len());
        for (gi, g) in file.action.generators.iter().enumerate() {
            let mut matrices = BTreeMap::new();
            for (key, rows) in &g.matrices {
                let here = format!("action.generators[{gi}].matrices[{key:?}]");
                let (t, s) = key
                    .split_once("<-")
                    .ok_or_else(|| at(here.clone())("key must have the form \"target<-source\"".into()))?;
                let t = quiver.vertex(t.trim()).map_err(|e| at(here.clone())(e.to_string()))?;
                let s = quiver.vertex(s.trim()).map_err(|e| at(here.clone())(e.to_string()))?;
                let dim = quiver.dim(t, s);
                if dim == 0 {
                    return Err(at(here)(format!("the quiver has no arrow space {key}")));
                }
                if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
                    return Err(at(here)(format!(
                        "matrix for arrow {} is {}x{cols}, arrow space has dimension {dim}",
                        arrow_key(&quiver, s, t),
                        rows.len()
                    )));
                }
                let canonical = canonical_rows(field, rows).map_err(|(i, j, m)| at(format!("{here}[{i}][{j}]"))(m))?;
                if matrices.insert((s, t), canonical).is_some() {
                    return Err(at(here)("matrix given twice".into()));
                }
            }
            for e in quiver.track_edges() {
                if !matrices.contains_key(&(e.source, e.target)) {
                    return Err(at(format!("action.generators[{gi}]"))(format!(
                        "generator {:?} has no matrix for arrow {}",
                        g.name,
                        arrow_key(&quiver, e.source, e.target)
                    )));
                }
            }
            generators.push(GeneratorEntries {
                name: g.name.clone(),
                matrices,
            });
        }
        Ok(Job {
            field,
            quiver,
            generators,
            options: Options::resolve(&file.options, file.action.group_cap, overrides),
        })
    }

    /// The job as a document, with resolved options and canonical entries.
    pub fn to_file(&self) -> JobFile {
        let q = &self.quiver;
        JobFile {
            schema_version: SCHEMA_VERSION,
            field: self.field.into(),
            quiver: QuiverJson {
                vertices: q.labels().to_vec(),
                arrows: q
                    .track_edges()
                    .iter()
                    .map(|e| ArrowJson {
                        source: q.label(e.source).into(),
                        target: q.label(e.target).into(),
                        dim: e.dim,
                    })
                    .collect(),
            },
            action: ActionJson {
                generators: self
                    .generators
                    .iter()
                    .map(|g| GeneratorJson {
                        name: g.name.clone(),
                        matrices: g
                            .matrices
                            .iter()
                            .map(|(&(s, t), rows)| (arrow_key(q, s, t), rows.clone()))
                            .collect(),
                    })
                    .collect(),
                group_cap: None,
            },
            options: OptionsJson {
                max_degree: Some(self.options.max_degree),
                verify_depth: Some(self.options.verify_depth),
                path_cap: Some(self.options.path_cap),
                group_cap: Some(self.options.group_cap),
            },
        }
    }
}

type EntryError = (usize, usize, String);

fn canonical_rows(field: FieldSpec, rows: &[Vec<String>]) -> Result<Vec<Vec<String>>, EntryError> {
    fn with<F: Field>(f: &F, rows: &[Vec<String>]) -> Result<Vec<Vec<String>>, EntryError> {
        rows.iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, text)| f.parse(text).map(|x| f.format(&x)).map_err(|e| (i, j, e.to_string())))
                    .collect()
            })
            .collect()
    }
    match field {
        FieldSpec::Rationals => with(&Rationals, rows),
        FieldSpec::Cyclotomic { n } => with(&CyclotomicField::new(n).expect("validated"), rows),
        FieldSpec::Prime { p } => with(&PrimeField::new(p).expect("validated"), rows),
    }
}
