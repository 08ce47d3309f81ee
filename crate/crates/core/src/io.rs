//! JSON file formats. Every file carries `"version": 1`; a missing version
//! is read as 1 and any other value is rejected.
//!
//! Quiver files:
//! `{"version":1, "vertices":[...], "arrows":[{"name","tail","head"}],
//!   "relations":[[{"coeff":"p/q","path":["a","b"]}, ...], ...], "star": "1"}`
//!
//! Representation files: `{"version":1, "dims":{"1":1}, "matrices":{"a":[["1"]]}}`
//! where matrix `a` has `dims[tail]` rows and `dims[head]` columns and entries
//! are rationals or Laurent monomials; omitted arrows are zero.
//!
//! Matrix factorization files:
//! `{"version":1, "vars":["a","b","c"], "f":"a*b - c^3", "phi":[[..]], "psi":[[..]], "sign":-1}`.

use crate::error::{Error, Result};
use crate::quiver::{AlgebraElement, Arrow, BoundQuiver, Path, Quiver};
use crate::rep::{Entry, Representation};
use crate::scalars::{parse_rational, Matrix, Polynomial, Ring};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

/// Deserializes JSON, reporting the path of the offending field on failure.
pub fn from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::InvalidInput(format!("at `{path}`: {}", e.into_inner()))
    })
}

fn check_version(v: Option<u32>) -> Result<()> {
    match v {
        None | Some(SCHEMA_VERSION) => Ok(()),
        Some(other) => Err(Error::SchemaVersion(other)),
    }
}

/// Vertex ids may be written as strings or integers.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum Id {
    Str(String),
    Int(i64),
}

impl Id {
    pub fn as_string(&self) -> String {
        match self {
            Id::Str(s) => s.clone(),
            Id::Int(i) => i.to_string(),
        }
    }
}

/// A scalar written as a string (`"3/2"`, `"a*b^-1"`) or a JSON integer.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum Scalar {
    Str(String),
    Int(i64),
}

impl Scalar {
    pub fn to_entry(&self) -> Result<Entry> {
        match self {
            Scalar::Int(i) => Ok(Entry::constant(crate::scalars::rat(*i))),
            Scalar::Str(s) => Polynomial::parse(s).map_err(|e| Error::InvalidInput(e.to_string())),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArrowJson {
    pub name: String,
    pub tail: Id,
    pub head: Id,
    /// Display label, such as the variable an arrow multiplies by.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub coeff: Scalar,
    #[serde(default)]
    pub path: Vec<String>,
    /// Needed only for trivial paths (empty `path`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<Id>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    #[serde(default)]
    pub version: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<Id>,
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub relations: Vec<Vec<TermJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<Id>,
    /// Dimension attached to each vertex, for McKay quivers.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<u32>>,
}

impl QuiverFile {
    pub fn parse(text: &str) -> Result<Self> {
        let f: Self = from_json(text)?;
        check_version(f.version)?;
        Ok(f)
    }

    pub fn to_bound_quiver(&self) -> Result<BoundQuiver> {
        let q = Quiver::new(
            self.vertices.iter().map(Id::as_string).collect(),
            self.arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    tail: a.tail.as_string(),
                    head: a.head.as_string(),
                })
                .collect(),
        )?;
        let mut relations = Vec::new();
        for r in &self.relations {
            let mut terms = Vec::new();
            for t in r {
                let c = t.coeff.to_entry()?.as_constant().ok_or_else(|| {
                    Error::InvalidInput("relation coefficients must be rational".into())
                })?;
                let p = if t.path.is_empty() {
                    let v = t
                        .vertex
                        .as_ref()
                        .ok_or_else(|| Error::InvalidInput("trivial path needs a vertex".into()))?;
                    q.trivial(&v.as_string())?
                } else {
                    let names: Vec<&str> = t.path.iter().map(String::as_str).collect();
                    q.path(&names)?
                };
                terms.push((p, c));
            }
            relations.push(q.relation(AlgebraElement::from_terms(terms))?);
        }
        Ok(BoundQuiver::new(q, relations))
    }

    pub fn star(&self) -> Option<String> {
        self.star.as_ref().map(Id::as_string)
    }

    pub fn from_bound_quiver(bq: &BoundQuiver, star: Option<&str>) -> Self {
        let q = &bq.quiver;
        Self {
            version: Some(SCHEMA_VERSION),
            name: None,
            vertices: q.vertices().iter().cloned().map(Id::Str).collect(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowJson {
                    name: a.name.clone(),
                    tail: Id::Str(a.tail.clone()),
                    head: Id::Str(a.head.clone()),
                    label: None,
                })
                .collect(),
            relations: bq
                .relations
                .iter()
                .map(|r| {
                    r.element()
                        .terms()
                        .map(|(p, c)| match p {
                            Path::Trivial(v) => TermJson {
                                coeff: Scalar::Str(c.to_string()),
                                path: vec![],
                                vertex: Some(Id::Str(q.vertices()[*v].clone())),
                            },
                            Path::Arrows(a) => TermJson {
                                coeff: Scalar::Str(c.to_string()),
                                path: a.iter().map(|&i| q.arrows()[i].name.clone()).collect(),
                                vertex: None,
                            },
                        })
                        .collect()
                })
                .collect(),
            star: star.map(|s| Id::Str(s.to_string())),
            dims: None,
        }
    }
}

impl QuiverFile {
    /// A McKay or endomorphism quiver with its arrow labels, vertex dimensions
    /// and, for cyclic groups, commutation relations.
    pub fn from_mckay(m: &crate::mckay::McKayQuiver) -> Self {
        let mut f = Self::from_bound_quiver(&m.to_bound_quiver(), None);
        for (a, l) in f.arrows.iter_mut().zip(&m.labels) {
            a.label = Some(l.clone());
        }
        f.star = Some(Id::Str(m.quiver.vertices()[m.star].clone()));
        f.dims = Some(m.dims.clone());
        f
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    #[serde(default)]
    pub version: Option<u32>,
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub matrices: BTreeMap<String, Vec<Vec<Scalar>>>,
}

impl RepFile {
    pub fn parse(text: &str) -> Result<Self> {
        let f: Self = from_json(text)?;
        check_version(f.version)?;
        Ok(f)
    }

    pub fn to_representation(&self, q: &Quiver) -> Result<Representation> {
        let mut dims = vec![0; q.num_vertices()];
        for (v, &d) in &self.dims {
            dims[q.vertex(v)?] = d;
        }
        let mut mats: Vec<Matrix<Entry>> = (0..q.num_arrows())
            .map(|a| Matrix::zeros(dims[q.tail(a)], dims[q.head(a)]))
            .collect();
        for (name, rows) in &self.matrices {
            let a = q.arrow(name)?;
            let rows: Vec<Vec<Entry>> = rows
                .iter()
                .map(|r| r.iter().map(Scalar::to_entry).collect::<Result<Vec<_>>>())
                .collect::<Result<_>>()?;
            let expected = (dims[q.tail(a)], dims[q.head(a)]);
            let got = (rows.len(), rows.first().map_or(expected.1, Vec::len));
            let m = Matrix::from_rows(rows)
                .filter(|m| m.rows() > 0 || expected.0 == 0)
                .ok_or(Error::ShapeMismatch {
                    arrow: name.clone(),
                    expected,
                    got,
                })?;
            let m = if m.rows() == 0 {
                Matrix::zeros(0, expected.1)
            } else {
                m
            };
            mats[a] = m;
        }
        Representation::new(q.clone(), dims, mats)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MfFile {
    #[serde(default)]
    pub version: Option<u32>,
    pub vars: Vec<String>,
    pub f: String,
    pub phi: Vec<Vec<Scalar>>,
    pub psi: Vec<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
}

pub fn parse_poly_matrix(rows: &[Vec<Scalar>]) -> Result<Matrix<Polynomial>> {
    let rows: Vec<Vec<Polynomial>> = rows
        .iter()
        .map(|r| r.iter().map(Scalar::to_entry).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    Matrix::from_rows(rows).ok_or_else(|| Error::InvalidInput("ragged matrix".into()))
}

pub fn poly_matrix_strings(m: &Matrix<Polynomial>) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|p| p.to_string()).collect())
        .collect()
}

impl MfFile {
    pub fn parse(text: &str) -> Result<Self> {
        let f: Self = from_json(text)?;
        check_version(f.version)?;
        Ok(f)
    }
}

/// Parses a rational written in a JSON string.
pub fn rational(s: &str) -> Result<crate::scalars::Rational> {
    parse_rational(s).ok_or_else(|| Error::InvalidInput(format!("bad rational `{s}`")))
}

/// Whether a polynomial is a nonzero constant.
pub fn is_unit(p: &Polynomial) -> bool {
    p.as_constant().is_some_and(|c| !Ring::is_zero(&c))
}
