//! JSON documents read and written by the command line.
//!
//! Rationals are written as strings `"p/q"` (or `"p"` for integers) and
//! read from either strings or JSON integers. Matrices are lists of rows;
//! their shape comes from the graded dimensions they connect, so an empty
//! list is a valid `0 x c` matrix.

use std::collections::{BTreeMap, BTreeSet};

use serde::Deserialize;
use serde_json::{json, Value};

use crate::complex::{Chain, SimplicialComplex, StratifiedComplex};
use crate::conecalc::{LefschetzData, PairMorphismData, PolarData};
use crate::error::{Error, Result};
use crate::exactla::{parse_rational, GradedDims, Rational, RationalMatrix};

fn from_json<'a, T: Deserialize<'a>>(what: &str, text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        Error::parse(
            format!("{what} document, line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    fn value(&self, field: &str) -> Result<Rational> {
        match self {
            Num::Int(n) => Ok(Rational::from_integer((*n).into())),
            Num::Text(t) => parse_rational(t).map_err(|e| Error::parse(field, e.to_string())),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexDoc {
    vertices: Vec<String>,
    simplices: Vec<Vec<String>>,
    #[serde(default)]
    filtration: Vec<MemberDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MemberDoc {
    codim: usize,
    simplices: Vec<Vec<String>>,
}

/// Reads a complex document. Faces are completed; a simplex listed twice
/// (in any vertex order) is rejected.
pub fn parse_complex(text: &str) -> Result<StratifiedComplex> {
    let doc: ComplexDoc = from_json("complex", text)?;
    let mut seen = BTreeSet::new();
    for (i, s) in doc.simplices.iter().enumerate() {
        let mut key = s.clone();
        key.sort();
        if !seen.insert(key) {
            return Err(Error::parse(
                format!("simplices[{i}]"),
                Error::DuplicateSimplex(format!("[{}]", s.join(","))).to_string(),
            ));
        }
    }
    let complex = SimplicialComplex::from_named(&doc.vertices, &doc.simplices)
        .map_err(|e| Error::parse("simplices", e.to_string()))?;
    let filtration: Vec<(usize, Vec<Vec<String>>)> = doc
        .filtration
        .into_iter()
        .map(|m| (m.codim, m.simplices))
        .collect();
    StratifiedComplex::from_named(complex, &filtration).map_err(|e| match e {
        Error::UnknownVertex(_) | Error::MissingSimplex(_) | Error::InvalidSimplex(_) => {
            Error::parse("filtration", e.to_string())
        }
        other => other,
    })
}

/// The normalized document: vertices in id order, maximal simplices only,
/// each listed in increasing id order.
pub fn emit_complex(x: &StratifiedComplex) -> Value {
    let k = x.complex();
    let named = |ss: Vec<crate::complex::Simplex>| -> Vec<Vec<String>> {
        ss.iter().map(|s| k.simplex_names(s)).collect()
    };
    let filtration: Vec<Value> = x
        .members()
        .iter()
        .map(|m| json!({ "codim": m.codim(), "simplices": named(m.maximal_simplices()) }))
        .collect();
    json!({
        "vertices": k.names(),
        "simplices": named(k.maximal_simplices()),
        "filtration": filtration,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    simplex: Vec<String>,
    coeff: Num,
}

/// Reads a chain document `[{simplex, coeff}, ...]` against `k`. Vertex
/// order inside a simplex sets its orientation.
pub fn parse_chain(text: &str, k: &SimplicialComplex) -> Result<Chain> {
    let terms: Vec<TermDoc> = from_json("chain", text)?;
    let first = terms
        .first()
        .ok_or_else(|| Error::parse("chain", "empty chain; its degree is unknown"))?;
    let degree = first
        .simplex
        .len()
        .checked_sub(1)
        .ok_or_else(|| Error::parse("chain[0]", "empty simplex"))?;
    let mut chain = Chain::zero(degree);
    for (i, t) in terms.iter().enumerate() {
        let field = format!("chain[{i}]");
        let (s, sign) = k
            .simplex_from_names(&t.simplex)
            .map_err(|e| Error::parse(&field, e.to_string()))?;
        let c = t.coeff.value(&field)? * Rational::from_integer(sign.into());
        chain
            .add_term(s, &c)
            .map_err(|e| Error::parse(&field, e.to_string()))?;
    }
    Ok(chain)
}

pub fn emit_chain(c: &Chain, k: &SimplicialComplex) -> Value {
    Value::Array(
        c.named_terms(k)
            .into_iter()
            .map(|(s, v)| json!({ "simplex": s, "coeff": v.to_string() }))
            .collect(),
    )
}

pub fn emit_rational(v: &Rational) -> Value {
    Value::String(v.to_string())
}

pub fn emit_matrix(m: &RationalMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m
            .to_dense()
            .iter()
            .map(|r| r.iter().map(emit_rational).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn emit_dims(d: &GradedDims) -> Value {
    json!(d.as_slice())
}

fn parse_matrix(field: &str, rows: &[Vec<Num>], shape: (usize, usize)) -> Result<RationalMatrix> {
    if rows.len() != shape.0 {
        return Err(Error::parse(
            field,
            format!("expected {} rows, got {}", shape.0, rows.len()),
        ));
    }
    let mut dense = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        if row.len() != shape.1 {
            return Err(Error::parse(
                field,
                format!("row {r} has {} entries, expected {}", row.len(), shape.1),
            ));
        }
        dense.push(
            row.iter()
                .map(|v| v.value(field))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    if dense.is_empty() {
        return Ok(RationalMatrix::zeros(0, shape.1));
    }
    RationalMatrix::from_rows(&dense)
}

fn degree_key(field: &str, key: &str) -> Result<usize> {
    key.parse().map_err(|_| {
        Error::parse(
            field,
            format!("degree key '{key}' is not a nonnegative integer"),
        )
    })
}

type Graded = BTreeMap<String, Vec<Vec<Num>>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LefschetzDoc {
    dims: Vec<usize>,
    #[serde(default)]
    lambda: Graded,
}

fn lefschetz_from(field: &str, doc: LefschetzDoc) -> Result<LefschetzData> {
    let dims = GradedDims(doc.dims);
    let mut lambda = BTreeMap::new();
    for (key, rows) in &doc.lambda {
        let f = format!("{field}.lambda.{key}");
        let i = degree_key(&f, key)?;
        if i < 2 || i >= dims.len() {
            return Err(Error::parse(
                &f,
                format!("Λ out of degree {i} is outside 2..{}", dims.len()),
            ));
        }
        let m = parse_matrix(&f, rows, (dims.get(i as isize - 2), dims.get(i as isize)))?;
        lambda.insert(i, m);
    }
    LefschetzData::new(dims, lambda)
}

fn emit_graded(maps: &BTreeMap<usize, RationalMatrix>) -> Value {
    Value::Object(
        maps.iter()
            .map(|(i, m)| {
                (
                    i.to_string(),
                    json!(m
                        .to_dense()
                        .iter()
                        .map(|r| r.iter().map(emit_rational).collect::<Vec<_>>())
                        .collect::<Vec<_>>()),
                )
            })
            .collect(),
    )
}

pub fn parse_lefschetz(text: &str) -> Result<LefschetzData> {
    lefschetz_from("lefschetz", from_json("Lefschetz", text)?)
}

pub fn emit_lefschetz(d: &LefschetzData) -> Value {
    json!({ "dims": emit_dims(d.dims()), "lambda": emit_graded(d.lambda_entries()) })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairDoc {
    n: usize,
    x: LefschetzDoc,
    y: LefschetzDoc,
    #[serde(default)]
    alpha: Graded,
}

fn graded_maps(
    field: &str,
    maps: &Graded,
    shape: impl Fn(usize) -> (usize, usize),
) -> Result<BTreeMap<usize, RationalMatrix>> {
    let mut out = BTreeMap::new();
    for (key, rows) in maps {
        let f = format!("{field}.{key}");
        let i = degree_key(&f, key)?;
        out.insert(i, parse_matrix(&f, rows, shape(i))?);
    }
    Ok(out)
}

/// A pair document `{n, x, y, alpha}` with `dim 𝔜 = n`.
pub fn parse_pair(text: &str) -> Result<(usize, PairMorphismData)> {
    let doc: PairDoc = from_json("pair", text)?;
    let x = lefschetz_from("x", doc.x)?;
    let y = lefschetz_from("y", doc.y)?;
    let alpha = graded_maps("alpha", &doc.alpha, |i| {
        (y.dim(i as isize), x.dim(i as isize))
    })?;
    Ok((doc.n, PairMorphismData::new(x, y, alpha)?))
}

pub fn emit_pair(n: usize, d: &PairMorphismData) -> Value {
    json!({
        "n": n,
        "x": emit_lefschetz(&d.x),
        "y": emit_lefschetz(&d.y),
        "alpha": emit_graded(d.alpha_entries()),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolarDoc {
    n: usize,
    dims: Vec<usize>,
    classes: BTreeMap<String, Vec<Num>>,
    #[serde(default)]
    h: Graded,
}

/// A polar document `{n, dims, classes, h}`: `classes["j"]` is `[𝔛^j]` in
/// degree `2(n - j)` of the ambient homology `dims`, `h` the hyperplane
/// action keyed by source degree.
pub fn parse_polar(text: &str) -> Result<PolarData> {
    let doc: PolarDoc = from_json("polar", text)?;
    let ambient = lefschetz_from(
        "polar",
        LefschetzDoc {
            dims: doc.dims,
            lambda: doc.h,
        },
    )?;
    let mut classes = BTreeMap::new();
    for (key, v) in &doc.classes {
        let f = format!("classes.{key}");
        let j = degree_key(&f, key)?;
        classes.insert(
            j,
            v.iter().map(|x| x.value(&f)).collect::<Result<Vec<_>>>()?,
        );
    }
    let fundamental_is_zero = classes
        .get(&0)
        .is_none_or(|v| v.iter().all(num_traits::Zero::is_zero));
    if fundamental_is_zero {
        return Err(Error::parse(
            "classes.0",
            "the fundamental class slot must be nonzero",
        ));
    }
    PolarData::new(doc.n, ambient, classes)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HlDoc {
    n: usize,
    x: LefschetzDoc,
    y: LefschetzDoc,
    #[serde(default)]
    i_star: Graded,
    link_middle_map_is_zero: bool,
}

/// Inputs of the Hard Lefschetz derivation.
pub struct HlInput {
    pub n: usize,
    pub x: LefschetzData,
    pub y: LefschetzData,
    pub i_star: BTreeMap<usize, RationalMatrix>,
    pub link_middle_map_is_zero: bool,
}

pub fn parse_hl(text: &str) -> Result<HlInput> {
    let doc: HlDoc = from_json("hl", text)?;
    let x = lefschetz_from("x", doc.x)?;
    let y = lefschetz_from("y", doc.y)?;
    let i_star = graded_maps("i_star", &doc.i_star, |i| {
        (y.dim(i as isize), x.dim(i as isize))
    })?;
    Ok(HlInput {
        n: doc.n,
        x,
        y,
        i_star,
        link_middle_map_is_zero: doc.link_middle_map_is_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn tetrahedron_document() {
        let text = r#"{"vertices":["a","b","c","d"],
            "simplices":[["a","b","c"],["a","b","d"],["a","c","d"],["b","c","d"]]}"#;
        let x = parse_complex(text).unwrap();
        assert_eq!(x.complex().num_simplices(), 14);
    }

    #[test]
    fn unknown_vertex_is_a_parse_error() {
        let text = r#"{"vertices":["a","b"],"simplices":[["a","z"]]}"#;
        assert!(matches!(parse_complex(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn duplicates_are_rejected() {
        let text = r#"{"vertices":["a","b"],"simplices":[["a","b"],["b","a"]]}"#;
        assert!(matches!(parse_complex(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn syntax_errors_carry_a_line() {
        let err = parse_complex("{\n\"vertices\": [,]}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn corpus_round_trips() {
        for x in [
            corpus::suspended_torus(),
            corpus::crossing_spheres(),
            corpus::suspended_sphere(),
        ] {
            let doc = emit_complex(&x);
            let back = parse_complex(&doc.to_string()).unwrap();
            assert_eq!(back.complex(), x.complex());
            assert_eq!(emit_complex(&back), doc);
        }
    }

    #[test]
    fn chain_round_trip_with_orientation() {
        let k = corpus::tetrahedron_boundary();
        let c = parse_chain(
            r#"[{"simplex":["1","0"],"coeff":"1/2"},{"simplex":["1","2"],"coeff":3}]"#,
            &k,
        )
        .unwrap();
        let doc = emit_chain(&c, &k);
        assert_eq!(parse_chain(&doc.to_string(), &k).unwrap(), c);
        assert_eq!(doc[0]["coeff"], "-1/2");
    }

    #[test]
    fn pair_document() {
        let text = r#"{"n":1,"x":{"dims":[1]},"y":{"dims":[1,0,1],"lambda":{"2":[[1]]}},"alpha":{"0":[[1]]}}"#;
        let (n, d) = parse_pair(text).unwrap();
        assert_eq!(n, 1);
        assert_eq!(parse_pair(&emit_pair(n, &d).to_string()).unwrap().1, d);
    }

    #[test]
    fn matrix_shape_is_checked() {
        let text = r#"{"dims":[1,0,1],"lambda":{"2":[[1,2]]}}"#;
        assert!(matches!(parse_lefschetz(text), Err(Error::Parse { .. })));
    }
}
