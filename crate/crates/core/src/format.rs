//! JSON algebra files.
//!
//! ```json
//! {"basis": ["e", "h", "f"], "dim": 3, "field": {"kind": "Q"},
//!  "brackets": [{"i": 0, "j": 1, "coeffs": {"0": "-2"}}, ...]}
//! ```
//!
//! Only pairs `i < j` are listed and missing pairs bracket to zero.
//! Associative algebras carry `products` (pairs `i, j` in any order) and a
//! `unit` vector instead of `brackets`. Output is canonical: keys sorted,
//! scalars as strings, zero coefficients omitted.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::lie::{AssocAlgebra, LieAlgebra};

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum FieldSpec {
    Q,
    Fp { p: u64 },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    i: usize,
    j: usize,
    coeffs: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileSpec {
    field: FieldSpec,
    dim: usize,
    basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    brackets: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    products: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<Vec<String>>,
}

/// Contents of an algebra file.
#[derive(Clone, Debug)]
pub enum AlgebraFile {
    Lie(LieAlgebra),
    Assoc(AssocAlgebra),
}

fn field_spec(f: Field) -> FieldSpec {
    match f {
        Field::Q => FieldSpec::Q,
        Field::Fp { p } => FieldSpec::Fp { p },
    }
}

fn entry(i: usize, j: usize, v: &[Scalar]) -> Entry {
    let coeffs =
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k.to_string(), c.to_string())).collect();
    Entry { i, j, coeffs }
}

fn decode_entry(field: Field, n: usize, e: &Entry, at: &str) -> Result<Vec<Scalar>> {
    let mut v = vec![field.zero(); n];
    for (k, s) in &e.coeffs {
        let k: usize = k.parse().map_err(|_| Error::Format(format!("{at}: coefficient key '{k}' is not an index")))?;
        if k >= n {
            return Err(Error::Format(format!("{at}: coefficient index {k} out of range")));
        }
        v[k] = field.parse(s).map_err(|_| Error::Format(format!("{at}: cannot parse scalar '{s}' over {field}")))?;
    }
    Ok(v)
}

pub fn lie_to_value(l: &LieAlgebra) -> Value {
    let raw = FileSpec {
        field: field_spec(l.field()),
        dim: l.dim(),
        basis: l.labels().to_vec(),
        brackets: Some(l.brackets().iter().map(|(i, j, v)| entry(*i, *j, v)).collect()),
        products: None,
        unit: None,
    };
    serde_json::to_value(raw).expect("serializable")
}

pub fn assoc_to_value(a: &AssocAlgebra) -> Value {
    let n = a.dim();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if a.product_basis(i, j).iter().any(|c| !c.is_zero()) {
                products.push(entry(i, j, a.product_basis(i, j)));
            }
        }
    }
    let raw = FileSpec {
        field: field_spec(a.field()),
        dim: n,
        basis: a.labels().to_vec(),
        brackets: None,
        products: Some(products),
        unit: Some(a.unit().iter().map(|c| c.to_string()).collect()),
    };
    serde_json::to_value(raw).expect("serializable")
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn canonical_string(v: &Value) -> String {
    // serde_json's map is ordered by key, so any Value prints sorted
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn emit_lie(l: &LieAlgebra) -> String {
    canonical_string(&lie_to_value(l))
}

pub fn emit_assoc(a: &AssocAlgebra) -> String {
    canonical_string(&assoc_to_value(a))
}

pub fn emit(a: &AlgebraFile) -> String {
    match a {
        AlgebraFile::Lie(l) => emit_lie(l),
        AlgebraFile::Assoc(a) => emit_assoc(a),
    }
}

/// Parses and validates; Jacobi failures come back as [`Error::Jacobi`] with
/// the first violating triple.
pub fn parse_algebra(text: &str) -> Result<AlgebraFile> {
    let raw: FileSpec = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let field = match raw.field {
        FieldSpec::Q => Field::Q,
        FieldSpec::Fp { p } => Field::fp(p)?,
    };
    let n = raw.dim;
    if raw.basis.len() != n {
        return Err(Error::Format(format!("dim is {n} but basis has {} labels", raw.basis.len())));
    }
    match (raw.brackets, raw.products, raw.unit) {
        (Some(brackets), None, None) => {
            let mut br = Vec::with_capacity(brackets.len());
            for (idx, e) in brackets.iter().enumerate() {
                let at = format!("brackets[{idx}] (i={}, j={})", e.i, e.j);
                if e.i >= e.j || e.j >= n {
                    return Err(Error::Format(format!("{at}: need i < j < {n}")));
                }
                br.push((e.i, e.j, decode_entry(field, n, e, &at)?));
            }
            Ok(AlgebraFile::Lie(LieAlgebra::new(field, raw.basis, br)?))
        }
        (None, Some(products), Some(unit)) => {
            let mut table = vec![vec![field.zero(); n]; n * n];
            let mut seen = vec![false; n * n];
            for (idx, e) in products.iter().enumerate() {
                let at = format!("products[{idx}] (i={}, j={})", e.i, e.j);
                if e.i >= n || e.j >= n {
                    return Err(Error::Format(format!("{at}: index out of range")));
                }
                if std::mem::replace(&mut seen[e.i * n + e.j], true) {
                    return Err(Error::Format(format!("{at}: pair given twice")));
                }
                table[e.i * n + e.j] = decode_entry(field, n, e, &at)?;
            }
            let unit = unit
                .iter()
                .map(|s| field.parse(s).map_err(|_| Error::Format(format!("unit: cannot parse '{s}'"))))
                .collect::<Result<Vec<_>>>()?;
            Ok(AlgebraFile::Assoc(AssocAlgebra::new(field, raw.basis, table, unit)?))
        }
        _ => Err(Error::Format("expected either 'brackets', or 'products' with 'unit'".into())),
    }
}

pub fn parse_lie(text: &str) -> Result<LieAlgebra> {
    match parse_algebra(text)? {
        AlgebraFile::Lie(l) => Ok(l),
        AlgebraFile::Assoc(_) => Err(Error::Format("expected a Lie algebra, found an associative one".into())),
    }
}
