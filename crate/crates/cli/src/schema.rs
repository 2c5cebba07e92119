//! The `manin-forge/1` interchange format.
//!
//! A document is a flat namespace of named objects plus an optional root:
//!
//! ```json
//! {
//!   "format": "manin-forge/1",
//!   "root": "sl2",
//!   "objects": {
//!     "sl2": {"type": "lie_algebra", "dim": 3, "basis": ["H", "Xp", "Xm"],
//!             "brackets": [{"x": "H", "y": "Xp", "value": {"Xp": "2"}}]}
//!   }
//! }
//! ```
//!
//! Scalars are strings `"p/q"` or `"p"` (plain JSON integers are accepted on
//! input). Output is written with sorted keys and reduced rationals, so a
//! document round-trips byte for byte.

use std::collections::BTreeMap;
use std::str::FromStr;

use manin_forge_core::Rational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const FORMAT: &str = "manin-forge/1";

/// A scalar as written in a file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    pub fn parse(&self) -> Result<Rational, CliError> {
        match self {
            Scalar::Int(n) => Ok(Rational::from_integer((*n).into())),
            Scalar::Text(s) => parse_rational(s),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Scalar::Text(r.to_string())
    }

    /// Reduced `"p/q"` text; unparsable scalars are left for resolution to
    /// reject.
    pub fn canonical(&self) -> Self {
        self.parse().map(|r| Scalar::from_rational(&r)).unwrap_or_else(|_| self.clone())
    }
}

fn canonical_rows(rows: &[Row]) -> Vec<Row> {
    rows.iter().map(|r| r.iter().map(Scalar::canonical).collect()).collect()
}

fn canonical_map(m: &BTreeMap<String, Scalar>) -> BTreeMap<String, Scalar> {
    m.iter().map(|(k, v)| (k.clone(), v.canonical())).collect()
}

/// Parses `"p/q"` or `"p"`, rejecting a zero denominator.
pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let t = s.trim();
    Rational::from_str(t).map_err(|e| CliError::Schema(format!("bad rational {s:?}: {e}")))
}

pub type Row = Vec<Scalar>;

/// `x`, `y` are basis names; `value` maps basis names to coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bracket {
    pub x: String,
    pub y: String,
    pub value: BTreeMap<String, Scalar>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum Object {
    LieAlgebra {
        dim: usize,
        basis: Vec<String>,
        #[serde(default)]
        brackets: Vec<Bracket>,
    },
    BilinearForm {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        algebra: Option<String>,
        gram: Vec<Row>,
    },
    /// Basis vectors written as coefficient maps over the algebra basis.
    Subspace {
        algebra: String,
        basis: Vec<BTreeMap<String, Scalar>>,
    },
    /// `matrix` is `target.dim × source.dim` in the bases of the two named
    /// subspaces or algebras.
    LinearMap {
        source: String,
        target: String,
        matrix: Vec<Row>,
    },
    /// `r = Σ coeffs[i][j] e_i ⊗ e_j` over a Lie algebra or a subspace.
    RMatrix {
        algebra: String,
        coeffs: Vec<Row>,
    },
    ManinTriple {
        algebra: String,
        form: String,
        gplus: String,
        gminus: String,
    },
    AntiIsoPair {
        eplus: String,
        eminus: String,
        phi: String,
        form_plus: String,
        form_minus: String,
    },
}

impl Object {
    /// The same object with every scalar in canonical form.
    pub fn canonical(&self) -> Self {
        let mut o = self.clone();
        match &mut o {
            Object::LieAlgebra { brackets, .. } => {
                for b in brackets {
                    b.value = canonical_map(&b.value);
                }
            }
            Object::BilinearForm { gram, .. } => *gram = canonical_rows(gram),
            Object::Subspace { basis, .. } => *basis = basis.iter().map(canonical_map).collect(),
            Object::LinearMap { matrix, .. } => *matrix = canonical_rows(matrix),
            Object::RMatrix { coeffs, .. } => *coeffs = canonical_rows(coeffs),
            Object::ManinTriple { .. } | Object::AntiIsoPair { .. } => {}
        }
        o
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Object::LieAlgebra { .. } => "lie_algebra",
            Object::BilinearForm { .. } => "bilinear_form",
            Object::Subspace { .. } => "subspace",
            Object::LinearMap { .. } => "linear_map",
            Object::RMatrix { .. } => "r_matrix",
            Object::ManinTriple { .. } => "manin_triple",
            Object::AntiIsoPair { .. } => "anti_iso_pair",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub format: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<String>,
    pub objects: BTreeMap<String, Object>,
}

impl Document {
    pub fn new(root: Option<String>) -> Self {
        Document { format: FORMAT.into(), root, objects: BTreeMap::new() }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: Document = serde_json::from_str(text).map_err(|e| CliError::Schema(format!("invalid document: {e}")))?;
        if doc.format != FORMAT {
            return Err(CliError::Schema(format!("unsupported format {:?}, expected {FORMAT:?}", doc.format)));
        }
        if let Some(root) = &doc.root {
            if !doc.objects.contains_key(root) {
                return Err(CliError::Schema(format!("root {root:?} is not defined")));
            }
        }
        Ok(doc)
    }

    /// Canonical text: sorted keys, reduced rationals written as strings,
    /// two-space indentation, trailing newline.
    pub fn to_canonical(&self) -> String {
        let objects = self.objects.iter().map(|(k, v)| (k.clone(), v.canonical())).collect();
        canonical_json(&Document { format: self.format.clone(), root: self.root.clone(), objects })
    }
}

/// Serializes through `serde_json::Value`, whose maps are sorted.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("in-memory values serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

pub fn rows_from_matrix(m: &manin_forge_core::Matrix) -> Vec<Row> {
    m.to_rows().iter().map(|r| r.iter().map(Scalar::from_rational).collect()).collect()
}

/// Sparse coefficient map of a vector, skipping zeros.
pub fn sparse_vector(names: &[String], v: &[Rational]) -> BTreeMap<String, Scalar> {
    names
        .iter()
        .zip(v)
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| (n.clone(), Scalar::from_rational(c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_parse_and_reject_zero_denominator() {
        assert_eq!(parse_rational("-2/4").unwrap().to_string(), "-1/2");
        assert_eq!(parse_rational("3").unwrap().to_string(), "3");
        assert!(matches!(parse_rational("1/0"), Err(CliError::Schema(_))));
        assert!(parse_rational("one").is_err());
    }

    #[test]
    fn unknown_fields_and_formats_are_schema_errors() {
        let bad = r#"{"format": "manin-forge/1", "objects": {}, "extra": 1}"#;
        assert!(matches!(Document::parse(bad), Err(CliError::Schema(_))));
        let old = r#"{"format": "manin-forge/0", "objects": {}}"#;
        assert!(matches!(Document::parse(old), Err(CliError::Schema(_))));
        let root = r#"{"format": "manin-forge/1", "root": "x", "objects": {}}"#;
        assert!(matches!(Document::parse(root), Err(CliError::Schema(_))));
    }

    #[test]
    fn canonical_output_is_a_fixed_point() {
        let text = r#"{"objects": {"a": {"type": "lie_algebra", "dim": 1, "basis": ["e"]}}, "format": "manin-forge/1"}"#;
        let doc = Document::parse(text).unwrap();
        let once = doc.to_canonical();
        let twice = Document::parse(&once).unwrap().to_canonical();
        assert_eq!(once, twice);
        assert!(once.find("\"format\"").unwrap() < once.find("\"objects\"").unwrap());
    }
}
