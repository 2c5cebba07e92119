//! Name resolution from documents to core values.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use manin_forge_core::manin::ManinTriple;
use manin_forge_core::matrix::unit;
use manin_forge_core::reverse::AntiIsoPair;
use manin_forge_core::rmatrix::RMatrix;
use manin_forge_core::{BilinearForm, LieAlgebra, Matrix, Rational, Subspace};
use num_traits::{One, Zero};

use crate::error::CliError;
use crate::schema::{Bracket, Document, Object, Row, Scalar};

/// A Lie algebra together with the names of its basis vectors.
#[derive(Debug, Clone)]
pub struct NamedAlgebra {
    pub algebra: LieAlgebra,
    pub basis: Vec<String>,
}

/// A subspace of a named algebra (possibly the whole algebra).
#[derive(Debug, Clone)]
pub struct Space {
    pub algebra: String,
    pub subspace: Subspace,
    /// One display name per basis vector.
    pub names: Vec<String>,
}

/// A resolved Manin triple with display names for the adapted basis.
#[derive(Debug, Clone)]
pub struct NamedTriple {
    pub triple: ManinTriple,
    pub algebra: String,
    pub plus: Space,
    pub minus: Space,
}

/// A resolved anti-isomorphic pair.
#[derive(Debug, Clone)]
pub struct NamedPair {
    pub pair: AntiIsoPair,
    pub plus_names: Vec<String>,
    pub minus_names: Vec<String>,
}

/// All objects of the loaded documents in one namespace.
#[derive(Debug, Clone, Default)]
pub struct Workspace {
    objects: BTreeMap<String, Object>,
    roots: Vec<String>,
}

fn schema<T>(msg: String) -> Result<T, CliError> {
    Err(CliError::Schema(msg))
}

pub fn read_document(path: &Path) -> Result<Document, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    Document::parse(&text).map_err(|e| match e {
        CliError::Schema(m) => CliError::Schema(format!("{}: {m}", path.display())),
        other => other,
    })
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds every object, refusing names that are already taken.
    pub fn add(&mut self, doc: Document) -> Result<(), CliError> {
        for (name, obj) in doc.objects {
            if self.objects.contains_key(&name) {
                return schema(format!("object {name:?} is defined twice"));
            }
            self.objects.insert(name, obj);
        }
        if let Some(r) = doc.root {
            self.roots.push(r);
        }
        Ok(())
    }

    pub fn load(paths: &[&Path]) -> Result<Self, CliError> {
        let mut ws = Workspace::new();
        for p in paths {
            ws.add(read_document(p)?)?;
        }
        Ok(ws)
    }

    pub fn from_texts(texts: &[&str]) -> Result<Self, CliError> {
        let mut ws = Workspace::new();
        for t in texts {
            ws.add(Document::parse(t)?)?;
        }
        Ok(ws)
    }

    /// Roots in load order.
    pub fn roots(&self) -> &[String] {
        &self.roots
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.objects.keys()
    }

    pub fn get(&self, name: &str) -> Result<&Object, CliError> {
        self.objects.get(name).ok_or_else(|| CliError::Schema(format!("object {name:?} is not defined")))
    }

    /// The first object of the given type, when a command needs exactly one.
    pub fn root_of_kind(&self, kind: &str) -> Result<String, CliError> {
        if let Some(r) = self.roots.iter().find(|r| self.objects.get(*r).map(Object::kind) == Some(kind)) {
            return Ok(r.clone());
        }
        let all: Vec<&String> = self.objects.iter().filter(|(_, o)| o.kind() == kind).map(|(n, _)| n).collect();
        match all.as_slice() {
            [one] => Ok((*one).clone()),
            [] => schema(format!("no {kind} object found")),
            _ => schema(format!("several {kind} objects found and none is the root")),
        }
    }

    pub fn algebra(&self, name: &str) -> Result<NamedAlgebra, CliError> {
        let Object::LieAlgebra { dim, basis, brackets } = self.get(name)? else {
            return schema(format!("{name:?} is not a lie_algebra"));
        };
        if basis.len() != *dim {
            return schema(format!("{name}: basis has {} names for dimension {dim}", basis.len()));
        }
        let index = name_index(name, basis)?;
        let mut seen = BTreeMap::new();
        let mut pairs = Vec::new();
        for Bracket { x, y, value } in brackets {
            let (i, j) = (lookup(name, &index, x)?, lookup(name, &index, y)?);
            let key = (i.min(j), i.max(j));
            if seen.insert(key, ()).is_some() {
                return schema(format!("{name}: bracket [{x}, {y}] is listed twice"));
            }
            pairs.push((i, j, coefficient_vector(name, &index, *dim, value)?));
        }
        let algebra = LieAlgebra::from_pairs(name, *dim, &pairs)?;
        Ok(NamedAlgebra { algebra, basis: basis.clone() })
    }

    pub fn form(&self, name: &str) -> Result<(Option<String>, BilinearForm), CliError> {
        let Object::BilinearForm { algebra, gram } = self.get(name)? else {
            return schema(format!("{name:?} is not a bilinear_form"));
        };
        let m = matrix(name, gram)?;
        if let Some(a) = algebra {
            let alg = self.algebra(a)?;
            if alg.algebra.dim() != m.rows() {
                return schema(format!("{name}: gram is {}×{} but {a} has dimension {}", m.rows(), m.cols(), alg.algebra.dim()));
            }
        }
        Ok((algebra.clone(), BilinearForm::new(m)?))
    }

    /// A subspace object, or a whole algebra seen as the full subspace.
    pub fn space(&self, name: &str) -> Result<Space, CliError> {
        match self.get(name)? {
            Object::LieAlgebra { .. } => {
                let a = self.algebra(name)?;
                let n = a.algebra.dim();
                Ok(Space { algebra: name.into(), subspace: Subspace::full(n), names: a.basis })
            }
            Object::Subspace { algebra, basis } => {
                let a = self.algebra(algebra)?;
                let n = a.algebra.dim();
                let index = name_index(algebra, &a.basis)?;
                let cols = basis.iter().map(|v| coefficient_vector(name, &index, n, v)).collect::<Result<Vec<_>, _>>()?;
                let subspace = Subspace::from_columns(n, &cols)?;
                let names = adapted_names(name, &a.basis, &cols);
                Ok(Space { algebra: algebra.clone(), subspace, names })
            }
            other => schema(format!("{name:?} is a {}, expected a subspace or lie_algebra", other.kind())),
        }
    }

    pub fn map(&self, name: &str) -> Result<(Space, Space, Matrix), CliError> {
        let Object::LinearMap { source, target, matrix: rows } = self.get(name)? else {
            return schema(format!("{name:?} is not a linear_map"));
        };
        let (s, t) = (self.space(source)?, self.space(target)?);
        let m = matrix(name, rows)?;
        if m.rows() != t.subspace.dim() || m.cols() != s.subspace.dim() {
            return schema(format!(
                "{name}: matrix is {}×{} but {target} → {source} needs {}×{}",
                m.rows(),
                m.cols(),
                t.subspace.dim(),
                s.subspace.dim()
            ));
        }
        Ok((s, t, m))
    }

    /// The r-matrix with the algebra it lives on: a `lie_algebra` object or
    /// the restriction of an algebra to a subspace.
    pub fn r_matrix(&self, name: &str) -> Result<(Space, RMatrix), CliError> {
        let Object::RMatrix { algebra, coeffs } = self.get(name)? else {
            return schema(format!("{name:?} is not an r_matrix"));
        };
        let space = self.space(algebra)?;
        let ambient = self.algebra(&space.algebra)?;
        let alg = ambient.algebra.restrict(&space.subspace)?.with_name(algebra);
        let c = matrix(name, coeffs)?;
        Ok((space, RMatrix::new(alg, c)?))
    }

    pub fn triple(&self, name: &str) -> Result<NamedTriple, CliError> {
        let Object::ManinTriple { algebra, form, gplus, gminus } = self.get(name)? else {
            return schema(format!("{name:?} is not a manin_triple"));
        };
        let a = self.algebra(algebra)?;
        let (_, f) = self.form(form)?;
        let (plus, minus) = (self.space(gplus)?, self.space(gminus)?);
        for s in [&plus, &minus] {
            if s.algebra != *algebra {
                return schema(format!("{name}: subspace of {:?}, expected {algebra:?}", s.algebra));
            }
        }
        let triple = ManinTriple::new(a.algebra, f, plus.subspace.clone(), minus.subspace.clone())?;
        Ok(NamedTriple { triple, algebra: algebra.clone(), plus, minus })
    }

    pub fn pair(&self, name: &str) -> Result<NamedPair, CliError> {
        let Object::AntiIsoPair { eplus, eminus, phi, form_plus, form_minus } = self.get(name)? else {
            return schema(format!("{name:?} is not an anti_iso_pair"));
        };
        let (p, m) = (self.algebra(eplus)?, self.algebra(eminus)?);
        let (_, fp) = self.form(form_plus)?;
        let (_, fm) = self.form(form_minus)?;
        let (s, t, phi_m) = self.map(phi)?;
        if s.algebra != *eplus || t.algebra != *eminus || s.subspace.dim() != p.algebra.dim() || t.subspace.dim() != m.algebra.dim() {
            return schema(format!("{name}: φ must map {eplus} onto {eminus}"));
        }
        let pair = AntiIsoPair::new(p.algebra, m.algebra, phi_m, fp, fm)?;
        Ok(NamedPair { pair, plus_names: p.basis, minus_names: m.basis })
    }
}

fn name_index(owner: &str, names: &[String]) -> Result<BTreeMap<String, usize>, CliError> {
    let mut index = BTreeMap::new();
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.clone(), i).is_some() {
            return schema(format!("{owner}: basis name {n:?} is repeated"));
        }
    }
    Ok(index)
}

fn lookup(owner: &str, index: &BTreeMap<String, usize>, name: &str) -> Result<usize, CliError> {
    index.get(name).copied().ok_or_else(|| CliError::Schema(format!("{owner}: unknown basis vector {name:?}")))
}

fn coefficient_vector(owner: &str, index: &BTreeMap<String, usize>, n: usize, v: &BTreeMap<String, Scalar>) -> Result<Vec<Rational>, CliError> {
    let mut out = vec![Rational::zero(); n];
    for (k, c) in v {
        out[lookup(owner, index, k)?] = c.parse()?;
    }
    Ok(out)
}

pub fn matrix(owner: &str, rows: &[Row]) -> Result<Matrix, CliError> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(Scalar::parse).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    if parsed.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(parsed).map_err(|e| CliError::Schema(format!("{owner}: {e}")))
}

/// The ambient name for unit basis vectors, `owner[i]` otherwise.
pub fn adapted_names(owner: &str, ambient: &[String], cols: &[Vec<Rational>]) -> Vec<String> {
    cols.iter()
        .enumerate()
        .map(|(i, c)| {
            let n = c.len();
            match (0..n).find(|&k| *c == unit(n, k)) {
                Some(k) if c[k].is_one() => ambient[k].clone(),
                _ => format!("{owner}[{i}]"),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SL2: &str = r#"{
      "format": "manin-forge/1",
      "objects": {
        "sl2": {"type": "lie_algebra", "dim": 3, "basis": ["H", "Xp", "Xm"], "brackets": [
          {"x": "H", "y": "Xp", "value": {"Xp": "2"}},
          {"x": "H", "y": "Xm", "value": {"Xm": "-2"}},
          {"x": "Xp", "y": "Xm", "value": {"H": "1"}}]},
        "cartan": {"type": "subspace", "algebra": "sl2", "basis": [{"H": "1"}, {"Xp": "1", "Xm": "1"}]}
      }
    }"#;

    #[test]
    fn resolves_algebra_and_subspace() {
        let ws = Workspace::from_texts(&[SL2]).unwrap();
        let a = ws.algebra("sl2").unwrap();
        assert!(a.algebra.check_jacobi().passed());
        let s = ws.space("cartan").unwrap();
        assert_eq!(s.names, vec!["H".to_string(), "cartan[1]".to_string()]);
    }

    #[test]
    fn duplicate_names_and_missing_references_are_schema_errors() {
        assert!(matches!(Workspace::from_texts(&[SL2, SL2]), Err(CliError::Schema(_))));
        let ws = Workspace::from_texts(&[SL2]).unwrap();
        assert!(matches!(ws.algebra("nope"), Err(CliError::Schema(_))));
        assert!(matches!(ws.algebra("cartan"), Err(CliError::Schema(_))));
    }

    #[test]
    fn repeated_bracket_is_rejected() {
        let text = SL2.replace(r#"{"x": "H", "y": "Xm", "value": {"Xm": "-2"}}"#, r#"{"x": "Xp", "y": "H", "value": {"Xp": "-2"}}"#);
        let ws = Workspace::from_texts(&[&text]).unwrap();
        assert!(matches!(ws.algebra("sl2"), Err(CliError::Schema(_))));
    }
}
