//! The three commands that read documents: `verify`, `forward`, `reverse`.

use manin_forge_core::cps::{cps_gauged, eigenspace};
use manin_forge_core::manin::{check_graph_homomorphism, check_invariant_extension, check_o_operator, OOperator};
use manin_forge_core::matrix::{int, Matrix};
use manin_forge_core::reverse::{build_manin_from_orthogonal, check_theta, check_theta_maps, ReverseResult};
use manin_forge_core::rmatrix::{check_semenov, gb_from_r};
use manin_forge_core::twilled::{adjoint_intertwiner_check, build_gtilde_b, nijenhuis_phi, phi_b, split_ideals, TwilledAlgebra};
use manin_forge_core::{BilinearForm, LieAlgebra, Report, Subspace};

use crate::error::CliError;
use crate::schema::{rows_from_matrix, sparse_vector, Bracket, Document, Object};
use crate::workspace::{NamedTriple, Workspace};

/// Result of a pipeline: every check that ran and, when the pipeline got
/// far enough, the structures it built.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub outputs: Option<Document>,
}

impl Outcome {
    fn stopped(report: Report) -> Self {
        Outcome { report, outputs: None }
    }
}

/// Where `forward` takes `(G, B)` from.
#[derive(Debug, Clone)]
pub enum OperatorSource {
    RMatrix(String),
    MetricTwist { metric: String, twist: String },
}

/// The invariant suite of the root objects, or of every object when no
/// document names a root. Check names are prefixed with the object name.
pub fn verify(ws: &Workspace) -> Result<Report, CliError> {
    let targets: Vec<String> = if ws.roots().is_empty() { ws.names().cloned().collect() } else { ws.roots().to_vec() };
    let mut report = Report::new();
    for name in &targets {
        report.merge(verify_object(ws, name)?.prefixed(&format!("{name}.")));
    }
    Ok(report)
}

fn verify_object(ws: &Workspace, name: &str) -> Result<Report, CliError> {
    let mut r = Report::new();
    match ws.get(name)? {
        Object::LieAlgebra { .. } => r = ws.algebra(name)?.algebra.check_jacobi(),
        Object::BilinearForm { .. } => {
            let (alg, form) = ws.form(name)?;
            let g = form.gram();
            r.expect("symmetric", &[], g.transpose() == *g);
            if let Some(a) = alg {
                r.merge(ws.algebra(&a)?.algebra.check_ad_invariance(&form));
            }
        }
        Object::Subspace { .. } => {
            let s = ws.space(name)?;
            let a = ws.algebra(&s.algebra)?;
            r.expect("subalgebra", &[], a.algebra.restrict(&s.subspace).is_ok());
        }
        Object::LinearMap { .. } => {
            let (s, t, _) = ws.map(name)?;
            r.expect("source_and_target_resolve", &[s.subspace.dim(), t.subspace.dim()], true);
        }
        Object::RMatrix { .. } => {
            let (_, rm) = ws.r_matrix(name)?;
            r = rm.algebra.check_jacobi();
            r.merge(rm.verify());
        }
        Object::ManinTriple { .. } => {
            let t = ws.triple(name)?;
            r = t.triple.verify();
            r.merge(t.triple.split().check_dressing_representation());
        }
        Object::AntiIsoPair { .. } => r = ws.pair(name)?.pair.verify(),
    }
    Ok(r)
}

/// Manin triple + `(G, B)` → g̃_B, its ideals and every identity along the
/// way. Stops at the first stage whose preconditions fail.
pub fn forward(ws: &Workspace, triple: &str, source: &OperatorSource) -> Result<Outcome, CliError> {
    let nt = ws.triple(triple)?;
    let mut report = nt.triple.verify().prefixed("triple.");
    if !report.passed() {
        return Ok(Outcome::stopped(report));
    }
    let split = nt.triple.split();

    let o = match source {
        OperatorSource::RMatrix(name) => {
            let (space, r) = ws.r_matrix(name)?;
            let mut rr = Report::new();
            if space.algebra == nt.algebra {
                if space.subspace.basis() != nt.minus.subspace.basis() {
                    return Err(CliError::Schema(format!("{name}: r must live on the g₋ of {triple} in its basis")));
                }
            } else {
                let gm = split.minus_algebra();
                rr.run("algebra_is_gminus");
                if gm.dim() != r.dim() {
                    return Err(CliError::Schema(format!("{name}: dimension {} but g₋ has dimension {}", r.dim(), gm.dim())));
                }
                for i in 0..gm.dim() {
                    for j in (i + 1)..gm.dim() {
                        rr.expect_eq("algebra_is_gminus", &[i, j], r.algebra.basis_bracket(i, j), gm.basis_bracket(i, j));
                    }
                }
            }
            rr.merge(r.verify());
            let ok = rr.passed();
            report.merge(rr.prefixed("r_matrix."));
            if !ok {
                return Ok(Outcome::stopped(report));
            }
            gb_from_r(split, &r)?
        }
        OperatorSource::MetricTwist { metric, twist } => {
            let g = operator_map(ws, metric, &nt)?;
            let b = operator_map(ws, twist, &nt)?;
            OOperator::new(b, g)?
        }
    };

    let mut op = o.check_shape(split);
    op.merge(check_invariant_extension(split, &o.g));
    op.merge(check_o_operator(split, &o));
    op.merge(check_graph_homomorphism(split, &o));
    let ok = op.passed();
    report.merge(op.prefixed("operator."));
    if !ok {
        return Ok(Outcome::stopped(report));
    }

    let (tw, built) = build_gtilde_b(split, &o)?;
    report.merge(built.prefixed("gtilde."));
    let (ep, em, ideals) = split_ideals(&tw, &o)?;
    report.merge(ideals.prefixed("ideals."));
    let (phi, phi_rep) = phi_b(&tw, &o)?;
    report.merge(phi_rep.prefixed("phi_b."));
    report.merge(nijenhuis_phi(&tw, &o)?.prefixed("nijenhuis."));
    report.merge(adjoint_intertwiner_check(&tw, &o)?.prefixed("adjoint."));
    report.merge(check_semenov(&split.minus_algebra(), &o)?.prefixed("semenov."));
    report.merge(cps_report(&tw, &o, &ep, &em)?.prefixed("cps."));

    let mut names = nt.plus.names.clone();
    names.extend(nt.minus.names.iter().cloned());
    let doc = emit("gtilde", &tw, &o, &names, &ep, &em, Some(phi.matrix()));
    Ok(Outcome { report, outputs: Some(doc) })
}

/// A `g₊ → g₋` map in the triple's own bases.
fn operator_map(ws: &Workspace, name: &str, nt: &NamedTriple) -> Result<Matrix, CliError> {
    let (s, t, m) = ws.map(name)?;
    let fits = |a: &crate::workspace::Space, b: &crate::workspace::Space| a.algebra == b.algebra && a.subspace.basis() == b.subspace.basis();
    if !fits(&s, &nt.plus) || !fits(&t, &nt.minus) {
        return Err(CliError::Schema(format!("{name}: must map the triple's g₊ to its g₋")));
    }
    Ok(m)
}

/// Relations of `{E, J, F}` for the gauge `(G, B)`, and `E`'s eigenspaces
/// against the ideals.
fn cps_report(tw: &TwilledAlgebra, o: &OOperator, ep: &Subspace, em: &Subspace) -> Result<Report, CliError> {
    let form = tw.form.clone().ok_or_else(|| CliError::Schema("twilled extension carries no form".into()))?;
    let c = cps_gauged(&form, &tw.plus_side(), &tw.minus_side(), &o.g, &o.b)?;
    let mut r = c.verify();
    r.expect("e_plus_eigenspace_is_ideal", &[], eigenspace(&c.e, &int(1))?.same_span(ep));
    r.expect("e_minus_eigenspace_is_ideal", &[], eigenspace(&c.e, &int(-1))?.same_span(em));
    Ok(r)
}

/// Pair + `θ` → g_B with its ideals.
pub fn reverse(ws: &Workspace, pair: &str, theta: &str) -> Result<Outcome, CliError> {
    let np = ws.pair(pair)?;
    let p = &np.pair;
    let mut report = p.verify().prefixed("pair.");
    let (s, t, th) = ws.map(theta)?;
    let eplus = ws.get(pair).ok().and_then(|o| match o {
        Object::AntiIsoPair { eplus, .. } => Some(eplus.clone()),
        _ => None,
    });
    if Some(&s.algebra) != eplus.as_ref() || s.algebra != t.algebra || s.subspace.dim() != p.dim() || t.subspace.dim() != p.dim() {
        return Err(CliError::Schema(format!("{theta}: θ must map E⁺ to itself")));
    }
    report.merge(check_theta(p, &th).prefixed("theta."));
    if !report.passed() {
        return Ok(Outcome::stopped(report));
    }
    let (res, built) = build_manin_from_orthogonal(p, &th, false)?;
    report.merge(built.prefixed("gb."));
    report.merge(check_theta_maps(&res, &th).prefixed("theta_maps."));
    let ReverseResult { twilled, operator, eplus_b, eminus_b, .. } = &res;
    report.merge(cps_report(twilled, operator, eplus_b, eminus_b)?.prefixed("cps."));

    let mut names: Vec<String> = np.plus_names.iter().map(|n| format!("p.{n}")).collect();
    names.extend(np.minus_names.iter().map(|n| format!("m.{n}")));
    let doc = emit("gb", twilled, operator, &names, eplus_b, eminus_b, None);
    Ok(Outcome { report, outputs: Some(doc) })
}

pub fn algebra_object(a: &LieAlgebra, names: &[String]) -> Object {
    let n = a.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let value = sparse_vector(names, &a.basis_bracket(i, j));
            if !value.is_empty() {
                brackets.push(Bracket { x: names[i].clone(), y: names[j].clone(), value });
            }
        }
    }
    Object::LieAlgebra { dim: n, basis: names.to_vec(), brackets }
}

pub fn subspace_object(algebra: &str, names: &[String], s: &Subspace) -> Object {
    Object::Subspace { algebra: algebra.into(), basis: s.basis().columns().iter().map(|c| sparse_vector(names, c)).collect() }
}

pub fn form_object(algebra: &str, f: &BilinearForm) -> Object {
    Object::BilinearForm { algebra: Some(algebra.into()), gram: rows_from_matrix(f.gram()) }
}

pub fn map_object(source: &str, target: &str, m: &Matrix) -> Object {
    Object::LinearMap { source: source.into(), target: target.into(), matrix: rows_from_matrix(m) }
}

/// The new Manin triple, its ideals and the maps that built it, rooted at
/// `{prefix}.triple`.
fn emit(prefix: &str, tw: &TwilledAlgebra, o: &OOperator, names: &[String], ep: &Subspace, em: &Subspace, phi: Option<&Matrix>) -> Document {
    let key = |s: &str| format!("{prefix}.{s}");
    let mut doc = Document::new(Some(key("triple")));
    let obj = &mut doc.objects;
    obj.insert(prefix.into(), algebra_object(&tw.algebra, names));
    if let Some(f) = &tw.form {
        obj.insert(key("form"), form_object(prefix, f));
    }
    obj.insert(key("gplus"), subspace_object(prefix, names, &tw.plus_side()));
    obj.insert(key("gminus"), subspace_object(prefix, names, &tw.minus_side()));
    obj.insert(key("eplus"), subspace_object(prefix, names, ep));
    obj.insert(key("eminus"), subspace_object(prefix, names, em));
    obj.insert(key("metric"), map_object(&key("gplus"), &key("gminus"), &o.g));
    obj.insert(key("twist"), map_object(&key("gplus"), &key("gminus"), &o.b));
    if let Some(m) = phi {
        obj.insert(key("phi_b"), map_object(&key("eplus"), &key("eminus"), m));
    }
    obj.insert(
        key("triple"),
        Object::ManinTriple { algebra: prefix.into(), form: key("form"), gplus: key("gplus"), gminus: key("gminus") },
    );
    doc
}

