//! Twilled extensions `g₊ ⋈ g₋` and the twisted double `g̃_B`.
//!
//! The general bracket is
//!
//! ```text
//! [X₊+X₋, Y₊+Y₋] = s[X₊,Y₊] + σ_{X₋}Y₊ − σ_{Y₋}X₊
//!                + [X₋,Y₋] + s(ρ_{X₊}Y₋ − ρ_{Y₊}X₋)
//! ```
//!
//! with `s = ±1`. The sign `−1` builds the extension of `(g₊)^op` and `g₋`
//! with the actions `(σ, −ρ)`. Coordinates put the plus block first.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::action::{act_diff, Action};
use crate::cps::{expect_matrix_eq, gauged_blocks, DoubleSplitting};
use crate::error::{dim_check, Error};
use crate::lie::{BilinearForm, LieAlgebra, LinearMap, Subspace};
use crate::manin::{bracket_b, check_o_operator, OOperator, SplitAlgebra};
use crate::matrix::{add_vec, concat, int, neg_vec, rat, scale_vec, sub_vec, unit, zero_vec, Matrix, Rational};
use crate::report::Report;
use crate::Result;

/// `σ`: `g₋` acting on `g₊`; `ρ`: `g₊` acting on `g₋`.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionPair {
    pub sigma: Action,
    pub rho: Action,
}

impl ActionPair {
    pub fn trivial(plus: usize, minus: usize) -> Self {
        ActionPair { sigma: Action::zero(minus, plus), rho: Action::zero(plus, minus) }
    }
}

/// The four conditions making the twilled bracket a Lie bracket: `σ` and `ρ`
/// are representations, and the two cocycle constraints
///
/// ```text
/// ρ_{[X₋,Y₋]} = ad_{X₋}ρ_{Y₋} − ρ_{Y₋}σ_{X₋} + ρ_{X₋}σ_{Y₋} − ad_{Y₋}ρ_{X₋}
/// σ_{[X₊,Y₊]} = ad_{X₊}σ_{Y₊} − σ_{Y₊}ρ_{X₊} + σ_{X₊}ρ_{Y₊} − ad_{Y₊}σ_{X₊}
/// ```
///
/// hold, where `ρ_{Y₋}X₊ := ρ_{X₊}Y₋` and `σ_{Y₊}X₋ := σ_{X₋}Y₊` are the
/// orbit maps.
pub fn check_twilled_constraints(gplus: &LieAlgebra, gminus: &LieAlgebra, a: &ActionPair) -> Report {
    let (p, m) = (gplus.dim(), gminus.dim());
    let mut r = Report::new();
    let shapes_ok = a.sigma.acting_dim() == m && a.sigma.module_dim() == p && a.rho.acting_dim() == p && a.rho.module_dim() == m;
    r.expect("action_shapes", &[p, m], shapes_ok);
    if !shapes_ok {
        return r;
    }
    r.merge(a.sigma.check_representation(gminus, "sigma_representation"));
    r.merge(a.rho.check_representation(gplus, "rho_representation"));

    let name = "rho_cocycle";
    r.run(name);
    for i in 0..m {
        for j in (i + 1)..m {
            let (x, y) = (unit(m, i), unit(m, j));
            let xy = gminus.basis_bracket(i, j);
            for k in 0..p {
                let z = unit(p, k);
                let lhs = a.rho.apply(&z, &xy);
                let mut rhs = gminus.br(&x, &a.rho.apply(&z, &y));
                rhs = sub_vec(&rhs, &a.rho.apply(&a.sigma.apply(&x, &z), &y));
                rhs = add_vec(&rhs, &a.rho.apply(&a.sigma.apply(&y, &z), &x));
                rhs = sub_vec(&rhs, &gminus.br(&y, &a.rho.apply(&z, &x)));
                r.expect_eq(name, &[i, j, k], lhs, rhs);
            }
        }
    }

    let name = "sigma_cocycle";
    r.run(name);
    for i in 0..p {
        for j in (i + 1)..p {
            let (x, y) = (unit(p, i), unit(p, j));
            let xy = gplus.basis_bracket(i, j);
            for k in 0..m {
                let z = unit(m, k);
                let lhs = a.sigma.apply(&z, &xy);
                let mut rhs = gplus.br(&x, &a.sigma.apply(&z, &y));
                rhs = sub_vec(&rhs, &a.sigma.apply(&a.rho.apply(&x, &z), &y));
                rhs = add_vec(&rhs, &a.sigma.apply(&a.rho.apply(&y, &z), &x));
                rhs = sub_vec(&rhs, &gplus.br(&y, &a.sigma.apply(&z, &x)));
                r.expect_eq(name, &[i, j, k], lhs, rhs);
            }
        }
    }
    r
}

/// `ρ_{Y₊}X₋ = Bσ_{X₋}Y₊ − [X₋, BY₊]`.
pub fn coboundary_rho(gminus: &LieAlgebra, sigma: &Action, b: &Matrix) -> Action {
    let (p, m) = (sigma.module_dim(), sigma.acting_dim());
    Action::from_fn(p, m, |j, i| {
        let x = unit(m, i);
        sub_vec(&b.mul_vec(sigma.basis(i, j)), &gminus.br(&x, &b.column(j)))
    })
}

/// A twilled extension with its ingredients.
#[derive(Debug, Clone, PartialEq)]
pub struct TwilledAlgebra {
    pub algebra: LieAlgebra,
    pub plus_dim: usize,
    pub sign: i8,
    pub gplus: LieAlgebra,
    pub gminus: LieAlgebra,
    pub actions: ActionPair,
    /// Ambient form when the extension is quadratic.
    pub form: Option<BilinearForm>,
}

impl TwilledAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn minus_dim(&self) -> usize {
        self.dim() - self.plus_dim
    }

    /// The action of `g₊` on `g₋` that appears in the bracket, `s·ρ`.
    pub fn acting_rho(&self) -> Action {
        self.actions.rho.scaled(&int(self.sign.into()))
    }

    pub fn plus_side(&self) -> Subspace {
        Subspace::coordinate(self.dim(), 0, self.plus_dim)
    }

    pub fn minus_side(&self) -> Subspace {
        Subspace::coordinate(self.dim(), self.plus_dim, self.dim())
    }

    /// Minus block restricts to `g₋`, plus block to `s·g₊`.
    pub fn check_restrictions(&self) -> Report {
        let mut r = Report::new();
        let plus = self.algebra.restrict(&self.plus_side());
        let minus = self.algebra.restrict(&self.minus_side());
        let expected_plus = self.gplus.scaled(&int(self.sign.into()));
        let (p, m) = (self.plus_dim, self.minus_dim());
        r.run("plus_restriction");
        match plus {
            Ok(a) => pairwise_eq(&mut r, "plus_restriction", &a, &expected_plus, p),
            Err(_) => r.fail("plus_restriction", &[], Vec::new(), Vec::new()),
        }
        r.run("minus_restriction");
        match minus {
            Ok(a) => pairwise_eq(&mut r, "minus_restriction", &a, &self.gminus, m),
            Err(_) => r.fail("minus_restriction", &[], Vec::new(), Vec::new()),
        }
        r
    }
}

fn pairwise_eq(r: &mut Report, name: &str, a: &LieAlgebra, b: &LieAlgebra, d: usize) {
    for i in 0..d {
        for j in (i + 1)..d {
            r.expect_eq(name, &[i, j], a.basis_bracket(i, j), b.basis_bracket(i, j));
        }
    }
}

/// Assembles the bracket without checking anything.
pub fn assemble_twilled(gplus: &LieAlgebra, gminus: &LieAlgebra, a: &ActionPair, sign: i8) -> LieAlgebra {
    let (p, m) = (gplus.dim(), gminus.dim());
    let s = int(sign.into());
    LieAlgebra::from_brackets("twilled", p + m, |i, j| {
        let (x, y) = (unit(p + m, i), unit(p + m, j));
        let (xp, xm, yp, ym) = (&x[..p], &x[p..], &y[..p], &y[p..]);
        let mut plus = scale_vec(&s, &gplus.br(xp, yp));
        plus = add_vec(&plus, &act_diff(&a.sigma, xm, yp, ym, xp));
        let mut minus = gminus.br(xm, ym);
        minus = add_vec(&minus, &scale_vec(&s, &act_diff(&a.rho, xp, ym, yp, xm)));
        concat(&plus, &minus)
    })
}

/// Builds the twilled extension after checking the constraints for the
/// effective data `(s·g₊, g₋, (σ, s·ρ))`, then checks Jacobi.
pub fn build_twilled(gplus: &LieAlgebra, gminus: &LieAlgebra, a: &ActionPair, sign: i8) -> Result<TwilledAlgebra> {
    if sign != 1 && sign != -1 {
        return Err(Error::Invalid("twilled sign must be +1 or -1".into()));
    }
    let s = int(sign.into());
    let effective = ActionPair { sigma: a.sigma.clone(), rho: a.rho.scaled(&s) };
    let r = check_twilled_constraints(&gplus.scaled(&s), gminus, &effective);
    if !r.passed() {
        return Err(Error::Precondition { what: "twilled constraints", report: r });
    }
    let algebra = assemble_twilled(gplus, gminus, a, sign);
    let j = algebra.check_jacobi();
    if !j.passed() {
        return Err(Error::Precondition { what: "assembled twilled bracket satisfies Jacobi", report: j });
    }
    Ok(TwilledAlgebra {
        algebra,
        plus_dim: gplus.dim(),
        sign,
        gplus: gplus.clone(),
        gminus: gminus.clone(),
        actions: a.clone(),
        form: None,
    })
}

/// `g̃_B`: the sign −1 extension of `g₊^B` and `g₋` with the dressing `σ`
/// and `ρ = coboundary_rho(B)`, in the coordinates of `s`.
///
/// The report compares the assembly with the literal expansion
///
/// ```text
/// −[X₊,Y₊]_B + Π₊[X₋,Y₊] − Π₊[Y₋,X₊]
///   + [X₋,Y₋] + BΠ₊[X₊,Y₋] − [BX₊,Y₋] − BΠ₊[Y₊,X₋] + [BY₊,X₋]
/// ```
///
/// and verifies Jacobi, invariance of the form and the Manin triple
/// `(g̃_B, (g₊^B)^op, g₋)`.
pub fn build_gtilde_b(s: &SplitAlgebra, o: &OOperator) -> Result<(TwilledAlgebra, Report)> {
    gtilde(s, o, false)
}

/// [`build_gtilde_b`] without refusing invalid input: `[ , ]_B` is formed
/// even when `B` fails the O-operator identity and the bracket is assembled
/// without checking the twilled constraints. Failures land in the report.
pub fn build_gtilde_b_forced(s: &SplitAlgebra, o: &OOperator) -> Result<(TwilledAlgebra, Report)> {
    gtilde(s, o, true)
}

fn gtilde(s: &SplitAlgebra, o: &OOperator, force: bool) -> Result<(TwilledAlgebra, Report)> {
    let twist = bracket_b(s, o, force)?;
    let gminus = s.minus_algebra();
    let sigma = s.dressing_action();
    let rho = coboundary_rho(&gminus, &sigma, &o.b);
    let pair = ActionPair { sigma, rho };
    let effective = ActionPair { sigma: pair.sigma.clone(), rho: pair.rho.scaled(&int(-1)) };
    let mut report = check_o_operator(s, o);
    report.merge(check_twilled_constraints(&twist.opposite(), &gminus, &effective));
    let mut tw = if force {
        TwilledAlgebra {
            algebra: assemble_twilled(&twist, &gminus, &pair, -1),
            plus_dim: s.plus_dim,
            sign: -1,
            gplus: twist.clone(),
            gminus: gminus.clone(),
            actions: pair.clone(),
            form: None,
        }
    } else {
        build_twilled(&twist, &gminus, &pair, -1)?
    };
    tw.form = Some(s.form.clone());

    let name = "twisted_bracket_literal_form";
    report.run(name);
    let n = s.dim();
    for i in 0..n {
        for j in (i + 1)..n {
            let (x, y) = (unit(n, i), unit(n, j));
            let lit = literal_gtilde(s, &twist, &o.b, &x, &y);
            report.expect_eq(name, &[i, j], tw.algebra.basis_bracket(i, j), lit);
        }
    }
    report.merge(tw.check_restrictions());
    let as_split = SplitAlgebra::new(tw.algebra.clone(), s.form.clone(), s.plus_dim)?;
    report.merge(as_split.verify_manin());
    Ok((tw, report))
}

fn literal_gtilde(s: &SplitAlgebra, twist: &LieAlgebra, b: &Matrix, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let (xp, xm) = (s.plus_part(x), s.minus_part(x));
    let (yp, ym) = (s.plus_part(y), s.minus_part(y));
    let amb = |u: &[Rational], v: &[Rational]| s.br(u, v);
    let (exp, exm) = (s.embed_plus(&xp), s.embed_minus(&xm));
    let (eyp, eym) = (s.embed_plus(&yp), s.embed_minus(&ym));

    let mut plus = neg_vec(&twist.br(&xp, &yp));
    plus = add_vec(&plus, &s.plus_part(&amb(&exm, &eyp)));
    plus = sub_vec(&plus, &s.plus_part(&amb(&eym, &exp)));

    let mut minus = s.minus_part(&amb(&exm, &eym));
    minus = add_vec(&minus, &b.mul_vec(&s.plus_part(&amb(&exp, &eym))));
    minus = sub_vec(&minus, &s.minus_part(&amb(&s.embed_minus(&b.mul_vec(&xp)), &eym)));
    minus = sub_vec(&minus, &b.mul_vec(&s.plus_part(&amb(&eyp, &exm))));
    minus = add_vec(&minus, &s.minus_part(&amb(&s.embed_minus(&b.mul_vec(&yp)), &exm)));
    concat(&plus, &minus)
}

/// `(I + B ± G)v = (v, (B ± G)v)` for plus coordinates `v`.
fn lift(h: &Matrix, v: &[Rational]) -> Vec<Rational> {
    concat(v, &h.mul_vec(v))
}

/// The orthogonal ideals `E± = graph(B ± G)` of `g̃_B`, with the report of
/// closure, vanishing crossed brackets, the closed form
/// `[(I+B±G)X₊, (I+B±G)Y₊] = ±2(I+B±G)G⁻¹[GX₊, GY₊]`, the double splitting
/// and the (anti)isomorphisms `X₋ ↦ ½(I+B±G)G⁻¹X₋` from `g₋`.
pub fn split_ideals(tw: &TwilledAlgebra, o: &OOperator) -> Result<(Subspace, Subspace, Report)> {
    let (p, m) = (tw.plus_dim, tw.minus_dim());
    dim_check("B columns", p, o.b.cols())?;
    dim_check("B rows", m, o.b.rows())?;
    let gi = o.g.invert().map_err(|_| Error::Singular("G"))?;
    let eplus = Subspace::new(Subspace::graph(&o.graph_map(true)).basis().clone())?;
    let eminus = Subspace::new(Subspace::graph(&o.graph_map(false)).basis().clone())?;
    let mut r = Report::new();
    let a = &tw.algebra;

    for (name, e) in [("ideal_plus_closed", &eplus), ("ideal_minus_closed", &eminus)] {
        r.run(name);
        for i in 0..p {
            for j in (i + 1)..p {
                let v = a.br(&e.vector(i), &e.vector(j));
                r.expect(name, &[i, j], e.contains(&v));
            }
        }
    }
    let name = "ideal_crossed_brackets_vanish";
    r.run(name);
    for i in 0..p {
        for j in 0..p {
            let v = a.br(&eplus.vector(i), &eminus.vector(j));
            r.expect_eq(name, &[i, j], v, zero_vec(p + m));
        }
    }

    let km = &tw.gminus;
    let name = "ideal_bracket_closed_form";
    r.run(name);
    for (sgn, plus) in [(0usize, true), (1usize, false)] {
        let h = o.graph_map(plus);
        let factor = if plus { int(2) } else { int(-2) };
        for i in 0..p {
            for j in (i + 1)..p {
                let lhs = a.br(&lift(&h, &unit(p, i)), &lift(&h, &unit(p, j)));
                let w = gi.mul_vec(&km.br(&o.g.column(i), &o.g.column(j)));
                let rhs = scale_vec(&factor, &lift(&h, &w));
                r.expect_eq(name, &[sgn, i, j], lhs, rhs);
            }
        }
    }

    if let Some(form) = &tw.form {
        let split = DoubleSplitting { fplus: tw.plus_side(), fminus: tw.minus_side(), eplus: eplus.clone(), eminus: eminus.clone(), form: form.clone() };
        r.merge(split.verify());
    }

    let half = rat(1, 2);
    for (name, plus) in [("ideal_isomorphism_plus", true), ("ideal_anti_isomorphism_minus", false)] {
        r.run(name);
        let h = o.graph_map(plus);
        let psi = |x: &[Rational]| scale_vec(&half, &lift(&h, &gi.mul_vec(x)));
        let sign = if plus { int(1) } else { int(-1) };
        let images: Vec<Vec<Rational>> = (0..m).map(|i| psi(&unit(m, i))).collect();
        let rank = Matrix::from_columns(p + m, &images)?.rank();
        r.expect(name, &[rank, m], rank == m);
        for i in 0..m {
            for j in (i + 1)..m {
                let lhs = psi(&km.basis_bracket(i, j));
                let rhs = scale_vec(&sign, &a.br(&images[i], &images[j]));
                r.expect_eq(name, &[i, j], lhs, rhs);
            }
        }
    }
    Ok((eplus, eminus, r))
}

/// `φ_B: E⁺ → E⁻`, `X₊ + (B+G)X₊ ↦ X₊ + (B−G)X₊`. In the graph bases both
/// ideals are parameterized by `g₊`, so its matrix is the identity.
///
/// The report checks that `φ_B` is an antihomomorphism, that
/// `φ_Bᵀ = −φ_B⁻¹` and that `E[JX, JY] = J[X, Y]` on basis pairs.
pub fn phi_b(tw: &TwilledAlgebra, o: &OOperator) -> Result<(LinearMap, Report)> {
    let (eplus, eminus, _) = split_ideals(tw, o)?;
    let p = tw.plus_dim;
    let n = tw.dim();
    let phi = LinearMap::new(eplus.clone(), eminus.clone(), Matrix::identity(p))?;
    let a = &tw.algebra;
    let mut r = Report::new();

    let name = "phi_b_antihomomorphism";
    r.run(name);
    for i in 0..p {
        for j in (i + 1)..p {
            let inner = a.br(&eplus.vector(i), &eplus.vector(j));
            let lhs = match eplus.coords(&inner) {
                Ok(c) => eminus.embed(&c),
                Err(_) => {
                    r.fail(name, &[i, j], inner, Vec::new());
                    continue;
                }
            };
            let rhs = neg_vec(&a.br(&eminus.vector(i), &eminus.vector(j)));
            r.expect_eq(name, &[i, j], lhs, rhs);
        }
    }

    if let Some(form) = &tw.form {
        let name = "phi_b_anti_isometry";
        r.run(name);
        match phi.transpose_within(form) {
            Ok(t) => expect_matrix_eq(&mut r, name, t.matrix(), &-&Matrix::identity(p)),
            Err(_) => r.fail(name, &[], Vec::new(), Vec::new()),
        }
    }

    let (e, j, _) = gauged_blocks(&o.g, &o.b)?;
    let name = "e_of_j_brackets";
    r.run(name);
    for x in 0..n {
        for y in (x + 1)..n {
            let lhs = e.mul_vec(&a.br(&j.column(x), &j.column(y)));
            let rhs = j.mul_vec(&a.basis_bracket(x, y));
            r.expect_eq(name, &[x, y], lhs, rhs);
        }
    }
    Ok((phi, r))
}

/// `N_φ(X⁺, Y⁺) = φ[X⁺,Y⁺] + φ⁻¹[φX⁺,φY⁺] − [φX⁺,Y⁺] − [X⁺,φY⁺]` on the
/// graph basis of `E⁺`, compared with `−4[GX₊, GY₊]`, together with
/// `[X^±, Y^±] = ∓½(I+B±G)G⁻¹N_φ(X⁺, Y⁺)` where `X⁻ = φX⁺`.
pub fn nijenhuis_phi(tw: &TwilledAlgebra, o: &OOperator) -> Result<Report> {
    let (eplus, eminus, _) = split_ideals(tw, o)?;
    let p = tw.plus_dim;
    let gi = o.g.invert().map_err(|_| Error::Singular("G"))?;
    let a = &tw.algebra;
    // Any ambient vector splits uniquely along E⁺ ⊕ E⁻.
    let both = eplus.basis().hstack(eminus.basis())?;
    let to_plus_minus = |v: &[Rational]| -> Result<(Vec<Rational>, Vec<Rational>)> {
        let c = both.solve_vec(v)?;
        Ok((c[..p].to_vec(), c[p..].to_vec()))
    };
    let phi = |v: &[Rational]| -> Result<Vec<Rational>> {
        let (cp, cm) = to_plus_minus(v)?;
        Ok(add_vec(&eminus.embed(&cp), &eplus.embed(&cm)))
    };
    let mut r = Report::new();
    r.run("nijenhuis_phi_closed_form");
    r.run("nijenhuis_phi_bracket_relation");
    for i in 0..p {
        for j in (i + 1)..p {
            let (x, y) = (eplus.vector(i), eplus.vector(j));
            let (fx, fy) = (eminus.vector(i), eminus.vector(j));
            let mut nphi = phi(&a.br(&x, &y))?;
            nphi = add_vec(&nphi, &phi(&a.br(&fx, &fy))?);
            nphi = sub_vec(&nphi, &a.br(&fx, &y));
            nphi = sub_vec(&nphi, &a.br(&x, &fy));
            let w = tw.gminus.br(&o.g.column(i), &o.g.column(j));
            let expected = concat(&zero_vec(p), &scale_vec(&int(-4), &w));
            r.expect_eq("nijenhuis_phi_closed_form", &[i, j], nphi.clone(), expected);

            let nm = &nphi[p..];
            for (sgn, plus) in [(0usize, true), (1usize, false)] {
                let h = o.graph_map(plus);
                let factor = if plus { rat(-1, 2) } else { rat(1, 2) };
                let lhs = if plus { a.br(&x, &y) } else { a.br(&fx, &fy) };
                let rhs = scale_vec(&factor, &lift(&h, &gi.mul_vec(nm)));
                r.expect_eq("nijenhuis_phi_bracket_relation", &[sgn, i, j], lhs, rhs);
            }
        }
    }
    Ok(r)
}

/// `ad_{X₋}(I+B±G)Y₊ = (I+B±G)σ_{X₋}Y₊` in `g̃_B`, and `ad_{X₋}` acting as a
/// derivation of each ideal.
pub fn adjoint_intertwiner_check(tw: &TwilledAlgebra, o: &OOperator) -> Result<Report> {
    let (p, m) = (tw.plus_dim, tw.minus_dim());
    dim_check("B columns", p, o.b.cols())?;
    let a = &tw.algebra;
    let sigma = &tw.actions.sigma;
    let mut r = Report::new();
    for (name, der, plus) in [
        ("adjoint_intertwiner_plus", "adjoint_derivation_plus", true),
        ("adjoint_intertwiner_minus", "adjoint_derivation_minus", false),
    ] {
        r.run(name);
        r.run(der);
        let h = o.graph_map(plus);
        for i in 0..m {
            let xm = concat(&zero_vec(p), &unit(m, i));
            for j in 0..p {
                let lhs = a.br(&xm, &lift(&h, &unit(p, j)));
                let rhs = lift(&h, sigma.basis(i, j));
                r.expect_eq(name, &[i, j], lhs, rhs);
            }
            for j in 0..p {
                for k in (j + 1)..p {
                    let (u, v) = (lift(&h, &unit(p, j)), lift(&h, &unit(p, k)));
                    let lhs = a.br(&xm, &a.br(&u, &v));
                    let rhs = add_vec(&a.br(&a.br(&xm, &u), &v), &a.br(&u, &a.br(&xm, &v)));
                    r.expect_eq(der, &[i, j, k], lhs, rhs);
                }
            }
        }
    }
    Ok(r)
}

/// True when every structure constant vanishes on the subspace.
pub fn is_abelian_on(a: &LieAlgebra, s: &Subspace) -> bool {
    (0..s.dim()).all(|i| (0..s.dim()).all(|j| a.br(&s.vector(i), &s.vector(j)).iter().all(Zero::is_zero)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lie::LieAlgebra;

    fn sl2_gtilde() -> (TwilledAlgebra, OOperator, Report) {
        let t = fixtures::sl2_double();
        let (g, b) = fixtures::sl2_metric_twist();
        let o = OOperator::new(b, g).unwrap();
        let (tw, r) = build_gtilde_b(t.split(), &o).unwrap();
        (tw, o, r)
    }

    #[test]
    fn trivial_extension_is_direct_sum() {
        let a = fixtures::sl2();
        let b = fixtures::aff1();
        let tw = build_twilled(&a, &b, &ActionPair::trivial(3, 2), 1).unwrap();
        assert_eq!(tw.algebra, LieAlgebra::direct_sum("twilled", &a, &b));
        assert!(tw.check_restrictions().passed());
    }

    #[test]
    fn sl2_gtilde_report_passes() {
        let (tw, o, r) = sl2_gtilde();
        assert!(r.passed(), "{r}");
        let (_, _, ideals) = split_ideals(&tw, &o).unwrap();
        assert!(ideals.passed(), "{ideals}");
        let (_, phi) = phi_b(&tw, &o).unwrap();
        assert!(phi.passed(), "{phi}");
        assert!(nijenhuis_phi(&tw, &o).unwrap().passed());
        assert!(adjoint_intertwiner_check(&tw, &o).unwrap().passed());
    }

    #[test]
    fn sl2_classical_double_is_sign_plus_extension() {
        let t = fixtures::sl2_double();
        let s = t.split();
        let pair = ActionPair { sigma: s.dressing_action(), rho: Action::from_fn(3, 3, |j, i| s.minus_part(&s.br(&s.embed_plus(&unit(3, j)), &s.embed_minus(&unit(3, i))))) };
        let tw = build_twilled(&s.plus_algebra(), &s.minus_algebra(), &pair, 1).unwrap();
        assert_eq!(tw.algebra.with_name("x"), s.algebra.clone().with_name("x"));
    }

    #[test]
    fn non_cocycle_fails_constraints_and_jacobi() {
        let a = fixtures::sl2();
        let b = fixtures::sl2();
        let sigma = Action::from_fn(3, 3, |i, j| a.basis_bracket(i, j));
        let rho = Action::from_fn(3, 3, |i, j| if (i, j) == (0, 1) { unit(3, 2) } else { zero_vec(3) });
        let pair = ActionPair { sigma, rho };
        assert!(!check_twilled_constraints(&a, &b, &pair).passed());
        assert!(build_twilled(&a, &b, &pair, 1).is_err());
        assert!(!assemble_twilled(&a, &b, &pair, 1).check_jacobi().passed());
    }

    #[test]
    fn bad_sign_is_rejected() {
        let a = LieAlgebra::abelian("a", 1);
        assert!(build_twilled(&a, &a, &ActionPair::trivial(1, 1), 0).is_err());
    }

    #[test]
    fn zero_twist_gives_zero_rho() {
        let t = fixtures::sl2_double();
        let s = t.split();
        assert!(coboundary_rho(&s.minus_algebra(), &s.dressing_action(), &Matrix::zeros(3, 3)).is_zero());
    }
}
