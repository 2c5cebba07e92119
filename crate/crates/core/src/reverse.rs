//! The reverse construction: from two quadratic Lie algebras connected by an
//! anti-isomorphism to a Manin triple.
//!
//! Given `φ: E⁺ → E⁻` with `φ[X,Y] = −[φX,φY]`, the sum `E⁺ ⊕ E⁻` splits as
//! `F₊ ⊕ F₋` with `F± = graph(±φ)`. This is only a quasi-triple
//! (`[F₊,F₊] ⊂ F₋`); twisting by `B` built from a solution `θ` of the
//! modified CYBE on `E⁺` produces a Manin triple.

use alloc::vec::Vec;

use crate::cps::expect_matrix_eq;
use crate::error::{dim_check, Error};
use crate::lie::{BilinearForm, LieAlgebra, LinearMap, Subspace};
use crate::manin::{check_o_operator, OOperator, SplitAlgebra};
use crate::matrix::{add_vec, concat, int, neg_vec, sub_vec, unit, Matrix, Rational};
use crate::report::Report;
use crate::rmatrix::check_mcybe;
use crate::twilled::{build_gtilde_b, build_gtilde_b_forced, split_ideals, TwilledAlgebra};
use crate::Result;

/// `(E⁺, E⁻, φ)` with invariant forms on both sides.
#[derive(Debug, Clone, PartialEq)]
pub struct AntiIsoPair {
    pub eplus: LieAlgebra,
    pub eminus: LieAlgebra,
    /// `E⁻` coordinates of `φ(b_i)` in column `i`.
    pub phi: Matrix,
    pub form_plus: BilinearForm,
    pub form_minus: BilinearForm,
}

impl AntiIsoPair {
    /// Validates every invariant; failures are returned with the report.
    pub fn new(eplus: LieAlgebra, eminus: LieAlgebra, phi: Matrix, form_plus: BilinearForm, form_minus: BilinearForm) -> Result<Self> {
        let pair = Self::new_unchecked(eplus, eminus, phi, form_plus, form_minus)?;
        let r = pair.verify();
        if !r.passed() {
            return Err(Error::Precondition { what: "anti-isomorphic pair", report: r });
        }
        Ok(pair)
    }

    /// Shape checks only.
    pub fn new_unchecked(eplus: LieAlgebra, eminus: LieAlgebra, phi: Matrix, form_plus: BilinearForm, form_minus: BilinearForm) -> Result<Self> {
        let n = eplus.dim();
        dim_check("E⁻ dimension", n, eminus.dim())?;
        dim_check("φ rows", n, phi.rows())?;
        dim_check("φ columns", n, phi.cols())?;
        dim_check("E⁺ form", n, form_plus.dim())?;
        dim_check("E⁻ form", n, form_minus.dim())?;
        Ok(AntiIsoPair { eplus, eminus, phi, form_plus, form_minus })
    }

    pub fn dim(&self) -> usize {
        self.eplus.dim()
    }

    /// Jacobi and invariance on both sides, `φ` invertible, antihomomorphism,
    /// `(X,Y)_{E⁺} = −(φX,φY)_{E⁻}` and `φᵀ = −φ⁻¹` in the direct sum.
    pub fn verify(&self) -> Report {
        let n = self.dim();
        let mut r = Report::new();
        for (side, a, f) in [("plus", &self.eplus, &self.form_plus), ("minus", &self.eminus, &self.form_minus)] {
            let prefix = alloc::format!("{side}_");
            r.merge(a.check_jacobi().prefixed(&prefix));
            r.merge(a.check_ad_invariance(f).prefixed(&prefix));
        }
        r.expect("phi_invertible", &[], self.phi.invert().is_ok());
        let name = "phi_antihomomorphism";
        r.run(name);
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = self.phi.mul_vec(&self.eplus.basis_bracket(i, j));
                let rhs = neg_vec(&self.eminus.br(&self.phi.column(i), &self.phi.column(j)));
                r.expect_eq(name, &[i, j], lhs, rhs);
            }
        }
        let pulled = -&(&(&self.phi.transpose() * self.form_minus.gram()) * &self.phi);
        expect_matrix_eq(&mut r, "phi_anti_isometry", self.form_plus.gram(), &pulled);
        let name = "phi_transpose_minus_inverse";
        r.run(name);
        let (_, form) = direct_sum_quadratic(self);
        let map = LinearMap::new(Subspace::coordinate(2 * n, 0, n), Subspace::coordinate(2 * n, n, 2 * n), self.phi.clone());
        match (map.and_then(|m| m.transpose_within(&form)), self.phi.invert()) {
            (Ok(t), Ok(inv)) => expect_matrix_eq(&mut r, name, t.matrix(), &-&inv),
            _ => r.fail(name, &[], Vec::new(), Vec::new()),
        }
        r
    }
}

/// `E⁺ ⊕ E⁻` with both ideals orthogonal, `E⁺` first.
pub fn direct_sum_quadratic(p: &AntiIsoPair) -> (LieAlgebra, BilinearForm) {
    let a = LieAlgebra::direct_sum("E+ (+) E-", &p.eplus, &p.eminus);
    (a, BilinearForm::direct_sum(&p.form_plus, &p.form_minus))
}

/// The quasi-triple `(E⁺ ⊕ E⁻, F₊, F₋)` with `F± = graph(±φ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasiManinTriple {
    pub g: LieAlgebra,
    pub form: BilinearForm,
    pub fplus: Subspace,
    pub fminus: Subspace,
    /// The same data in the basis `e₊ⁱ = b_i + φb_i`, `e₋ⁱ = b_i − φb_i`.
    pub split: SplitAlgebra,
}

/// Builds the quasi-triple and reports its closure table.
pub fn quasi_manin_from_phi(p: &AntiIsoPair) -> Result<(QuasiManinTriple, Report)> {
    let n = p.dim();
    let (g, form) = direct_sum_quadratic(p);
    let i = Matrix::identity(n);
    let fplus = Subspace::new(i.vstack(&p.phi)?)?;
    let fminus = Subspace::new(i.vstack(&-&p.phi)?)?;
    let basis = fplus.basis().hstack(fminus.basis())?;
    let split = SplitAlgebra::new(g.in_basis(&basis)?, form.in_basis(&basis)?, n)?;
    let report = split.verify_quasi();
    Ok((QuasiManinTriple { g, form, fplus, fminus, split }, report))
}

/// `G(X⁺ + φX⁺) = X⁺ − φX⁺`, the identity in the `F±` bases. The report
/// checks invariance `G(σ_{X₋}Y₊) = [X₋, GY₊]` and the shape conditions.
pub fn metric_from_phi(q: &QuasiManinTriple) -> (Matrix, Report) {
    let n = q.split.plus_dim;
    let g = Matrix::identity(n);
    let mut r = crate::manin::check_invariant_extension(&q.split, &g);
    if let Ok(o) = OOperator::new(Matrix::zeros(n, n), g.clone()) {
        let shape = o.check_shape(&q.split);
        for name in ["metric_symmetric", "metric_invertible"] {
            if let Some(c) = shape.check(name) {
                r.merge(Report::from_checks([c.clone()]));
            }
        }
    }
    (g, r)
}

/// `θ` skew for `( , )_{E⁺}` and a solution of the modified CYBE on `E⁺`.
pub fn check_theta(p: &AntiIsoPair, theta: &Matrix) -> Report {
    let mut r = check_mcybe(&p.eplus, theta, "theta_mcybe");
    if theta.rows() == p.dim() && theta.cols() == p.dim() {
        let m = p.form_plus.gram();
        let sum = &(&theta.transpose() * m) + &(m * theta);
        expect_matrix_eq(&mut r, "theta_skew", &sum, &Matrix::zeros(p.dim(), p.dim()));
    }
    r
}

/// `B(X⁺ + φX⁺) = θX⁺ − φθX⁺`, i.e. `B = θ` in the `F±` bases. Refuses a
/// `θ` failing [`check_theta`] unless `force`.
pub fn b_from_theta(q: &QuasiManinTriple, p: &AntiIsoPair, theta: &Matrix, force: bool) -> Result<OOperator> {
    let n = p.dim();
    dim_check("θ rows", n, theta.rows())?;
    dim_check("θ columns", n, theta.cols())?;
    if !force {
        let r = check_theta(p, theta);
        if !r.passed() {
            return Err(Error::Precondition { what: "θ is skew and solves the modified CYBE", report: r });
        }
    }
    let (g, _) = metric_from_phi(q);
    OOperator::new(theta.clone(), g)
}

/// Output of the reverse pipeline.
#[derive(Debug, Clone, PartialEq)]
pub struct ReverseResult {
    pub quasi: QuasiManinTriple,
    pub operator: OOperator,
    pub twilled: TwilledAlgebra,
    pub eplus_b: Subspace,
    pub eminus_b: Subspace,
}

/// quasi-triple → `G` → `B` → `[ , ]_B` → `g_B` → ideals `graph(B ± G)`.
pub fn build_manin_from_orthogonal(p: &AntiIsoPair, theta: &Matrix, force: bool) -> Result<(ReverseResult, Report)> {
    let (quasi, quasi_report) = quasi_manin_from_phi(p)?;
    let mut report = quasi_report.prefixed("quasi_");
    report.merge(check_theta(p, theta));
    let (_, metric) = metric_from_phi(&quasi);
    report.merge(metric);
    let o = b_from_theta(&quasi, p, theta, force)?;
    report.merge(check_o_operator(&quasi.split, &o));
    let (tw, more) = if force { build_gtilde_b_forced(&quasi.split, &o)? } else { build_gtilde_b(&quasi.split, &o)? };
    report.merge(more);
    let (eplus_b, eminus_b, ideals) = split_ideals(&tw, &o)?;
    report.merge(ideals);
    Ok((ReverseResult { quasi, operator: o, twilled: tw, eplus_b, eminus_b }, report))
}

/// `[X, Y]_θ = [θX, Y] − [θY, X]` on `E⁺`.
pub fn theta_bracket(eplus: &LieAlgebra, theta: &Matrix) -> Result<LieAlgebra> {
    let n = eplus.dim();
    dim_check("θ rows", n, theta.rows())?;
    dim_check("θ columns", n, theta.cols())?;
    let name = alloc::format!("{}_theta", eplus.name());
    Ok(LieAlgebra::from_brackets(&name, n, |i, j| {
        sub_vec(&eplus.br(&theta.column(i), &unit(n, j)), &eplus.br(&theta.column(j), &unit(n, i)))
    }))
}

/// `Θ±(X) = (X, +X) + (θX ± X, −(θX ± X))`: the point of `g_B` with
/// `F₊` coordinate `X` and `F₋` coordinate `θX ± X`.
pub fn theta_map(theta: &Matrix, plus: bool, x: &[Rational]) -> Vec<Rational> {
    let tx = theta.mul_vec(x);
    let second = if plus { add_vec(&tx, x) } else { sub_vec(&tx, x) };
    concat(x, &second)
}

/// `[Θ±X, Θ±Y] = ±2Θ±[X, Y]` with `[X, Y]` the bracket of `F₋`, and
/// `[Θ⁺X, Θ⁻Y] = 0`, on basis pairs of `g_B`.
pub fn check_theta_maps(res: &ReverseResult, theta: &Matrix) -> Report {
    let a = &res.twilled.algebra;
    let km = &res.twilled.gminus;
    let n = km.dim();
    let mut r = Report::new();
    for (name, plus, factor) in [("theta_map_plus", true, int(2)), ("theta_map_minus", false, int(-2))] {
        r.run(name);
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = a.br(&theta_map(theta, plus, &unit(n, i)), &theta_map(theta, plus, &unit(n, j)));
                let rhs = theta_map(theta, plus, &km.basis_bracket(i, j)).iter().map(|v| v * &factor).collect();
                r.expect_eq(name, &[i, j], lhs, rhs);
            }
        }
    }
    let name = "theta_map_crossed";
    r.run(name);
    for i in 0..n {
        for j in 0..n {
            let v = a.br(&theta_map(theta, true, &unit(n, i)), &theta_map(theta, false, &unit(n, j)));
            r.expect_eq(name, &[i, j], v, crate::matrix::zero_vec(2 * n));
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn sl2_pair_quasi_triple() {
        let p = fixtures::sl2_pair();
        let (q, r) = quasi_manin_from_phi(&p).unwrap();
        assert!(r.passed(), "{r}");
        // [e₊¹, e₊²] = −2e₋²
        let v = q.split.algebra.basis_bracket(0, 1);
        assert_eq!(v, concat(&[int(0), int(0), int(0)], &[int(0), int(-2), int(0)]));
        let (g, m) = metric_from_phi(&q);
        assert!(m.passed(), "{m}");
        assert_eq!(g, Matrix::identity(3));
    }

    #[test]
    fn sl2_reverse_pipeline() {
        let p = fixtures::sl2_pair();
        let theta = fixtures::sl2_theta();
        let (res, r) = build_manin_from_orthogonal(&p, &theta, false).unwrap();
        assert!(r.passed(), "{r}");
        assert!(check_theta_maps(&res, &theta).passed());
        let tb = theta_bracket(&p.eplus, &theta).unwrap();
        assert!(tb.check_jacobi().passed());
    }

    #[test]
    fn doubled_theta_is_refused_and_breaks_the_ideals() {
        let p = fixtures::sl2_pair();
        let theta = fixtures::sl2_theta().scale(&int(2));
        assert!(build_manin_from_orthogonal(&p, &theta, false).is_err());
        let (_, r) = build_manin_from_orthogonal(&p, &theta, true).unwrap();
        assert!(!r.passed());
        assert_eq!(r.passed_check("theta_mcybe"), Some(false));
        assert_eq!(r.passed_check("o_operator_mass_minus_one"), Some(false));
        assert_eq!(r.passed_check("jacobi"), Some(true));
        assert_eq!(r.passed_check("ideal_plus_closed"), Some(false));
    }

    #[test]
    fn non_skew_theta_breaks_jacobi() {
        let p = fixtures::sl2_pair();
        let theta = Matrix::from_i64(&[&[0, 0, 0], &[0, 1, 1], &[0, 0, -1]]);
        let (_, r) = build_manin_from_orthogonal(&p, &theta, true).unwrap();
        assert_eq!(r.passed_check("theta_skew"), Some(false));
        assert_eq!(r.passed_check("jacobi"), Some(false));
    }

    #[test]
    fn homomorphism_is_rejected_as_phi() {
        let s = fixtures::sl2();
        let m = fixtures::sl2_trace_form();
        let minus = BilinearForm::new(-m.gram()).unwrap();
        let err = AntiIsoPair::new(s.clone(), s, Matrix::identity(3), minus, m).unwrap_err();
        assert!(matches!(err, Error::Precondition { .. }));
    }

    #[test]
    fn abelian_pair_is_trivial() {
        let a = LieAlgebra::abelian("a", 1);
        let f = BilinearForm::new(Matrix::from_i64(&[&[1]])).unwrap();
        let fm = BilinearForm::new(Matrix::from_i64(&[&[-1]])).unwrap();
        let p = AntiIsoPair::new(a.clone(), a, Matrix::identity(1), fm, f).unwrap();
        let (q, r) = quasi_manin_from_phi(&p).unwrap();
        assert!(r.passed());
        assert!(q.split.algebra.is_abelian());
        let theta = Matrix::zeros(1, 1);
        assert!(check_theta(&p, &theta).passed());
        let (res, r) = build_manin_from_orthogonal(&p, &theta, false).unwrap();
        assert!(r.passed(), "{r}");
        assert!(res.twilled.algebra.is_abelian());
    }
}
