//! Manin triples, the dressing action and extended O-operators of mass −1.
//!
//! Most operations work on a [`SplitAlgebra`]: a quadratic Lie algebra
//! written in a basis adapted to a splitting `g₊ ⊕ g₋` (plus block first).
//! Both a true Manin triple and the quasi-triples of the reverse
//! construction produce one, so the O-operator machinery is shared.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::action::Action;
use crate::error::{dim_check, Error};
use crate::lie::{BilinearForm, LieAlgebra, Subspace};
use crate::matrix::{add_vec, concat, int, is_zero_vec, neg_vec, sub_vec, unit, zero_vec, Matrix, Rational};
use crate::report::Report;
use crate::Result;

/// A quadratic Lie algebra in coordinates adapted to `g₊ ⊕ g₋`.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitAlgebra {
    pub algebra: LieAlgebra,
    pub form: BilinearForm,
    pub plus_dim: usize,
}

impl SplitAlgebra {
    pub fn new(algebra: LieAlgebra, form: BilinearForm, plus_dim: usize) -> Result<Self> {
        dim_check("form on split algebra", algebra.dim(), form.dim())?;
        if plus_dim > algebra.dim() {
            return Err(Error::Dimension { context: "plus block", expected: algebra.dim(), found: plus_dim });
        }
        Ok(SplitAlgebra { algebra, form, plus_dim })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn minus_dim(&self) -> usize {
        self.dim() - self.plus_dim
    }

    pub fn embed_plus(&self, x: &[Rational]) -> Vec<Rational> {
        concat(x, &zero_vec(self.minus_dim()))
    }

    pub fn embed_minus(&self, x: &[Rational]) -> Vec<Rational> {
        concat(&zero_vec(self.plus_dim), x)
    }

    /// `Π₊ v` in plus coordinates.
    pub fn plus_part(&self, v: &[Rational]) -> Vec<Rational> {
        v[..self.plus_dim].to_vec()
    }

    /// `Π₋ v` in minus coordinates.
    pub fn minus_part(&self, v: &[Rational]) -> Vec<Rational> {
        v[self.plus_dim..].to_vec()
    }

    /// Ambient bracket.
    pub fn br(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.algebra.br(x, y)
    }

    /// `[e_a, f_b]` pairing matrix `(e_a, f_b)`, shape `plus × minus`.
    pub fn pairing(&self) -> Matrix {
        self.form.gram().slice(0, self.plus_dim, self.plus_dim, self.dim())
    }

    /// `g₋` with `[X₋, Y₋]` read off the minus block.
    pub fn minus_algebra(&self) -> LieAlgebra {
        let d = self.minus_dim();
        LieAlgebra::from_brackets("g-", d, |i, j| {
            self.minus_part(&self.br(&self.embed_minus(&unit(d, i)), &self.embed_minus(&unit(d, j))))
        })
    }

    /// `g₊` with `[X₊, Y₊]` read off the plus block.
    pub fn plus_algebra(&self) -> LieAlgebra {
        let d = self.plus_dim;
        LieAlgebra::from_brackets("g+", d, |i, j| {
            self.plus_part(&self.br(&self.embed_plus(&unit(d, i)), &self.embed_plus(&unit(d, j))))
        })
    }

    /// Dressing `σ_{X₋} Y₊ = Π₊[X₋, Y₊]`, in plus coordinates.
    pub fn dressing(&self, xm: &[Rational], yp: &[Rational]) -> Vec<Rational> {
        self.plus_part(&self.br(&self.embed_minus(xm), &self.embed_plus(yp)))
    }

    /// The dressing action as a table, `g₋` acting on `g₊`.
    pub fn dressing_action(&self) -> Action {
        let (p, m) = (self.plus_dim, self.minus_dim());
        Action::from_fn(m, p, |i, j| self.dressing(&unit(m, i), &unit(p, j)))
    }

    /// Witness list of basis pairs of the given block whose bracket leaves it.
    fn closure_failures(&self, plus: bool, r: &mut Report, name: &str) {
        r.run(name);
        let (lo, hi) = if plus { (0, self.plus_dim) } else { (self.plus_dim, self.dim()) };
        let n = self.dim();
        for i in lo..hi {
            for j in (i + 1)..hi {
                let v = self.algebra.basis_bracket(i, j);
                let outside: Vec<Rational> = if plus { self.minus_part(&v) } else { self.plus_part(&v) };
                if !is_zero_vec(&outside) {
                    r.fail(name, &[i, j], v, zero_vec(n));
                }
            }
        }
    }

    /// Jacobi, invariance, both blocks Lagrangian and closed.
    pub fn verify_manin(&self) -> Report {
        let mut r = self.algebra.check_jacobi();
        r.merge(self.algebra.check_ad_invariance(&self.form));
        self.verify_lagrangian(&mut r);
        self.closure_failures(true, &mut r, "gplus_subalgebra");
        self.closure_failures(false, &mut r, "gminus_subalgebra");
        r
    }

    fn verify_lagrangian(&self, r: &mut Report) {
        let n = self.dim();
        let plus = Subspace::coordinate(n, 0, self.plus_dim);
        let minus = Subspace::coordinate(n, self.plus_dim, n);
        r.expect("gplus_lagrangian", &[], self.form.is_lagrangian(&plus));
        r.expect("gminus_lagrangian", &[], self.form.is_lagrangian(&minus));
    }

    /// Quasi-triple closure: `[F₋,F₋] ⊂ F₋`, `[F₊,F₋] ⊂ F₊`, `[F₊,F₊] ⊂ F₋`,
    /// plus Jacobi, invariance and both blocks Lagrangian.
    pub fn verify_quasi(&self) -> Report {
        let mut r = self.algebra.check_jacobi();
        r.merge(self.algebra.check_ad_invariance(&self.form));
        self.verify_lagrangian(&mut r);
        self.closure_failures(false, &mut r, "fminus_subalgebra");
        let (p, n) = (self.plus_dim, self.dim());
        r.run("fplus_fminus_in_fplus");
        r.run("fplus_fplus_in_fminus");
        for i in 0..p {
            for j in 0..n {
                let v = self.algebra.basis_bracket(i, j);
                if j >= p {
                    if !is_zero_vec(&self.minus_part(&v)) {
                        r.fail("fplus_fminus_in_fplus", &[i, j], v, zero_vec(n));
                    }
                } else if j > i && !is_zero_vec(&self.plus_part(&v)) {
                    r.fail("fplus_fplus_in_fminus", &[i, j], v, zero_vec(n));
                }
            }
        }
        r
    }

    /// `σ_{[X₋,Y₋]} = [σ_{X₋}, σ_{Y₋}]` on basis vectors.
    pub fn check_dressing_representation(&self) -> Report {
        self.dressing_action().check_representation(&self.minus_algebra(), "dressing_representation")
    }
}

/// `(g, g₊, g₋)` with the ambient form.
#[derive(Debug, Clone, PartialEq)]
pub struct ManinTriple {
    pub g: LieAlgebra,
    pub form: BilinearForm,
    pub gplus: Subspace,
    pub gminus: Subspace,
    split: SplitAlgebra,
}

impl ManinTriple {
    /// Requires `g₊ ⊕ g₋ = g`; every other property is left to
    /// [`ManinTriple::verify`].
    pub fn new(g: LieAlgebra, form: BilinearForm, gplus: Subspace, gminus: Subspace) -> Result<Self> {
        dim_check("form on g", g.dim(), form.dim())?;
        dim_check("g₊ ambient", g.dim(), gplus.ambient_dim())?;
        if !gplus.complementary(&gminus) {
            return Err(Error::NotComplementary);
        }
        let p = gplus.basis().hstack(gminus.basis())?;
        let split = SplitAlgebra::new(g.in_basis(&p)?, form.in_basis(&p)?, gplus.dim())?;
        Ok(ManinTriple { g, form, gplus, gminus, split })
    }

    /// Triple whose splitting is already the coordinate one.
    pub fn from_split(split: SplitAlgebra) -> Self {
        let n = split.dim();
        ManinTriple {
            g: split.algebra.clone(),
            form: split.form.clone(),
            gplus: Subspace::coordinate(n, 0, split.plus_dim),
            gminus: Subspace::coordinate(n, split.plus_dim, n),
            split,
        }
    }

    pub fn split(&self) -> &SplitAlgebra {
        &self.split
    }

    /// Invariance, Jacobi, both sides Lagrangian subalgebras, direct sum.
    pub fn verify(&self) -> Report {
        let mut r = self.g.check_jacobi();
        r.merge(self.g.check_ad_invariance(&self.form));
        r.expect("gplus_lagrangian", &[], self.form.is_lagrangian(&self.gplus));
        r.expect("gminus_lagrangian", &[], self.form.is_lagrangian(&self.gminus));
        r.expect("direct_sum", &[], self.gplus.complementary(&self.gminus));
        let mut closure = Report::new();
        self.split.closure_failures(true, &mut closure, "gplus_subalgebra");
        self.split.closure_failures(false, &mut closure, "gminus_subalgebra");
        r.merge(closure);
        r
    }

    /// `σ_{X₋}Y₊` for coordinates in the two subspace bases.
    pub fn dressing(&self, xm: &[Rational], yp: &[Rational]) -> Result<Vec<Rational>> {
        dim_check("dressing X₋", self.gminus.dim(), xm.len())?;
        dim_check("dressing Y₊", self.gplus.dim(), yp.len())?;
        Ok(self.split.dressing(xm, yp))
    }

    /// Ambient vector to coordinates in `g₊`, failing if it is not inside.
    pub fn plus_coords(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.gplus.coords(v).map_err(|_| Error::OutsideSubspace("g₊"))
    }

    /// Ambient vector to coordinates in `g₋`, failing if it is not inside.
    pub fn minus_coords(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.gminus.coords(v).map_err(|_| Error::OutsideSubspace("g₋"))
    }
}

/// `B` with extension `G`, both `g₊ → g₋` as `minus × plus` matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct OOperator {
    pub b: Matrix,
    pub g: Matrix,
    pub mass: Rational,
}

impl OOperator {
    /// Mass is fixed to −1.
    pub fn new(b: Matrix, g: Matrix) -> Result<Self> {
        dim_check("B vs G rows", g.rows(), b.rows())?;
        dim_check("B vs G columns", g.cols(), b.cols())?;
        Ok(OOperator { b, g, mass: int(-1) })
    }

    /// `B + G` (`sign > 0`) or `B − G`.
    pub fn graph_map(&self, plus: bool) -> Matrix {
        if plus {
            &self.b + &self.g
        } else {
            &self.b - &self.g
        }
    }

    /// Symmetry of `G`, skew-symmetry of `B` and invertibility of `G`,
    /// transposes taken through the pairing `(g₊, g₋)`.
    pub fn check_shape(&self, s: &SplitAlgebra) -> Report {
        let mut r = Report::new();
        r.expect("mass_is_minus_one", &[], self.mass == int(-1));
        let p = s.pairing();
        let Ok(pinv) = p.invert() else {
            r.fail("pairing_nondegenerate", &[], Vec::new(), Vec::new());
            return r;
        };
        r.run("pairing_nondegenerate");
        // mᵀ = P⁻¹ mᵀ_matrix Pᵀ for maps g₊ → g₋ (see LinearMap::transpose).
        let tr = |m: &Matrix| &(&pinv * &m.transpose()) * &p.transpose();
        crate::cps::expect_matrix_eq(&mut r, "metric_symmetric", &tr(&self.g), &self.g);
        crate::cps::expect_matrix_eq(&mut r, "twist_skew", &tr(&self.b), &-&self.b);
        r.expect("metric_invertible", &[], self.g.invert().is_ok());
        r
    }
}

/// `G(σ_{X₋}Y₊) = [X₋, GY₊]` and `σ_{GX₊}Y₊ + σ_{GY₊}X₊ = 0` on basis pairs.
pub fn check_invariant_extension(s: &SplitAlgebra, g: &Matrix) -> Report {
    let mut r = Report::new();
    let (p, m) = (s.plus_dim, s.minus_dim());
    r.run("invariant_extension");
    r.run("invariant_extension_antisymmetry");
    if g.rows() != m || g.cols() != p {
        r.fail("invariant_extension", &[g.rows(), g.cols()], Vec::new(), Vec::new());
        return r;
    }
    let km = s.minus_algebra();
    for i in 0..m {
        for j in 0..p {
            let lhs = g.mul_vec(&s.dressing(&unit(m, i), &unit(p, j)));
            let rhs = km.br(&unit(m, i), &g.column(j));
            r.expect_eq("invariant_extension", &[i, j], lhs, rhs);
        }
    }
    for a in 0..p {
        for b in a..p {
            let lhs = add_vec(&s.dressing(&g.column(a), &unit(p, b)), &s.dressing(&g.column(b), &unit(p, a)));
            r.expect_eq("invariant_extension_antisymmetry", &[a, b], lhs, zero_vec(p));
        }
    }
    r
}

/// `[X, Y]_B = σ_{BX}Y − σ_{BY}X` on plus coordinates.
fn twisted(s: &SplitAlgebra, b: &Matrix, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    sub_vec(&s.dressing(&b.mul_vec(x), y), &s.dressing(&b.mul_vec(y), x))
}

/// `[BX,BY] − B(σ_{BX}Y − σ_{BY}X) = −[GX,GY]` on basis pairs.
pub fn check_o_operator(s: &SplitAlgebra, o: &OOperator) -> Report {
    let mut r = Report::new();
    r.expect("mass_is_minus_one", &[], o.mass == int(-1));
    let name = "o_operator_mass_minus_one";
    r.run(name);
    let (p, m) = (s.plus_dim, s.minus_dim());
    if o.b.rows() != m || o.b.cols() != p {
        r.fail(name, &[o.b.rows(), o.b.cols()], Vec::new(), Vec::new());
        return r;
    }
    let km = s.minus_algebra();
    for a in 0..p {
        for c in (a + 1)..p {
            let (x, y) = (unit(p, a), unit(p, c));
            let lhs = sub_vec(&km.br(&o.b.column(a), &o.b.column(c)), &o.b.mul_vec(&twisted(s, &o.b, &x, &y)));
            let rhs = neg_vec(&km.br(&o.g.column(a), &o.g.column(c)));
            r.expect_eq(name, &[a, c], lhs, rhs);
        }
    }
    r
}

/// The bracket `[X, Y]_B` on `g₊`. Refuses unless `B` passes
/// [`check_o_operator`], except with `force`.
pub fn bracket_b(s: &SplitAlgebra, o: &OOperator, force: bool) -> Result<LieAlgebra> {
    if !force {
        let r = check_o_operator(s, o);
        if !r.passed() {
            return Err(Error::Precondition { what: "B is not an O-operator of mass -1 with extension G", report: r });
        }
    }
    let p = s.plus_dim;
    dim_check("B columns", p, o.b.cols())?;
    Ok(LieAlgebra::from_brackets("g+^B", p, |a, c| twisted(s, &o.b, &unit(p, a), &unit(p, c))))
}

/// `(B ± G)[X, Y]_B = [(B ± G)X, (B ± G)Y]` for both signs.
pub fn check_graph_homomorphism(s: &SplitAlgebra, o: &OOperator) -> Report {
    let mut r = Report::new();
    let p = s.plus_dim;
    let km = s.minus_algebra();
    let Ok(twist) = bracket_b(s, o, true) else {
        r.fail("graph_homomorphism_plus", &[], Vec::new(), Vec::new());
        return r;
    };
    for (name, plus) in [("graph_homomorphism_plus", true), ("graph_homomorphism_minus", false)] {
        r.run(name);
        let h = o.graph_map(plus);
        for a in 0..p {
            for c in (a + 1)..p {
                let lhs = h.mul_vec(&twist.basis_bracket(a, c));
                let rhs = km.br(&h.column(a), &h.column(c));
                r.expect_eq(name, &[a, c], lhs, rhs);
            }
        }
    }
    r
}

/// True when every dressing vanishes.
pub fn dressing_trivial(s: &SplitAlgebra) -> bool {
    let a = s.dressing_action();
    (0..s.minus_dim()).all(|i| (0..s.plus_dim).all(|j| a.basis(i, j).iter().all(Zero::is_zero)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::fixtures;
    use crate::matrix::rat;

    #[test]
    fn sl2_double_is_a_manin_triple() {
        let t = fixtures::sl2_double();
        assert!(t.verify().passed(), "{}", t.verify());
        assert!(t.split().check_dressing_representation().passed());
    }

    #[test]
    fn sl2_dressing_values() {
        let t = fixtures::sl2_double();
        // σ_H x₊ = −2x₊
        assert_eq!(t.dressing(&unit(3, 0), &unit(3, 1)).unwrap(), vec![int(0), int(-2), int(0)]);
        // σ_{X₊} h = Π₊[X₊, h] = −x₋
        assert_eq!(t.dressing(&unit(3, 1), &unit(3, 0)).unwrap(), vec![int(0), int(0), int(-1)]);
        assert!(t.dressing(&unit(2, 0), &unit(3, 0)).is_err());
    }

    #[test]
    fn sl2_metric_and_twist() {
        let t = fixtures::sl2_double();
        let (g, b) = fixtures::sl2_metric_twist();
        let o = OOperator::new(b.clone(), g.clone()).unwrap();
        assert!(o.check_shape(t.split()).passed());
        assert!(check_invariant_extension(t.split(), &g).passed());
        assert!(check_invariant_extension(t.split(), &Matrix::zeros(3, 3)).passed());
        assert!(check_o_operator(t.split(), &o).passed());
        assert!(check_graph_homomorphism(t.split(), &o).passed());
        let twist = bracket_b(t.split(), &o, false).unwrap();
        assert_eq!(twist.basis_bracket(0, 1), vec![int(0), rat(-1, 2), int(0)]);
        assert_eq!(twist.basis_bracket(0, 2), vec![int(0), int(0), rat(-1, 2)]);
        assert!(is_zero_vec(&twist.basis_bracket(1, 2)));
        assert!(twist.check_jacobi().passed());
    }

    #[test]
    fn rescaled_metric_breaks_invariance() {
        let t = fixtures::sl2_double();
        let (mut g, _) = fixtures::sl2_metric_twist();
        g[(0, 0)] = rat(1, 2);
        let r = check_invariant_extension(t.split(), &g);
        let c = r.check("invariant_extension").unwrap();
        assert!(!c.passed());
        // σ_{X₊} h = −x₋, G(−x₋) = −½X₊ while [X₊, Gh] = ½·[X₊, H] = −X₊.
        assert!(c.failures.iter().any(|f| f.witness == [1, 0]));
    }

    #[test]
    fn flipped_twist_fails_and_is_refused() {
        let t = fixtures::sl2_double();
        let (g, mut b) = fixtures::sl2_metric_twist();
        b[(2, 1)] = rat(-1, 2);
        let o = OOperator::new(b, g).unwrap();
        let r = check_o_operator(t.split(), &o);
        assert!(!r.passed());
        assert!(!r.check("o_operator_mass_minus_one").unwrap().failures.is_empty());
        assert!(matches!(bracket_b(t.split(), &o, false), Err(Error::Precondition { .. })));
        assert!(bracket_b(t.split(), &o, true).is_ok());
        assert!(!check_graph_homomorphism(t.split(), &o).passed());
    }

    #[test]
    fn zero_twist_gives_abelian_bracket() {
        let t = fixtures::sl2_double();
        let (g, _) = fixtures::sl2_metric_twist();
        let o = OOperator::new(Matrix::zeros(3, 3), g).unwrap();
        assert!(bracket_b(t.split(), &o, true).unwrap().is_abelian());
    }

    #[test]
    fn broken_crossed_bracket_is_detected() {
        let t = fixtures::sl2_double();
        let g = t.g.clone();
        // Flip the sign of [H, x₊].
        let broken = LieAlgebra::from_brackets("broken", 6, |i, j| {
            let v = g.basis_bracket(i, j);
            if (i, j) == (3, 1) || (i, j) == (1, 3) {
                neg_vec(&v)
            } else {
                v
            }
        });
        let t2 = ManinTriple::new(broken, t.form.clone(), t.gplus.clone(), t.gminus.clone()).unwrap();
        assert!(!t2.verify().passed());
    }

    #[test]
    fn abelian_triple_passes() {
        let g = LieAlgebra::abelian("a", 4);
        let form = BilinearForm::new(Matrix::from_i64(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]])).unwrap();
        let t = ManinTriple::new(g, form, Subspace::coordinate(4, 0, 2), Subspace::coordinate(4, 2, 4)).unwrap();
        assert!(t.verify().passed());
        assert!(dressing_trivial(t.split()));
        let o = OOperator::new(Matrix::zeros(2, 2), Matrix::identity(2)).unwrap();
        assert!(check_o_operator(t.split(), &o).passed());
        assert!(check_graph_homomorphism(t.split(), &o).passed());
    }
}
