//! Complex product structures `{E, J, F}` on a quadratic vector space.
//!
//! Operators are stored in ambient coordinates. Constructors take a pair of
//! subspaces and build the block form against the adapted basis made of
//! their concatenated bases, then conjugate back.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{dim_check, Error};
use crate::lie::{BilinearForm, LieAlgebra, LinearMap, Subspace};
use crate::matrix::{int, sub_vec, unit, Matrix, Rational};
use crate::report::Report;
use crate::Result;

/// Operators with `E² = I`, `J² = −I`, `EJ + JE = 0`, `F = JE`, `E`, `J`
/// symmetric and `F` skew for the ambient form.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexProductStructure {
    pub e: Matrix,
    pub j: Matrix,
    pub f: Matrix,
    pub form: BilinearForm,
}

/// A Lagrangian pair `F₊ ⊕ F₋` together with an orthogonal pair `E⁺ ⊕ E⁻`.
#[derive(Debug, Clone, PartialEq)]
pub struct DoubleSplitting {
    pub fplus: Subspace,
    pub fminus: Subspace,
    pub eplus: Subspace,
    pub eminus: Subspace,
    pub form: BilinearForm,
}

impl DoubleSplitting {
    pub fn verify(&self) -> Report {
        let mut r = Report::new();
        let f = &self.form;
        let n = f.dim();
        r.expect("fplus_lagrangian", &[], f.is_lagrangian(&self.fplus));
        r.expect("fminus_lagrangian", &[], f.is_lagrangian(&self.fminus));
        r.expect("lagrangian_pair_complementary", &[], self.fplus.complementary(&self.fminus));
        r.expect("orthogonal_pair_half_dimensional", &[self.eplus.dim(), self.eminus.dim()], 2 * self.eplus.dim() == n && 2 * self.eminus.dim() == n);
        expect_matrix_eq(&mut r, "orthogonal_pair_orthogonal", &f.pairing(&self.eplus, &self.eminus), &Matrix::zeros(self.eplus.dim(), self.eminus.dim()));
        r.expect("orthogonal_pair_complementary", &[], self.eplus.complementary(&self.eminus));
        r
    }
}

/// Records one failure per differing entry, witness `(row, col)`.
pub(crate) fn expect_matrix_eq(r: &mut Report, name: &str, lhs: &Matrix, rhs: &Matrix) {
    r.run(name);
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        r.fail(name, &[lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols()], Vec::new(), Vec::new());
        return;
    }
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            if lhs[(i, j)] != rhs[(i, j)] {
                r.fail(name, &[i, j], alloc::vec![lhs[(i, j)].clone()], alloc::vec![rhs[(i, j)].clone()]);
            }
        }
    }
}

fn conjugate(p: &Matrix, block: &Matrix) -> Result<Matrix> {
    Ok(&(p * block) * &p.invert()?)
}

/// Checks that `(s, t)` is an orthogonal complementary pair.
fn require_orthogonal_pair(form: &BilinearForm, s: &Subspace, t: &Subspace) -> Result<()> {
    if !s.complementary(t) {
        return Err(Error::NotComplementary);
    }
    if !form.pairing(s, t).is_zero() {
        return Err(Error::Invalid("subspaces are not orthogonal".into()));
    }
    Ok(())
}

/// Checks that `(fp, fm)` is a complementary Lagrangian pair.
fn require_lagrangian_pair(form: &BilinearForm, fp: &Subspace, fm: &Subspace) -> Result<()> {
    dim_check("form on the Lagrangian pair", form.dim(), fp.ambient_dim())?;
    if !fp.complementary(fm) {
        return Err(Error::NotComplementary);
    }
    if !form.is_lagrangian(fp) || !form.is_lagrangian(fm) {
        return Err(Error::Invalid("F₊ and F₋ must be Lagrangian".into()));
    }
    Ok(())
}

/// From an orthogonal pair `E⁺ ⊕ E⁻` and `φ: E⁺ → E⁻` with `φᵀ = −φ⁻¹`:
/// `E = diag(I, −I)`, `F = [[0, φ⁻¹], [φ, 0]]`, `J = FE`. Also returns
/// `F± = graph(±φ)`.
pub fn cps_from_anti_isometry(
    form: &BilinearForm,
    eplus: &Subspace,
    eminus: &Subspace,
    phi: &Matrix,
) -> Result<(ComplexProductStructure, DoubleSplitting)> {
    dim_check("form on E±", form.dim(), eplus.ambient_dim())?;
    require_orthogonal_pair(form, eplus, eminus)?;
    let map = LinearMap::new(eplus.clone(), eminus.clone(), phi.clone())?;
    let phi_inv = phi.invert().map_err(|_| Error::Singular("φ"))?;
    let t = map.transpose_within(form)?;
    if *t.matrix() != -&phi_inv {
        return Err(Error::Invalid("φ does not satisfy φᵀ = −φ⁻¹".into()));
    }
    let d = eplus.dim();
    let p = eplus.basis().hstack(eminus.basis())?;
    let e = Matrix::block(&Matrix::identity(d), &Matrix::zeros(d, d), &Matrix::zeros(d, d), &-&Matrix::identity(d))?;
    let f = Matrix::block(&Matrix::zeros(d, d), &phi_inv, phi, &Matrix::zeros(d, d))?;
    let j = &f * &e;
    let cps = ComplexProductStructure {
        e: conjugate(&p, &e)?,
        j: conjugate(&p, &j)?,
        f: conjugate(&p, &f)?,
        form: form.clone(),
    };
    let fplus = Subspace::new(&p * Subspace::graph(phi).basis())?;
    let fminus = Subspace::new(&p * Subspace::graph(&-phi).basis())?;
    let split = DoubleSplitting { fplus, fminus, eplus: eplus.clone(), eminus: eminus.clone(), form: form.clone() };
    Ok((cps, split))
}

/// Validates the gauge data `G` (symmetric, invertible) and `B` (skew),
/// both `F₊ → F₋` in the bases of the pair.
fn require_gauge_data(form: &BilinearForm, fp: &Subspace, fm: &Subspace, g: &Matrix, b: &Matrix) -> Result<()> {
    require_lagrangian_pair(form, fp, fm)?;
    let gm = LinearMap::new(fp.clone(), fm.clone(), g.clone())?;
    let bm = LinearMap::new(fp.clone(), fm.clone(), b.clone())?;
    if gm.transpose_across(form)?.matrix() != g {
        return Err(Error::Invalid("G is not symmetric".into()));
    }
    g.invert().map_err(|_| Error::Singular("G"))?;
    if *bm.transpose_across(form)?.matrix() != -b {
        return Err(Error::Invalid("B is not skew-symmetric".into()));
    }
    Ok(())
}

/// `E_B± = graph(B ± G) = {X₊ + (B ± G)X₊}` in ambient coordinates.
pub fn gauge_splitting(form: &BilinearForm, fp: &Subspace, fm: &Subspace, g: &Matrix, b: &Matrix) -> Result<(Subspace, Subspace)> {
    require_gauge_data(form, fp, fm, g, b)?;
    let p = fp.basis().hstack(fm.basis())?;
    let plus = Subspace::new(&p * Subspace::graph(&(b + g)).basis())?;
    let minus = Subspace::new(&p * Subspace::graph(&(b - g)).basis())?;
    Ok((plus, minus))
}

/// Blocks in the `F₊ ⊕ F₋` basis:
/// `E_B = [[−G⁻¹B, G⁻¹], [G − BG⁻¹B, BG⁻¹]]`,
/// `J_B = [[−G⁻¹B, G⁻¹], [−G − BG⁻¹B, BG⁻¹]]`, `F_B = [[I, 0], [2B, −I]]`.
pub fn gauged_blocks(g: &Matrix, b: &Matrix) -> Result<(Matrix, Matrix, Matrix)> {
    let gi = g.invert().map_err(|_| Error::Singular("G"))?;
    let gib = &gi * b;
    let bgi = b * &gi;
    let bgib = b * &gib;
    let d = g.rows();
    let e = Matrix::block(&-&gib, &gi, &(g - &bgib), &bgi)?;
    let j = Matrix::block(&-&gib, &gi, &(&-g - &bgib), &bgi)?;
    let f = Matrix::block(&Matrix::identity(d), &Matrix::zeros(d, d), &b.scale(&int(2)), &-&Matrix::identity(d))?;
    Ok((e, j, f))
}

/// The gauged structure `{E_B, J_B, F_B}` in ambient coordinates.
pub fn cps_gauged(form: &BilinearForm, fp: &Subspace, fm: &Subspace, g: &Matrix, b: &Matrix) -> Result<ComplexProductStructure> {
    require_gauge_data(form, fp, fm, g, b)?;
    let (e, j, f) = gauged_blocks(g, b)?;
    let p = fp.basis().hstack(fm.basis())?;
    Ok(ComplexProductStructure { e: conjugate(&p, &e)?, j: conjugate(&p, &j)?, f: conjugate(&p, &f)?, form: form.clone() })
}

/// `cps_gauged` with `B = 0`; also returns the double splitting with
/// `E± = graph(±G)`.
pub fn cps_from_metric(form: &BilinearForm, fp: &Subspace, fm: &Subspace, g: &Matrix) -> Result<(ComplexProductStructure, DoubleSplitting)> {
    let zero = Matrix::zeros(g.rows(), g.cols());
    let cps = cps_gauged(form, fp, fm, g, &zero)?;
    let (eplus, eminus) = gauge_splitting(form, fp, fm, g, &zero)?;
    let split = DoubleSplitting { fplus: fp.clone(), fminus: fm.clone(), eplus, eminus, form: form.clone() };
    Ok((cps, split))
}

impl ComplexProductStructure {
    pub fn dim(&self) -> usize {
        self.e.rows()
    }

    /// The seven defining identities, each exact.
    pub fn verify(&self) -> Report {
        let n = self.dim();
        let id = Matrix::identity(n);
        let g = self.form.gram();
        let mut r = Report::new();
        expect_matrix_eq(&mut r, "e_squared_identity", &(&self.e * &self.e), &id);
        expect_matrix_eq(&mut r, "j_squared_minus_identity", &(&self.j * &self.j), &-&id);
        expect_matrix_eq(&mut r, "ej_anticommute", &(&(&self.e * &self.j) + &(&self.j * &self.e)), &Matrix::zeros(n, n));
        expect_matrix_eq(&mut r, "f_equals_je", &self.f, &(&self.j * &self.e));
        expect_matrix_eq(&mut r, "f_squared_identity", &(&self.f * &self.f), &id);
        // (Xx, y) = (x, Xy) for all x, y  ⇔  Xᵀ·gram = gram·X.
        expect_matrix_eq(&mut r, "e_symmetric", &(&self.e.transpose() * g), &(g * &self.e));
        expect_matrix_eq(&mut r, "j_symmetric", &(&self.j.transpose() * g), &(g * &self.j));
        expect_matrix_eq(&mut r, "f_skew", &(&self.f.transpose() * g), &-&(g * &self.f));
        r
    }

    /// Operators in the basis given by the columns of `p`.
    pub fn in_basis(&self, p: &Matrix) -> Result<ComplexProductStructure> {
        let pi = p.invert()?;
        Ok(ComplexProductStructure {
            e: &(&pi * &self.e) * p,
            j: &(&pi * &self.j) * p,
            f: &(&pi * &self.f) * p,
            form: self.form.in_basis(p)?,
        })
    }

    /// The form `(X, EY)` used for the para-Hermitian view.
    pub fn e_form(&self) -> Matrix {
        self.form.gram() * &self.e
    }
}

/// `ker(op − λI)` for an involution `op` and `λ = ±1`.
pub fn eigenspace(op: &Matrix, eigenvalue: &Rational) -> Result<Subspace> {
    if !op.is_square() {
        return Err(Error::Dimension { context: "eigenspace (square)", expected: op.rows(), found: op.cols() });
    }
    let one = Rational::one();
    if *eigenvalue != one && *eigenvalue != -&one {
        return Err(Error::Invalid("only the eigenvalues ±1 of involutions are supported".into()));
    }
    let n = op.rows();
    if op * op != Matrix::identity(n) {
        return Err(Error::NotInvolutive);
    }
    Subspace::new((op - &Matrix::identity(n).scale(eigenvalue)).kernel())
}

/// `G̃ = (G − BG⁻¹B)⁻¹` and `B̃ = −G⁻¹B(G − BG⁻¹B)⁻¹`, both `F₋ → F₊`.
///
/// Fails with [`Error::Singular`] when `G − BG⁻¹B` has no inverse, which
/// happens exactly when `B + G` or `B − G` is singular.
pub fn dual_gauge_data(g: &Matrix, b: &Matrix) -> Result<(Matrix, Matrix)> {
    let gi = g.invert().map_err(|_| Error::Singular("G"))?;
    let s = g - &(&(b * &gi) * b);
    let gt = s.invert().map_err(|_| Error::Singular("G − BG⁻¹B"))?;
    let bt = -&(&(&gi * b) * &gt);
    Ok((gt, bt))
}

/// `(B ± G)(B̃ ± G̃) = I` and `(B̃ ± G̃)(B ± G) = I` for both signs.
pub fn check_dual_gauge(g: &Matrix, b: &Matrix, gt: &Matrix, bt: &Matrix) -> Report {
    let mut r = Report::new();
    let d = g.rows();
    let id = Matrix::identity(d);
    for (name, h, ht) in [("dual_gauge_inverse_plus", b + g, bt + gt), ("dual_gauge_inverse_minus", b - g, bt - gt)] {
        expect_matrix_eq(&mut r, name, &(&h * &ht), &id);
        expect_matrix_eq(&mut r, name, &(&ht * &h), &id);
    }
    r
}

/// Which integrability condition to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    /// `op² = I`, defect `[Ex,Ey] − E([Ex,y] + [x,Ey]) + [x,y]`.
    Product,
    /// `op² = −I`, defect `[Jx,Jy] − J([Jx,y] + [x,Jy]) − [x,y]`.
    Complex,
}

/// Table of defects `N(e_i, e_j)`, row-major over pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct NijenhuisTable {
    pub dim: usize,
    pub entries: Vec<Vec<Rational>>,
}

impl NijenhuisTable {
    pub fn at(&self, i: usize, j: usize) -> &[Rational] {
        &self.entries[i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|v| v.iter().all(Zero::is_zero))
    }

    pub fn nonzero_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.dim;
        (0..n * n)
            .filter(|&p| self.entries[p].iter().any(|x| !x.is_zero()))
            .map(|p| (p / n, p % n))
            .collect()
    }
}

pub fn nijenhuis_defect(a: &LieAlgebra, op: &Matrix, kind: StructureKind) -> Result<NijenhuisTable> {
    let n = a.dim();
    dim_check("operator size", n, op.rows())?;
    dim_check("operator size", n, op.cols())?;
    let sq = op * op;
    let expected = match kind {
        StructureKind::Product => Matrix::identity(n),
        StructureKind::Complex => -&Matrix::identity(n),
    };
    if sq != expected {
        return Err(Error::NotInvolutive);
    }
    let images: Vec<Vec<Rational>> = op.columns();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (unit(n, i), unit(n, j));
            let mut inner = a.br(&images[i], &y);
            for (t, s) in inner.iter_mut().zip(a.br(&x, &images[j])) {
                *t += s;
            }
            let mut v = sub_vec(&a.br(&images[i], &images[j]), &op.mul_vec(&inner));
            let xy = a.basis_bracket(i, j);
            for (t, s) in v.iter_mut().zip(xy) {
                match kind {
                    StructureKind::Product => *t += s,
                    StructureKind::Complex => *t -= s,
                }
            }
            entries.push(v);
        }
    }
    Ok(NijenhuisTable { dim: n, entries })
}
