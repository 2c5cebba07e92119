//! Lie algebras by structure constants, bilinear forms, subspaces with
//! explicit bases, and linear maps between them.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{dim_check, Error};
use crate::matrix::{is_zero_vec, unit, zero_vec, Matrix, Rational};
use crate::report::Report;
use crate::Result;

/// Finite-dimensional Lie algebra given by `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
///
/// Constants are kept sparsely per ordered pair. Nothing about the table is
/// validated on construction: [`LieAlgebra::check_antisymmetry`] and
/// [`LieAlgebra::check_jacobi`] report on it.
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    table: Vec<Vec<(usize, Rational)>>,
}

impl LieAlgebra {
    /// Builds from a dense closure `c(i, j, k)`.
    pub fn from_fn(name: &str, dim: usize, mut c: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let entries = (0..dim)
                    .filter_map(|k| {
                        let v = c(i, j, k);
                        (!v.is_zero()).then_some((k, v))
                    })
                    .collect();
                table.push(entries);
            }
        }
        LieAlgebra { name: name.into(), dim, table }
    }

    /// Builds from per-pair bracket vectors `[e_i, e_j] = v(i, j)`.
    pub fn from_brackets(name: &str, dim: usize, mut v: impl FnMut(usize, usize) -> Vec<Rational>) -> Self {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let w = v(i, j);
                assert_eq!(w.len(), dim, "bracket vector has the wrong length");
                table.push(sparse(w));
            }
        }
        LieAlgebra { name: name.into(), dim, table }
    }

    /// Builds from a list of brackets `[e_i, e_j] = v` with `i != j`; the
    /// pair `(j, i)` is filled with `−v` and unlisted pairs are zero.
    pub fn from_pairs(name: &str, dim: usize, pairs: &[(usize, usize, Vec<Rational>)]) -> Result<Self> {
        let mut table = vec![Vec::new(); dim * dim];
        for (i, j, v) in pairs {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(Error::Invalid(alloc::format!("bracket index ({i}, {j}) out of range")));
            }
            dim_check("bracket value", dim, v.len())?;
            if i == j {
                if !is_zero_vec(v) {
                    return Err(Error::Invalid(alloc::format!("[e_{i}, e_{i}] must vanish")));
                }
                continue;
            }
            table[i * dim + j] = sparse(v.clone());
            table[j * dim + i] = sparse(v.iter().map(|x| -x).collect());
        }
        Ok(LieAlgebra { name: name.into(), dim, table })
    }

    pub fn abelian(name: &str, dim: usize) -> Self {
        LieAlgebra { name: name.into(), dim, table: vec![Vec::new(); dim * dim] }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.table[i * self.dim + j]
            .iter()
            .find(|(kk, _)| *kk == k)
            .map_or_else(Rational::zero, |(_, v)| v.clone())
    }

    /// `[e_i, e_j]` as a dense vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (k, v) in &self.table[i * self.dim + j] {
            out[*k] = v.clone();
        }
        out
    }

    /// Nonzero `(k, c[i][j][k])` entries of `[e_i, e_j]`.
    pub fn sparse_bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim + j]
    }

    /// Bilinear bracket of coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        dim_check("bracket left operand", self.dim, x.len())?;
        dim_check("bracket right operand", self.dim, y.len())?;
        Ok(self.br(x, y))
    }

    /// Like [`LieAlgebra::bracket`] but panics on a dimension mismatch.
    pub fn br(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert!(x.len() == self.dim && y.len() == self.dim, "bracket dimension mismatch");
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let entries = &self.table[i * self.dim + j];
                if entries.is_empty() {
                    continue;
                }
                let s = xi * yj;
                for (k, v) in entries {
                    out[*k] += &s * v;
                }
            }
        }
        out
    }

    /// Matrix of `ad_x`, column `j` being `[x, e_j]`.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, v) in &self.table[i * self.dim + j] {
                    m[(*k, j)] += xi * v;
                }
            }
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// The same space with the negated bracket.
    pub fn opposite(&self) -> LieAlgebra {
        LieAlgebra {
            name: alloc::format!("{}^op", self.name),
            dim: self.dim,
            table: self
                .table
                .iter()
                .map(|e| e.iter().map(|(k, v)| (*k, -v)).collect())
                .collect(),
        }
    }

    /// The bracket scaled by `s` (with `s = 0` giving the abelian algebra).
    pub fn scaled(&self, s: &Rational) -> LieAlgebra {
        LieAlgebra::from_brackets(&self.name, self.dim, |i, j| {
            self.basis_bracket(i, j).iter().map(|v| s * v).collect()
        })
    }

    /// Structure constants in the basis given by the columns of `p`
    /// (new `e'_i = Σ_k p[k][i] e_k`).
    pub fn in_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        dim_check("change of basis", self.dim, p.rows())?;
        let pinv = p.invert()?;
        let cols = p.columns();
        Ok(LieAlgebra::from_brackets(&self.name, self.dim, |i, j| {
            pinv.mul_vec(&self.br(&cols[i], &cols[j]))
        }))
    }

    /// Block direct sum `a ⊕ b` with `a` first.
    pub fn direct_sum(name: &str, a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
        let (n, m) = (a.dim, b.dim);
        LieAlgebra::from_fn(name, n + m, |i, j, k| {
            if i < n && j < n && k < n {
                a.constant(i, j, k)
            } else if i >= n && j >= n && k >= n {
                b.constant(i - n, j - n, k - n)
            } else {
                Rational::zero()
            }
        })
    }

    /// The subalgebra spanned by `s`, in the coordinates of its basis.
    /// Fails with [`Error::OutsideSubspace`] when `s` is not closed.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra> {
        dim_check("restriction ambient", self.dim, s.ambient_dim())?;
        let cols = s.basis().columns();
        let d = s.dim();
        let mut pairs = Vec::new();
        for i in 0..d {
            for j in (i + 1)..d {
                let v = s.coords(&self.br(&cols[i], &cols[j]))?;
                pairs.push((i, j, v));
            }
        }
        LieAlgebra::from_pairs(&self.name, d, &pairs)
    }

    /// `c[i][j][k] = −c[j][i][k]` for all entries; witness `(i, j)`.
    pub fn check_antisymmetry(&self) -> Report {
        let mut r = Report::new();
        r.run("antisymmetry");
        for i in 0..self.dim {
            for j in i..self.dim {
                let a = self.basis_bracket(i, j);
                let b: Vec<Rational> = self.basis_bracket(j, i).iter().map(|x| -x).collect();
                r.expect_eq("antisymmetry", &[i, j], a, b);
            }
        }
        r
    }

    /// Antisymmetry plus Jacobi on basis triples. Jacobi failures carry
    /// the witness `(i, j, l, k)` with `k` the first nonzero component.
    ///
    /// Given antisymmetry the Jacobiator is alternating, so only `i < j < l`
    /// is evaluated.
    pub fn check_jacobi(&self) -> Report {
        let mut r = self.check_antisymmetry();
        r.run("jacobi");
        let n = self.dim;
        for i in 0..n {
            for j in (i + 1)..n {
                for l in (j + 1)..n {
                    let v = self.jacobiator(i, j, l);
                    if let Some(k) = v.iter().position(|x| !x.is_zero()) {
                        r.fail("jacobi", &[i, j, l, k], v, zero_vec(n));
                    }
                }
            }
        }
        r
    }

    /// `[[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j]`.
    pub fn jacobiator(&self, i: usize, j: usize, l: usize) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (a, b, c) in [(i, j, l), (j, l, i), (l, i, j)] {
            for (m, v) in &self.table[a * self.dim + b] {
                for (k, w) in &self.table[m * self.dim + c] {
                    out[*k] += v * w;
                }
            }
        }
        out
    }

    /// `([x,y],z) + (y,[x,z]) = 0` on all basis triples; witness `(x, y, z)`.
    pub fn check_ad_invariance(&self, form: &BilinearForm) -> Report {
        let mut r = Report::new();
        r.run("ad_invariance");
        if form.dim() != self.dim {
            r.fail("ad_invariance", &[form.dim(), self.dim], vec![], vec![]);
            return r;
        }
        let g = form.gram();
        for x in 0..self.dim {
            let a = self.ad(&unit(self.dim, x));
            let m = &(&a.transpose() * g) + &(g * &a);
            for y in 0..self.dim {
                for z in 0..self.dim {
                    if !m[(y, z)].is_zero() {
                        r.fail("ad_invariance", &[x, y, z], vec![m[(y, z)].clone()], vec![Rational::zero()]);
                    }
                }
            }
        }
        r
    }
}

fn sparse(v: Vec<Rational>) -> Vec<(usize, Rational)> {
    v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

/// Symmetric bilinear form given by its Gram matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    /// Validates that the Gram matrix is square, symmetric and invertible.
    pub fn new(gram: Matrix) -> Result<Self> {
        let f = Self::new_degenerate(gram)?;
        f.gram.invert().map_err(|_| Error::Singular("bilinear form"))?;
        Ok(f)
    }

    /// Validates symmetry only.
    pub fn new_degenerate(gram: Matrix) -> Result<Self> {
        dim_check("gram matrix (square)", gram.rows(), gram.cols())?;
        if gram.transpose() != gram {
            return Err(Error::Invalid("gram matrix is not symmetric".into()));
        }
        Ok(BilinearForm { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let gy = self.gram.mul_vec(y);
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }

    /// Matrix of `(a_i, b_j)` over the two bases.
    pub fn pairing(&self, a: &Subspace, b: &Subspace) -> Matrix {
        &(&a.basis().transpose() * &self.gram) * b.basis()
    }

    /// The form restricted to `s`, in the coordinates of its basis.
    pub fn restrict(&self, s: &Subspace) -> Matrix {
        self.pairing(s, s)
    }

    /// Gram matrix in the basis given by the columns of `p`.
    pub fn in_basis(&self, p: &Matrix) -> Result<BilinearForm> {
        dim_check("form change of basis", self.dim(), p.rows())?;
        BilinearForm::new_degenerate(&(&p.transpose() * &self.gram) * p)
    }

    pub fn direct_sum(a: &BilinearForm, b: &BilinearForm) -> BilinearForm {
        let (n, m) = (a.dim(), b.dim());
        BilinearForm {
            gram: Matrix::block(&a.gram, &Matrix::zeros(n, m), &Matrix::zeros(m, n), &b.gram)
                .expect("block shapes agree"),
        }
    }

    pub fn is_isotropic(&self, s: &Subspace) -> bool {
        self.restrict(s).is_zero()
    }

    pub fn is_lagrangian(&self, s: &Subspace) -> bool {
        2 * s.dim() == self.dim() && self.is_isotropic(s)
    }

    /// `{v : (v, s) = 0}`.
    pub fn orthogonal_complement(&self, s: &Subspace) -> Subspace {
        let m = &s.basis().transpose() * &self.gram;
        Subspace::from_basis_unchecked(m.kernel())
    }
}

/// Subspace of `ℚ^n` with an explicit basis (the columns of `basis`).
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    basis: Matrix,
}

impl Subspace {
    /// Validates that the columns are linearly independent.
    pub fn new(basis: Matrix) -> Result<Self> {
        let rank = basis.rank();
        if rank != basis.cols() {
            return Err(Error::RankDeficient { expected: basis.cols(), found: rank });
        }
        Ok(Subspace { basis })
    }

    pub fn from_columns(n: usize, cols: &[Vec<Rational>]) -> Result<Self> {
        Self::new(Matrix::from_columns(n, cols)?)
    }

    pub(crate) fn from_basis_unchecked(basis: Matrix) -> Self {
        Subspace { basis }
    }

    pub fn full(n: usize) -> Self {
        Subspace { basis: Matrix::identity(n) }
    }

    /// Coordinate subspace spanned by `e_start .. e_end`.
    pub fn coordinate(n: usize, start: usize, end: usize) -> Self {
        Subspace { basis: Matrix::from_fn(n, end - start, |r, c| if r == start + c { Rational::one() } else { Rational::zero() }) }
    }

    /// `{x + m·x}` in `ℚ^{d + e}` for `m` of shape `e × d`, parameterized by
    /// the first `d` coordinates.
    pub fn graph(m: &Matrix) -> Self {
        let d = m.cols();
        Subspace { basis: Matrix::identity(d).vstack(m).expect("graph shapes agree") }
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn vector(&self, i: usize) -> Vec<Rational> {
        self.basis.column(i)
    }

    /// `Σ c_i b_i`.
    pub fn embed(&self, c: &[Rational]) -> Vec<Rational> {
        self.basis.mul_vec(c)
    }

    /// Coordinates of `v` in this basis.
    pub fn coords(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        dim_check("vector in subspace", self.ambient_dim(), v.len())?;
        self.basis.solve_vec(v).map_err(|_| Error::OutsideSubspace("subspace"))
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coords(v).is_ok()
    }

    pub fn same_span(&self, other: &Subspace) -> bool {
        self.basis.same_column_space(&other.basis)
    }

    /// True when `self ⊕ other` is the whole ambient space.
    pub fn complementary(&self, other: &Subspace) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.dim() + other.dim() == self.ambient_dim()
            && self.basis.hstack(&other.basis).is_ok_and(|m| m.rank() == self.ambient_dim())
    }
}

/// Projector onto `onto` along `along`, as an ambient `n × n` map.
pub fn projector(onto: &Subspace, along: &Subspace) -> Result<LinearMap> {
    if !onto.complementary(along) {
        return Err(Error::NotComplementary);
    }
    let n = onto.ambient_dim();
    let p = onto.basis().hstack(along.basis())?;
    let mut d = Matrix::zeros(n, n);
    for i in 0..onto.dim() {
        d[(i, i)] = Rational::one();
    }
    let m = &(&p * &d) * &p.invert()?;
    LinearMap::new(Subspace::full(n), Subspace::full(n), m)
}

/// Linear map between two based subspaces, `matrix` being
/// `target.dim × source.dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMap {
    source: Subspace,
    target: Subspace,
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(source: Subspace, target: Subspace, matrix: Matrix) -> Result<Self> {
        dim_check("map rows (target dim)", target.dim(), matrix.rows())?;
        dim_check("map columns (source dim)", source.dim(), matrix.cols())?;
        Ok(LinearMap { source, target, matrix })
    }

    pub fn source(&self) -> &Subspace {
        &self.source
    }

    pub fn target(&self) -> &Subspace {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Applies the map to source coordinates, giving target coordinates.
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(x)
    }

    pub fn with_matrix(&self, matrix: Matrix) -> Result<Self> {
        LinearMap::new(self.source.clone(), self.target.clone(), matrix)
    }

    /// Adjoint with respect to `form`: `(m s, y') = (s, mᵀ y')` for `s` in the
    /// source and `y'` in `target_partner`, giving `mᵀ: target_partner →
    /// source_partner`. Each partner must pair nondegenerately with the
    /// corresponding space.
    pub fn transpose(&self, form: &BilinearForm, source_partner: &Subspace, target_partner: &Subspace) -> Result<LinearMap> {
        let ps = form.pairing(&self.source, source_partner);
        let pt = form.pairing(&self.target, target_partner);
        let ps_inv = ps.invert().map_err(|_| Error::Singular("restricted pairing on the source"))?;
        if !pt.is_square() || pt.invert().is_err() {
            return Err(Error::Singular("restricted pairing on the target"));
        }
        let m = &(&ps_inv * &self.matrix.transpose()) * &pt;
        LinearMap::new(target_partner.clone(), source_partner.clone(), m)
    }

    /// Adjoint when source and target carry nondegenerate restricted forms,
    /// e.g. `φ: E⁺ → E⁻` gives `φᵀ: E⁻ → E⁺`.
    pub fn transpose_within(&self, form: &BilinearForm) -> Result<LinearMap> {
        self.transpose(form, &self.source.clone(), &self.target.clone())
    }

    /// Adjoint for a map between a Lagrangian pair, e.g. `G: F₊ → F₋`
    /// gives `Gᵀ: F₊ → F₋`.
    pub fn transpose_across(&self, form: &BilinearForm) -> Result<LinearMap> {
        self.transpose(form, &self.target.clone(), &self.source.clone())
    }

    /// `(m + mᵀ)/2` and `(m − mᵀ)/2`, with the transpose taken across the
    /// Lagrangian pair.
    pub fn sym_skew_split(&self, form: &BilinearForm) -> Result<(LinearMap, LinearMap)> {
        let t = self.transpose_across(form)?;
        let half = crate::matrix::rat(1, 2);
        let g = (&self.matrix + &t.matrix).scale(&half);
        let b = (&self.matrix - &t.matrix).scale(&half);
        Ok((self.with_matrix(g)?, self.with_matrix(b)?))
    }
}
