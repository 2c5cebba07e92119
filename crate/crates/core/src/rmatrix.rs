//! r-matrices `r = Σ C_ij e_i⊗e_j`, the classical Yang-Baxter equation,
//! factorizability, the induced dual bracket and classical doubles.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::cps::expect_matrix_eq;
use crate::error::{dim_check, Error};
use crate::lie::{BilinearForm, LieAlgebra, Subspace};
use crate::manin::{ManinTriple, OOperator, SplitAlgebra};
use crate::matrix::{rat, unit, Matrix, Rational};
use crate::report::Report;
use crate::Result;

/// An element of `k ⊗ k` by its coefficient matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct RMatrix {
    pub algebra: LieAlgebra,
    pub coeffs: Matrix,
}

impl RMatrix {
    pub fn new(algebra: LieAlgebra, coeffs: Matrix) -> Result<Self> {
        dim_check("r-matrix rows", algebra.dim(), coeffs.rows())?;
        dim_check("r-matrix columns", algebra.dim(), coeffs.cols())?;
        Ok(RMatrix { algebra, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `r̂: k* → k`, `ξ ↦ (ξ ⊗ id) r`, in dual coordinates.
    pub fn rhat(&self) -> Matrix {
        self.coeffs.transpose()
    }

    /// `(r⁺, r⁻)`, the symmetric and skew parts.
    pub fn split(&self) -> (RMatrix, RMatrix) {
        let half = rat(1, 2);
        let t = self.coeffs.transpose();
        let sym = (&self.coeffs + &t).scale(&half);
        let skew = (&self.coeffs - &t).scale(&half);
        (
            RMatrix { algebra: self.algebra.clone(), coeffs: sym },
            RMatrix { algebra: self.algebra.clone(), coeffs: skew },
        )
    }

    pub fn scaled(&self, s: &Rational) -> RMatrix {
        RMatrix { algebra: self.algebra.clone(), coeffs: self.coeffs.scale(s) }
    }

    /// The CYBE tensor `[r₁₂,r₁₃] + [r₁₂,r₂₃] + [r₁₃,r₂₃]` as `n³` entries
    /// indexed `(i·n + j)·n + k`.
    pub fn cybe_tensor(&self) -> Vec<Rational> {
        let n = self.dim();
        let c = &self.coeffs;
        let a = &self.algebra;
        let mut t = vec![Rational::zero(); n * n * n];
        let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
        for p in 0..n {
            for q in 0..n {
                let br = a.sparse_bracket(p, q);
                if br.is_empty() {
                    continue;
                }
                // [r12, r13]: C_pb C_qd [e_p,e_q] ⊗ e_b ⊗ e_d
                // [r12, r23]: C_ap C_qd e_a ⊗ [e_p,e_q] ⊗ e_d
                // [r13, r23]: C_ap C_bq e_a ⊗ e_b ⊗ [e_p,e_q]
                for (k, s) in br {
                    for u in 0..n {
                        for w in 0..n {
                            let t1 = &c[(p, u)] * &c[(q, w)];
                            if !t1.is_zero() {
                                t[idx(*k, u, w)] += &t1 * s;
                            }
                            let t2 = &c[(u, p)] * &c[(q, w)];
                            if !t2.is_zero() {
                                t[idx(u, *k, w)] += &t2 * s;
                            }
                            let t3 = &c[(u, p)] * &c[(w, q)];
                            if !t3.is_zero() {
                                t[idx(u, w, *k)] += &t3 * s;
                            }
                        }
                    }
                }
            }
        }
        t
    }

    /// The classical Yang-Baxter equation, one failure per nonzero entry.
    pub fn check_cybe(&self) -> Report {
        let n = self.dim();
        let mut r = Report::new();
        r.run("cybe");
        for (pos, v) in self.cybe_tensor().into_iter().enumerate() {
            if !v.is_zero() {
                r.fail("cybe", &[pos / (n * n), (pos / n) % n, pos % n], vec![v], vec![Rational::zero()]);
            }
        }
        r
    }

    /// `r⁺` nondegenerate and ad-invariant: `ad_X C⁺ + C⁺ ad_Xᵀ = 0`.
    pub fn check_factorizable(&self) -> Report {
        let (sym, _) = self.split();
        let n = self.dim();
        let mut r = Report::new();
        r.expect("symmetric_part_nondegenerate", &[], sym.coeffs.invert().is_ok());
        let name = "symmetric_part_invariant";
        r.run(name);
        for i in 0..n {
            let ad = self.algebra.ad(&unit(n, i));
            let m = &(&ad * &sym.coeffs) + &(&sym.coeffs * &ad.transpose());
            for a in 0..n {
                if !m.row(a).iter().all(Zero::is_zero) {
                    r.fail(name, &[i, a], m.row(a).to_vec(), vec![Rational::zero(); n]);
                }
            }
        }
        r
    }

    /// `δ(Z) = ad_Z r⁻` as a coefficient matrix.
    pub fn cobracket(&self, z: &[Rational]) -> Matrix {
        let (_, skew) = self.split();
        let ad = self.algebra.ad(z);
        &(&ad * &skew.coeffs) + &(&skew.coeffs * &ad.transpose())
    }

    /// `[ξ, λ]_r = ad*_{r̂⁻λ}ξ − ad*_{r̂⁻ξ}λ` on `k*`, with `ad*_X = ad_Xᵀ`
    /// in dual coordinates.
    pub fn dual_bracket(&self) -> LieAlgebra {
        let n = self.dim();
        let (_, skew) = self.split();
        let rm = skew.rhat();
        let name = alloc::format!("{}*", self.algebra.name());
        LieAlgebra::from_brackets(&name, n, |i, j| {
            let (xi, la) = (unit(n, i), unit(n, j));
            let a = self.algebra.ad(&rm.mul_vec(&la)).transpose().mul_vec(&xi);
            let b = self.algebra.ad(&rm.mul_vec(&xi)).transpose().mul_vec(&la);
            crate::matrix::sub_vec(&a, &b)
        })
    }

    /// `⟨[ξ,λ]_r, Z⟩ = ⟨ξ⊗λ, δ(Z)⟩` on basis triples.
    pub fn check_dual_pairing(&self) -> Report {
        let n = self.dim();
        let dual = self.dual_bracket();
        let mut r = Report::new();
        let name = "dual_bracket_pairing";
        r.run(name);
        for k in 0..n {
            let d = self.cobracket(&unit(n, k));
            for i in 0..n {
                for j in 0..n {
                    let lhs = dual.constant(i, j, k);
                    let rhs = d[(i, j)].clone();
                    if lhs != rhs {
                        r.fail(name, &[i, j, k], vec![lhs], vec![rhs]);
                    }
                }
            }
        }
        r
    }

    /// CYBE and factorizability.
    pub fn verify(&self) -> Report {
        let mut r = self.check_cybe();
        r.merge(self.check_factorizable());
        r
    }
}

/// `G = r̂⁺ψ`, `B = r̂⁻ψ` where `ψ: g₊ → g₋*` is the pairing and `r` lives on
/// `g₋`. Requires CYBE and factorizability.
pub fn gb_from_r(s: &SplitAlgebra, r: &RMatrix) -> Result<OOperator> {
    dim_check("r-matrix algebra vs g₋", s.minus_dim(), r.dim())?;
    let rep = r.verify();
    if !rep.passed() {
        return Err(Error::Precondition { what: "r is a factorizable solution of the CYBE", report: rep });
    }
    let psi = s.pairing().transpose();
    let (sym, skew) = r.split();
    OOperator::new(&skew.rhat() * &psi, &sym.rhat() * &psi)
}

/// `R = BG⁻¹` on `g₋` solves the modified CYBE
/// `[RX,RY] − R[RX,Y] − R[X,RY] = −[X,Y]`.
pub fn check_semenov(gminus: &LieAlgebra, o: &OOperator) -> Result<Report> {
    let gi = o.g.invert().map_err(|_| Error::Singular("G"))?;
    let rr = &o.b * &gi;
    Ok(check_mcybe(gminus, &rr, "semenov_mcybe"))
}

/// `[θX,θY] − θ[θX,Y] − θ[X,θY] = −[X,Y]` on basis pairs.
pub fn check_mcybe(a: &LieAlgebra, theta: &Matrix, name: &str) -> Report {
    let n = a.dim();
    let mut r = Report::new();
    r.run(name);
    if theta.rows() != n || theta.cols() != n {
        r.fail(name, &[theta.rows(), theta.cols()], Vec::new(), Vec::new());
        return r;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let (x, y) = (unit(n, i), unit(n, j));
            let (tx, ty) = (theta.column(i), theta.column(j));
            let mut lhs = a.br(&tx, &ty);
            lhs = crate::matrix::sub_vec(&lhs, &theta.mul_vec(&a.br(&tx, &y)));
            lhs = crate::matrix::sub_vec(&lhs, &theta.mul_vec(&a.br(&x, &ty)));
            r.expect_eq(name, &[i, j], lhs, crate::matrix::neg_vec(&a.basis_bracket(i, j)));
        }
    }
    r
}

/// The double `k* ⋈ k` of a Lie bialgebra, given `k` and the bracket on
/// `k*` in the dual basis. Order is `k*` first, then `k`, paired by the
/// identity, with
///
/// ```text
/// [e_i, f^j] = Σ_k d^{jk}_i e_k − Σ_k c_{ik}^j f^k
/// ```
///
/// where `c` and `d` are the structure constants of `k` and `k*`. The
/// report verifies the Manin triple and that the dressing is `−ad*`.
pub fn double_from_bialgebra(k: &LieAlgebra, dual: &LieAlgebra) -> Result<(ManinTriple, Report)> {
    let n = k.dim();
    dim_check("dual algebra", n, dual.dim())?;
    let name = alloc::format!("D({})", k.name());
    let g = LieAlgebra::from_fn(&name, 2 * n, |a, b, out| {
        match (a < n, b < n) {
            (true, true) => {
                if out < n {
                    dual.constant(a, b, out)
                } else {
                    Rational::zero()
                }
            }
            (false, false) => {
                if out >= n {
                    k.constant(a - n, b - n, out - n)
                } else {
                    Rational::zero()
                }
            }
            (false, true) => mixed(k, dual, a - n, b, out),
            (true, false) => -mixed(k, dual, b - n, a, out),
        }
    });
    let z = Matrix::zeros(n, n);
    let i = Matrix::identity(n);
    let form = BilinearForm::new(Matrix::block(&z, &i, &i, &z)?)?;
    let t = ManinTriple::new(g, form, Subspace::coordinate(2 * n, 0, n), Subspace::coordinate(2 * n, n, 2 * n))?;
    let mut r = t.verify();
    let name = "dressing_is_minus_coadjoint";
    r.run(name);
    let s = t.split();
    for a in 0..n {
        let minus_ad_t = -&k.ad(&unit(n, a)).transpose();
        expect_matrix_eq(&mut r, name, &s.dressing_action().operator(&unit(n, a)), &minus_ad_t);
    }
    Ok((t, r))
}

/// Coefficient of basis vector `out` (doubled indexing) in `[e_i, f^j]`.
fn mixed(k: &LieAlgebra, dual: &LieAlgebra, i: usize, j: usize, out: usize) -> Rational {
    let n = k.dim();
    if out >= n {
        // d^{j, out-n}_i: coefficient of f^i in [f^j, f^{out-n}]
        dual.constant(j, out - n, i)
    } else {
        -k.constant(i, out, j)
    }
}

/// The classical double of `k` for an r-matrix on `k`: the dual bracket
/// is `[ , ]_r`.
pub fn double_from_r(r: &RMatrix) -> Result<(ManinTriple, Report)> {
    let mut rep = r.check_dual_pairing();
    let (t, more) = double_from_bialgebra(&r.algebra, &r.dual_bracket())?;
    rep.merge(more);
    Ok((t, rep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::manin::check_o_operator;
    use crate::matrix::int;

    fn sl2_r() -> RMatrix {
        RMatrix::new(fixtures::sl2(), fixtures::sl2_r_coefficients()).unwrap()
    }

    #[test]
    fn standard_r_is_factorizable_cybe() {
        let r = sl2_r();
        assert!(r.check_cybe().passed());
        assert!(r.check_factorizable().passed());
        assert!(r.check_dual_pairing().passed());
    }

    #[test]
    fn zero_r_solves_cybe_but_is_not_factorizable() {
        let r = RMatrix::new(fixtures::sl2(), Matrix::zeros(3, 3)).unwrap();
        assert!(r.check_cybe().passed());
        assert!(!r.check_factorizable().passed());
    }

    #[test]
    fn skew_part_alone_fails_cybe() {
        let (_, skew) = sl2_r().split();
        assert!(!skew.check_cybe().passed());
    }

    #[test]
    fn perturbed_coefficient_fails_cybe() {
        let mut r = sl2_r();
        r.coeffs[(1, 2)] = int(2);
        assert!(!r.check_cybe().passed());
    }

    #[test]
    fn dual_bracket_of_sl2() {
        let d = sl2_r().dual_bracket();
        assert_eq!(d.basis_bracket(0, 1), vec![int(0), rat(-1, 2), int(0)]);
        assert_eq!(d.basis_bracket(0, 2), vec![int(0), int(0), rat(-1, 2)]);
        assert_eq!(d.basis_bracket(1, 2), vec![int(0); 3]);
    }

    #[test]
    fn cobracket_of_x_plus() {
        let d = sl2_r().cobracket(&unit(3, 1));
        let expected = Matrix::from_rows(vec![
            vec![int(0), rat(-1, 2), int(0)],
            vec![rat(1, 2), int(0), int(0)],
            vec![int(0), int(0), int(0)],
        ])
        .unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn double_matches_fixture() {
        let (t, r) = double_from_r(&sl2_r()).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(t.g.clone().with_name("x"), fixtures::sl2_double().g.with_name("x"));
    }

    #[test]
    fn metric_and_twist_from_r() {
        let t = fixtures::sl2_double();
        let o = gb_from_r(t.split(), &sl2_r()).unwrap();
        let (g, b) = fixtures::sl2_metric_twist();
        assert_eq!((o.g.clone(), o.b.clone()), (g, b));
        assert!(check_o_operator(t.split(), &o).passed());
        assert!(o.check_shape(t.split()).passed());
        assert!(check_semenov(&t.split().minus_algebra(), &o).unwrap().passed());
    }

    #[test]
    fn gb_refuses_non_factorizable() {
        let t = fixtures::sl2_double();
        let zero = RMatrix::new(fixtures::sl2(), Matrix::zeros(3, 3)).unwrap();
        assert!(matches!(gb_from_r(t.split(), &zero), Err(Error::Precondition { .. })));
    }
}
