//! Linear actions of one algebra on a vector space, as dense tables.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::lie::LieAlgebra;
use crate::matrix::{is_zero_vec, sub_vec, unit, zero_vec, Matrix, Rational};
use crate::report::Report;

/// `act(a_i) v_j = Σ_k table[i][j][k] v_k` for `i < acting`, `j, k < module`.
#[derive(Debug, Clone, PartialEq)]
pub struct Action {
    acting: usize,
    module: usize,
    table: Vec<Vec<Rational>>,
}

impl Action {
    pub fn from_fn(acting: usize, module: usize, mut f: impl FnMut(usize, usize) -> Vec<Rational>) -> Self {
        let mut table = Vec::with_capacity(acting * module);
        for i in 0..acting {
            for j in 0..module {
                let v = f(i, j);
                assert_eq!(v.len(), module, "action value has the wrong length");
                table.push(v);
            }
        }
        Action { acting, module, table }
    }

    pub fn zero(acting: usize, module: usize) -> Self {
        Self::from_fn(acting, module, |_, _| zero_vec(module))
    }

    pub fn acting_dim(&self) -> usize {
        self.acting
    }

    pub fn module_dim(&self) -> usize {
        self.module
    }

    /// `act(a_i) v_j`.
    pub fn basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i * self.module + j]
    }

    /// `act(x) v` for coordinate vectors.
    pub fn apply(&self, x: &[Rational], v: &[Rational]) -> Vec<Rational> {
        assert!(x.len() == self.acting && v.len() == self.module, "action dimension mismatch");
        let mut out = zero_vec(self.module);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let s = xi * vj;
                for (o, t) in out.iter_mut().zip(self.basis(i, j)) {
                    if !t.is_zero() {
                        *o += &s * t;
                    }
                }
            }
        }
        out
    }

    /// The operator of `x` as a `module × module` matrix.
    pub fn operator(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.module).map(|j| self.apply(x, &unit(self.module, j))).collect();
        Matrix::from_columns(self.module, &cols).expect("columns have module length")
    }

    /// The orbit map `x ↦ act(x) v` for fixed `v`, as a `module × acting`
    /// matrix.
    pub fn orbit(&self, v: &[Rational]) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.acting).map(|i| self.apply(&unit(self.acting, i), v)).collect();
        Matrix::from_columns(self.module, &cols).expect("columns have module length")
    }

    pub fn scaled(&self, s: &Rational) -> Action {
        Action {
            acting: self.acting,
            module: self.module,
            table: self.table.iter().map(|v| v.iter().map(|x| s * x).collect()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|v| is_zero_vec(v))
    }

    /// `act([a_i, a_j]) = act(a_i)act(a_j) − act(a_j)act(a_i)` on basis
    /// vectors; witness `(i, j, k)` with `k` the module basis index.
    pub fn check_representation(&self, acting: &LieAlgebra, name: &str) -> Report {
        let mut r = Report::new();
        r.run(name);
        if acting.dim() != self.acting {
            r.fail(name, &[acting.dim(), self.acting], Vec::new(), Vec::new());
            return r;
        }
        let ops: Vec<Matrix> = (0..self.acting).map(|i| self.operator(&unit(self.acting, i))).collect();
        for i in 0..self.acting {
            for j in (i + 1)..self.acting {
                let lhs = self.operator(&acting.basis_bracket(i, j));
                let rhs = &(&ops[i] * &ops[j]) - &(&ops[j] * &ops[i]);
                for k in 0..self.module {
                    let (a, b) = (lhs.column(k), rhs.column(k));
                    if a != b {
                        r.fail(name, &[i, j, k], a, b);
                    }
                }
            }
        }
        r
    }
}

/// `act(x)v − act(y)w`, a small helper for twilled brackets.
pub(crate) fn act_diff(a: &Action, x: &[Rational], v: &[Rational], y: &[Rational], w: &[Rational]) -> Vec<Rational> {
    sub_vec(&a.apply(x, v), &a.apply(y, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matrix::unit;

    #[test]
    fn adjoint_is_a_representation() {
        let s = fixtures::sl2();
        let ad = Action::from_fn(3, 3, |i, j| s.basis_bracket(i, j));
        assert!(ad.check_representation(&s, "adjoint").passed());
        assert_eq!(ad.operator(&unit(3, 0)), s.ad(&unit(3, 0)));
        let bad = ad.scaled(&crate::matrix::int(2));
        assert!(!bad.check_representation(&s, "adjoint").passed());
    }

    #[test]
    fn zero_action_represents_abelian() {
        let a = LieAlgebra::abelian("a", 2);
        assert!(Action::zero(2, 3).check_representation(&a, "zero").passed());
        assert!(Action::zero(2, 3).is_zero());
    }
}
