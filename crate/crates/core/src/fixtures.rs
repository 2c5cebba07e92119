//! Small named algebras and data used by tests, examples and the CLI.
//!
//! sl₂ uses the basis `(H, X₊, X₋)` with `[H,X₊] = 2X₊`, `[H,X₋] = −2X₋`,
//! `[X₊,X₋] = H`.

use alloc::vec;
use alloc::vec::Vec;

use crate::lie::{BilinearForm, LieAlgebra, Subspace};
use crate::manin::ManinTriple;
use crate::matrix::{int, rat, Matrix, Rational};
use crate::reverse::AntiIsoPair;

fn v(xs: &[Rational]) -> Vec<Rational> {
    xs.to_vec()
}

pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_pairs(
        "sl2",
        3,
        &[
            (0, 1, v(&[int(0), int(2), int(0)])),
            (0, 2, v(&[int(0), int(0), int(-2)])),
            (1, 2, v(&[int(1), int(0), int(0)])),
        ],
    )
    .expect("sl2 table is well formed")
}

/// Trace form `tr(xy)` on sl₂.
pub fn sl2_trace_form() -> BilinearForm {
    BilinearForm::new(Matrix::from_i64(&[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]])).expect("trace form is nondegenerate")
}

/// `aff(1)`: `[x, y] = y`.
pub fn aff1() -> LieAlgebra {
    LieAlgebra::from_pairs("aff1", 2, &[(0, 1, v(&[int(0), int(1)]))]).expect("aff1 table is well formed")
}

/// Heisenberg: `[x, y] = z`.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_pairs("heis", 3, &[(0, 1, v(&[int(0), int(0), int(1)]))]).expect("heisenberg table is well formed")
}

/// Coefficients `C` of `r = X₊⊗X₋ + ¼H⊗H = Σ C_ij e_i⊗e_j` on sl₂.
pub fn sl2_r_coefficients() -> Matrix {
    Matrix::from_rows(vec![
        vec![rat(1, 4), int(0), int(0)],
        vec![int(0), int(0), int(1)],
        vec![int(0), int(0), int(0)],
    ])
    .expect("square")
}

/// The classical double of sl₂ for the standard r-matrix, in the basis
/// `(h, x₊, x₋, H, X₊, X₋)` with `g₊ = sl₂*` first and `g₋ = sl₂`, paired
/// by `⟨H,h⟩ = ⟨X₊,x₊⟩ = ⟨X₋,x₋⟩ = 1`.
pub fn sl2_double() -> ManinTriple {
    let (h, xp, xm, hh, xxp, xxm) = (0, 1, 2, 3, 4, 5);
    let e = |terms: &[(usize, Rational)]| {
        let mut out = vec![int(0); 6];
        for (i, c) in terms {
            out[*i] = c.clone();
        }
        out
    };
    let pairs = [
        (h, xp, e(&[(xp, rat(-1, 2))])),
        (h, xm, e(&[(xm, rat(-1, 2))])),
        (hh, xxp, e(&[(xxp, int(2))])),
        (hh, xxm, e(&[(xxm, int(-2))])),
        (xxp, xxm, e(&[(hh, int(1))])),
        (xxp, h, e(&[(xxp, rat(-1, 2)), (xm, int(-1))])),
        (xxm, h, e(&[(xxm, rat(-1, 2)), (xp, int(1))])),
        (hh, xp, e(&[(xp, int(-2))])),
        (hh, xm, e(&[(xm, int(2))])),
        (xxp, xp, e(&[(hh, rat(1, 2)), (h, int(2))])),
        (xxm, xm, e(&[(hh, rat(1, 2)), (h, int(-2))])),
    ];
    let g = LieAlgebra::from_pairs("D(sl2)", 6, &pairs).expect("double table is well formed");
    let i3 = Matrix::identity(3);
    let z3 = Matrix::zeros(3, 3);
    let gram = Matrix::block(&z3, &i3, &i3, &z3).expect("square blocks");
    let form = BilinearForm::new(gram).expect("hyperbolic form");
    ManinTriple::new(g, form, Subspace::coordinate(6, 0, 3), Subspace::coordinate(6, 3, 6)).expect("sl2 double is a Manin triple")
}

/// `(G, B)` on the sl₂ double: `G = r̂⁺ψ`, `B = r̂⁻ψ` for the standard r.
pub fn sl2_metric_twist() -> (Matrix, Matrix) {
    let g = Matrix::from_rows(vec![
        vec![rat(1, 4), int(0), int(0)],
        vec![int(0), int(0), rat(1, 2)],
        vec![int(0), rat(1, 2), int(0)],
    ])
    .expect("square");
    let b = Matrix::from_rows(vec![
        vec![int(0), int(0), int(0)],
        vec![int(0), int(0), rat(-1, 2)],
        vec![int(0), rat(1, 2), int(0)],
    ])
    .expect("square");
    (g, b)
}

/// `(sl₂^op, sl₂)` with `φ = id`, the trace form `M` on `E⁻` and `−M` on
/// `E⁺`.
pub fn sl2_pair() -> AntiIsoPair {
    let m = sl2_trace_form();
    let minus_m = BilinearForm::new(-m.gram()).expect("nondegenerate");
    AntiIsoPair::new(sl2().opposite(), sl2(), Matrix::identity(3), minus_m, m).expect("sl2 pair is anti-isomorphic")
}

/// `θ = diag(0, 1, −1)`, a solution of the modified CYBE on sl₂ that is
/// skew for the trace form.
pub fn sl2_theta() -> Matrix {
    Matrix::diagonal(&[int(0), int(1), int(-1)])
}
