//! Built-in sl₂ examples, diffed against tables entered by hand.
//!
//! Forward basis: `(h, x₊, x₋, H, X₊, X₋)` with `g₊ = sl₂*` first.
//! Reverse basis: `(e₊¹, e₊², e₊³, e₋¹, e₋², e₋³)`.
//!
//! The 6×6 `E`/`J` tables compared here are the block-formula matrices for
//! the `(G, B)` tables above. A separate check records that the matrices as
//! usually printed for this example are that formula at `(G, −B)`.

use manin_forge_core::cps::{cps_gauged, ComplexProductStructure};
use manin_forge_core::manin::{bracket_b, OOperator};
use manin_forge_core::matrix::{is_zero_vec, Matrix, Rational};
use manin_forge_core::reverse::{build_manin_from_orthogonal, ReverseResult};
use manin_forge_core::rmatrix::{double_from_r, gb_from_r, RMatrix};
use manin_forge_core::twilled::{build_gtilde_b, split_ideals, TwilledAlgebra};
use manin_forge_core::{LieAlgebra, Report, Subspace};

use crate::error::CliError;
use crate::pipelines::{self, OperatorSource};
use crate::schema::parse_rational;
use crate::workspace::Workspace;

pub const SL2_MANIN: &str = include_str!("../data/sl2_manin.json");
pub const SL2_R: &str = include_str!("../data/sl2_r.json");
pub const SL2_PAIR: &str = include_str!("../data/sl2_pair.json");
pub const SL2_THETA: &str = include_str!("../data/sl2_theta.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Example {
    Sl2Forward,
    Sl2Reverse,
    Sl2Crosscheck,
}

impl Example {
    pub fn name(self) -> &'static str {
        match self {
            Example::Sl2Forward => "sl2-forward",
            Example::Sl2Reverse => "sl2-reverse",
            Example::Sl2Crosscheck => "sl2-crosscheck",
        }
    }

    pub fn all() -> [Example; 3] {
        [Example::Sl2Forward, Example::Sl2Reverse, Example::Sl2Crosscheck]
    }
}

/// Pipeline checks followed by `example.*` table comparisons.
pub fn run(ex: Example) -> Result<Report, CliError> {
    match ex {
        Example::Sl2Forward => sl2_forward(),
        Example::Sl2Reverse => sl2_reverse(),
        Example::Sl2Crosscheck => sl2_crosscheck(),
    }
}

fn q(s: &str) -> Rational {
    parse_rational(s).expect("table entries are valid rationals")
}

/// A vector from sparse `(index, "p/q")` terms.
pub fn vector(n: usize, terms: &[(usize, &str)]) -> Vec<Rational> {
    let mut v = vec![q("0"); n];
    for (i, c) in terms {
        v[*i] += q(c);
    }
    v
}

pub fn matrix(rows: &[&[&str]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|c| q(c)).collect()).collect()).expect("rectangular table")
}

/// `(index, coefficient)` terms of a vector.
pub type Terms<'a> = &'a [(usize, &'a str)];

/// A bracket table; unlisted pairs vanish.
pub fn table(n: usize, pairs: &[(usize, usize, Terms)]) -> LieAlgebra {
    let pairs: Vec<_> = pairs.iter().map(|(i, j, t)| (*i, *j, vector(n, t))).collect();
    LieAlgebra::from_pairs("expected", n, &pairs).expect("expected tables are well formed")
}

fn span(n: usize, vs: &[&[(usize, &str)]]) -> Subspace {
    Subspace::from_columns(n, &vs.iter().map(|t| vector(n, t)).collect::<Vec<_>>()).expect("independent vectors")
}

/// Every basis bracket, witness `(i, j)`.
fn diff_brackets(r: &mut Report, name: &str, got: &LieAlgebra, want: &LieAlgebra) {
    r.run(name);
    if got.dim() != want.dim() {
        r.fail(name, &[got.dim(), want.dim()], Vec::new(), Vec::new());
        return;
    }
    for i in 0..got.dim() {
        for j in (i + 1)..got.dim() {
            r.expect_eq(name, &[i, j], got.basis_bracket(i, j), want.basis_bracket(i, j));
        }
    }
}

/// Every entry, witness `(row, column)`.
fn diff_matrix(r: &mut Report, name: &str, got: &Matrix, want: &Matrix) {
    r.run(name);
    if got.rows() != want.rows() || got.cols() != want.cols() {
        r.fail(name, &[got.rows(), got.cols()], Vec::new(), Vec::new());
        return;
    }
    for i in 0..got.rows() {
        for j in 0..got.cols() {
            if got[(i, j)] != want[(i, j)] {
                r.fail(name, &[i, j], vec![got[(i, j)].clone()], vec![want[(i, j)].clone()]);
            }
        }
    }
}

/// Action tables `a(i, j)` for all basis pairs, witness `(i, j)`.
fn diff_action(r: &mut Report, name: &str, got: impl Fn(usize, usize) -> Vec<Rational>, want: impl Fn(usize, usize) -> Vec<Rational>, n: usize) {
    r.run(name);
    for i in 0..n {
        for j in 0..n {
            r.expect_eq(name, &[i, j], got(i, j), want(i, j));
        }
    }
}

const H: usize = 0;
const XP: usize = 1;
const XM: usize = 2;
const BH: usize = 3;
const BXP: usize = 4;
const BXM: usize = 5;

/// Forward data as the pipeline sees it.
pub struct ForwardData {
    pub r: RMatrix,
    pub operator: OOperator,
    pub twilled: TwilledAlgebra,
    pub eplus: Subspace,
    pub eminus: Subspace,
    pub cps: ComplexProductStructure,
}

pub fn forward_data() -> Result<ForwardData, CliError> {
    let ws = Workspace::from_texts(&[SL2_MANIN, SL2_R])?;
    let triple = ws.triple("double.triple")?;
    let (_, r) = ws.r_matrix("r")?;
    let split = triple.triple.split();
    let operator = gb_from_r(split, &r)?;
    let (twilled, _) = build_gtilde_b(split, &operator)?;
    let (eplus, eminus, _) = split_ideals(&twilled, &operator)?;
    let form = twilled.form.clone().ok_or_else(|| CliError::Schema("g̃_B carries no form".into()))?;
    let cps = cps_gauged(&form, &twilled.plus_side(), &twilled.minus_side(), &operator.g, &operator.b)?;
    Ok(ForwardData { r, operator, twilled, eplus, eminus, cps })
}

/// g̃_B: `[ , ]′` on sl₂*, sl₂ unchanged, and the primed crossed brackets.
pub fn expected_gtilde() -> LieAlgebra {
    table(
        6,
        &[
            (H, XP, &[(XP, "1/2")]),
            (H, XM, &[(XM, "1/2")]),
            (BH, BXP, &[(BXP, "2")]),
            (BH, BXM, &[(BXM, "-2")]),
            (BXP, BXM, &[(BH, "1")]),
            (BXP, H, &[(BXP, "1/2"), (XM, "-1")]),
            (BXM, H, &[(XP, "1"), (BXM, "1/2")]),
            (BH, XP, &[(XP, "-2")]),
            (BH, XM, &[(XM, "2")]),
            (BXP, XP, &[(H, "2"), (BH, "-1/2")]),
            (BXM, XM, &[(H, "-2"), (BH, "-1/2")]),
        ],
    )
}

pub fn expected_forward_ideals() -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let plus = vec![vector(6, &[(H, "1"), (BH, "1/4")]), vector(6, &[(XP, "1"), (BXM, "1")]), vector(6, &[(XM, "1")])];
    let minus = vec![vector(6, &[(H, "1"), (BH, "-1/4")]), vector(6, &[(XP, "1")]), vector(6, &[(XM, "1"), (BXP, "-1")])];
    (plus, minus)
}

pub fn expected_e() -> Matrix {
    matrix(&[
        &["0", "0", "0", "4", "0", "0"],
        &["0", "-1", "0", "0", "0", "2"],
        &["0", "0", "1", "0", "2", "0"],
        &["1/4", "0", "0", "0", "0", "0"],
        &["0", "0", "0", "0", "-1", "0"],
        &["0", "0", "0", "0", "0", "1"],
    ])
}

pub fn expected_j() -> Matrix {
    matrix(&[
        &["0", "0", "0", "4", "0", "0"],
        &["0", "-1", "0", "0", "0", "2"],
        &["0", "0", "1", "0", "2", "0"],
        &["-1/4", "0", "0", "0", "0", "0"],
        &["0", "0", "-1", "0", "-1", "0"],
        &["0", "-1", "0", "0", "0", "1"],
    ])
}

/// `E`, `J` exactly as printed for this example.
pub fn printed_e() -> Matrix {
    matrix(&[
        &["0", "0", "0", "4", "0", "0"],
        &["0", "1", "0", "0", "0", "2"],
        &["0", "0", "-1", "0", "2", "0"],
        &["1/4", "0", "0", "0", "0", "0"],
        &["0", "0", "0", "0", "1", "0"],
        &["0", "0", "0", "0", "0", "-1"],
    ])
}

pub fn printed_j() -> Matrix {
    matrix(&[
        &["0", "0", "0", "4", "0", "0"],
        &["0", "1", "0", "0", "0", "2"],
        &["0", "0", "-1", "0", "2", "0"],
        &["-1/4", "0", "0", "0", "0", "0"],
        &["0", "0", "-1", "0", "1", "0"],
        &["0", "-1", "0", "0", "0", "-1"],
    ])
}

fn sl2_forward() -> Result<Report, CliError> {
    let ws = Workspace::from_texts(&[SL2_MANIN, SL2_R])?;
    let mut report = pipelines::forward(&ws, "double.triple", &OperatorSource::RMatrix("r".into()))?.report;
    let d = forward_data()?;
    let mut r = Report::new();

    let (sym, skew) = d.r.split();
    diff_matrix(&mut r, "r_symmetric_part", &sym.coeffs, &matrix(&[&["1/4", "0", "0"], &["0", "0", "1/2"], &["0", "1/2", "0"]]));
    diff_matrix(&mut r, "r_skew_part", &skew.coeffs, &matrix(&[&["0", "0", "0"], &["0", "0", "1/2"], &["0", "-1/2", "0"]]));
    let dual = table(3, &[(0, 1, &[(1, "-1/2")]), (0, 2, &[(2, "-1/2")])]);
    diff_brackets(&mut r, "dual_brackets", &d.r.dual_bracket(), &dual);
    let (double, _) = double_from_r(&d.r)?;
    diff_brackets(&mut r, "double_brackets", &double.g, &ws.algebra("double")?.algebra);

    diff_matrix(&mut r, "metric_table", &d.operator.g, &matrix(&[&["1/4", "0", "0"], &["0", "0", "1/2"], &["0", "1/2", "0"]]));
    diff_matrix(&mut r, "twist_table", &d.operator.b, &matrix(&[&["0", "0", "0"], &["0", "0", "-1/2"], &["0", "1/2", "0"]]));
    diff_brackets(&mut r, "twisted_brackets", &d.twilled.algebra, &expected_gtilde());

    let (plus, minus) = expected_forward_ideals();
    r.expect("eplus_span", &[], d.eplus.same_span(&Subspace::from_columns(6, &plus)?));
    r.expect("eminus_span", &[], d.eminus.same_span(&Subspace::from_columns(6, &minus)?));
    ideal_brackets(&mut r, &d.twilled.algebra, &plus, &minus);

    diff_matrix(&mut r, "e_matrix", &d.cps.e, &expected_e());
    diff_matrix(&mut r, "j_matrix", &d.cps.j, &expected_j());
    let form = d.twilled.form.clone().ok_or_else(|| CliError::Schema("g̃_B carries no form".into()))?;
    let flipped = cps_gauged(&form, &d.twilled.plus_side(), &d.twilled.minus_side(), &d.operator.g, &-&d.operator.b)?;
    diff_matrix(&mut r, "printed_e_is_formula_at_minus_b", &flipped.e, &printed_e());
    diff_matrix(&mut r, "printed_j_is_formula_at_minus_b", &flipped.j, &printed_j());

    report.merge(r.prefixed("example."));
    Ok(report)
}

/// `[u₁,u₂] = −u₂`, `[u₁,u₃] = u₃`, `[u₂,u₃] = −2u₁` in `E⁺`;
/// `[w₁,w₂] = w₂`, `[w₁,w₃] = −w₃`, `[w₂,w₃] = 2w₁` in `E⁻`; `[E⁺, E⁻] = 0`.
fn ideal_brackets(r: &mut Report, a: &LieAlgebra, u: &[Vec<Rational>], w: &[Vec<Rational>]) {
    let comb = |vs: &[Vec<Rational>], cs: &[(usize, &str)]| {
        let mut out = vector(6, &[]);
        for (i, c) in cs {
            for (o, x) in out.iter_mut().zip(&vs[*i]) {
                *o += q(c) * x;
            }
        }
        out
    };
    let name = "ideal_brackets";
    r.run(name);
    let expected: [(usize, usize, Terms); 3] = [(0, 1, &[(1, "-1")]), (0, 2, &[(2, "1")]), (1, 2, &[(0, "-2")])];
    for (i, j, c) in expected {
        r.expect_eq(name, &[0, i, j], a.br(&u[i], &u[j]), comb(u, c));
    }
    let expected: [(usize, usize, Terms); 3] = [(0, 1, &[(1, "1")]), (0, 2, &[(2, "-1")]), (1, 2, &[(0, "2")])];
    for (i, j, c) in expected {
        r.expect_eq(name, &[1, i, j], a.br(&w[i], &w[j]), comb(w, c));
    }
    let name = "ideals_commute";
    r.run(name);
    for (i, x) in u.iter().enumerate() {
        for (j, y) in w.iter().enumerate() {
            let v = a.br(x, y);
            r.expect(name, &[i, j], is_zero_vec(&v));
        }
    }
}

pub fn reverse_data() -> Result<ReverseResult, CliError> {
    let ws = Workspace::from_texts(&[SL2_PAIR, SL2_THETA])?;
    let p = ws.pair("pair")?;
    let (_, _, theta) = ws.map("theta")?;
    let (res, _) = build_manin_from_orthogonal(&p.pair, &theta, false)?;
    Ok(res)
}

/// g_B: `−[ , ]_B` on `E⁺`, sl₂ on `E⁻` and the six crossed brackets.
pub fn expected_gb() -> LieAlgebra {
    table(
        6,
        &[
            (0, 1, &[(1, "2")]),
            (0, 2, &[(2, "2")]),
            (3, 4, &[(4, "-2")]),
            (3, 5, &[(5, "2")]),
            (4, 5, &[(3, "-1")]),
            (0, 4, &[(1, "-2"), (4, "-2")]),
            (0, 5, &[(2, "2"), (5, "-2")]),
            (1, 3, &[(1, "2")]),
            (1, 5, &[(0, "-1"), (3, "1")]),
            (2, 3, &[(2, "-2")]),
            (2, 4, &[(0, "1"), (3, "1")]),
        ],
    )
}

/// σ_{e₋ⁱ}e₊ʲ.
pub fn expected_sigma(i: usize, j: usize) -> Vec<Rational> {
    let t: &[(usize, &str)] = match (i, j) {
        (0, 1) => &[(1, "-2")],
        (0, 2) => &[(2, "2")],
        (1, 0) => &[(1, "2")],
        (1, 2) => &[(0, "-1")],
        (2, 0) => &[(2, "-2")],
        (2, 1) => &[(0, "1")],
        _ => &[],
    };
    vector(3, t)
}

/// The action of e₊ⁱ on e₋ʲ inside g_B. The two `e₋¹` entries are forced by
/// the crossed brackets `[e₊², e₋³]` and `[e₊³, e₋²]`.
pub fn expected_rho(i: usize, j: usize) -> Vec<Rational> {
    let t: &[(usize, &str)] = match (i, j) {
        (0, 1) => &[(1, "-2")],
        (0, 2) => &[(2, "-2")],
        (1, 2) => &[(0, "1")],
        (2, 1) => &[(0, "1")],
        _ => &[],
    };
    vector(3, t)
}

fn sl2_reverse() -> Result<Report, CliError> {
    let ws = Workspace::from_texts(&[SL2_PAIR, SL2_THETA])?;
    let mut report = pipelines::reverse(&ws, "pair", "theta")?.report;
    let (_, _, theta) = ws.map("theta")?;
    let res = reverse_data()?;
    let tw = &res.twilled;
    let mut r = Report::new();

    let diag = matrix(&[&["0", "0", "0"], &["0", "1", "0"], &["0", "0", "-1"]]);
    diff_matrix(&mut r, "theta_table", &theta, &diag);
    diff_matrix(&mut r, "twist_table", &res.operator.b, &diag);
    let bl = table(3, &[(0, 1, &[(1, "-2")]), (0, 2, &[(2, "-2")])]);
    diff_brackets(&mut r, "bracket_b", &bracket_b(&res.quasi.split, &res.operator, false)?, &bl);
    let sigma = &tw.actions.sigma;
    diff_action(&mut r, "sigma_table", |i, j| sigma.basis(i, j).to_vec(), expected_sigma, 3);
    let rho = tw.acting_rho();
    diff_action(&mut r, "rho_table", |i, j| rho.basis(i, j).to_vec(), expected_rho, 3);
    diff_brackets(&mut r, "gb_brackets", &tw.algebra, &expected_gb());
    let plus = span(6, &[&[(0, "1"), (3, "1")], &[(1, "1"), (4, "2")], &[(2, "1")]]);
    let minus = span(6, &[&[(0, "1"), (3, "-1")], &[(1, "1")], &[(2, "1"), (5, "-2")]]);
    r.expect("eplus_span", &[], res.eplus_b.same_span(&plus));
    r.expect("eminus_span", &[], res.eminus_b.same_span(&minus));

    report.merge(r.prefixed("example."));
    Ok(report)
}

/// Columns are the reverse basis written in forward coordinates:
/// `e₊¹ = 4h`, `e₊² = 2x₊`, `e₊³ = 2x₋`, `e₋¹ = H`, `e₋² = X₋`, `e₋³ = X₊`.
pub fn substitution() -> Matrix {
    let mut p = Matrix::zeros(6, 6);
    for (col, row, c) in [(0, H, "4"), (1, XP, "2"), (2, XM, "2"), (3, BH, "1"), (4, BXM, "1"), (5, BXP, "1")] {
        p[(row, col)] = q(c);
    }
    p
}

fn sl2_crosscheck() -> Result<Report, CliError> {
    let f = forward_data()?;
    let rv = reverse_data()?;
    let p = substitution();
    let mut r = Report::new();
    diff_brackets(&mut r, "substituted_brackets", &f.twilled.algebra.in_basis(&p)?, &rv.twilled.algebra);
    let pi = p.invert()?;
    let moved = |s: &Subspace| Subspace::new(&pi * s.basis());
    r.expect("eplus_corresponds", &[], moved(&f.eplus)?.same_span(&rv.eplus_b));
    r.expect("eminus_corresponds", &[], moved(&f.eminus)?.same_span(&rv.eminus_b));
    Ok(r.prefixed("example."))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_example_passes() {
        for ex in Example::all() {
            let r = run(ex).unwrap();
            assert!(r.passed(), "{}:\n{r}", ex.name());
        }
    }

    #[test]
    fn a_wrong_expected_entry_is_localized() {
        let d = forward_data().unwrap();
        let base = expected_gtilde();
        let wrong = LieAlgebra::from_fn("w", 6, |i, j, k| {
            let c = base.constant(i, j, k);
            if (i, j, k) == (H, XP, XP) {
                q("1")
            } else if (i, j, k) == (XP, H, XP) {
                q("-1")
            } else {
                c
            }
        });
        let mut r = Report::new();
        diff_brackets(&mut r, "t", &d.twilled.algebra, &wrong);
        let c = r.check("t").unwrap();
        assert_eq!(c.total_failures, 1);
        assert_eq!(c.failures[0].witness, vec![H, XP]);
    }
}
