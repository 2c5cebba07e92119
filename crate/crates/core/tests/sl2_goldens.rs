//! sl₂ forward and reverse examples against hand-entered tables.

use manin_forge_core::cps::{cps_gauged, eigenspace, nijenhuis_defect, StructureKind};
use manin_forge_core::fixtures;
use manin_forge_core::manin::{bracket_b, OOperator};
use manin_forge_core::matrix::{int, rat, Matrix, Rational};
use manin_forge_core::reverse::{build_manin_from_orthogonal, ReverseResult};
use manin_forge_core::rmatrix::{gb_from_r, RMatrix};
use manin_forge_core::twilled::{build_gtilde_b, phi_b, split_ideals, TwilledAlgebra};
use manin_forge_core::{LieAlgebra, Subspace};

const H: usize = 0;
const XP: usize = 1;
const XM: usize = 2;
const BH: usize = 3;
const BXP: usize = 4;
const BXM: usize = 5;

fn vec6(terms: &[(usize, Rational)]) -> Vec<Rational> {
    let mut v = vec![int(0); 6];
    for (i, c) in terms {
        v[*i] += c;
    }
    v
}

fn forward() -> (TwilledAlgebra, OOperator) {
    let t = fixtures::sl2_double();
    let r = RMatrix::new(fixtures::sl2(), fixtures::sl2_r_coefficients()).unwrap();
    let o = gb_from_r(t.split(), &r).unwrap();
    let (tw, rep) = build_gtilde_b(t.split(), &o).unwrap();
    assert!(rep.passed(), "{rep}");
    (tw, o)
}

/// The twisted double, entered bracket by bracket.
fn gtilde_oracle() -> LieAlgebra {
    let half = rat(1, 2);
    let pairs = vec![
        // the opposite of [ , ]_B, which here coincides with the bracket of sl₂*
        (H, XP, vec6(&[(XP, half.clone())])),
        (H, XM, vec6(&[(XM, half.clone())])),
        (BH, BXP, vec6(&[(BXP, int(2))])),
        (BH, BXM, vec6(&[(BXM, int(-2))])),
        (BXP, BXM, vec6(&[(BH, int(1))])),
        (BXP, H, vec6(&[(BXP, half.clone()), (XM, int(-1))])),
        (BXM, H, vec6(&[(XP, int(1)), (BXM, half.clone())])),
        (BH, XP, vec6(&[(XP, int(-2))])),
        (BH, XM, vec6(&[(XM, int(2))])),
        (BXP, XP, vec6(&[(H, int(2)), (BH, -half.clone())])),
        (BXM, XM, vec6(&[(H, int(-2)), (BH, -half)])),
    ];
    LieAlgebra::from_pairs("oracle", 6, &pairs).unwrap()
}

fn same_brackets(a: &LieAlgebra, b: &LieAlgebra) -> bool {
    (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.basis_bracket(i, j) == b.basis_bracket(i, j)))
}

#[test]
fn twisted_plus_bracket() {
    let t = fixtures::sl2_double();
    let (g, b) = fixtures::sl2_metric_twist();
    let twist = bracket_b(t.split(), &OOperator::new(b, g).unwrap(), false).unwrap();
    // [h, x±]_B = −½x±, [x₊, x₋]_B = 0
    assert_eq!(twist.basis_bracket(0, 1), vec![int(0), rat(-1, 2), int(0)]);
    assert_eq!(twist.basis_bracket(0, 2), vec![int(0), int(0), rat(-1, 2)]);
    assert_eq!(twist.basis_bracket(1, 2), vec![int(0); 3]);
}

#[test]
fn gtilde_matches_table() {
    let (tw, _) = forward();
    assert!(same_brackets(&tw.algebra, &gtilde_oracle()));
}

#[test]
fn ideals_and_their_brackets() {
    let (tw, o) = forward();
    let (ep, em, rep) = split_ideals(&tw, &o).unwrap();
    assert!(rep.passed(), "{rep}");
    let q = rat(1, 4);
    let plus = Subspace::from_columns(6, &[vec6(&[(H, int(1)), (BH, q.clone())]), vec6(&[(XP, int(1)), (BXM, int(1))]), vec6(&[(XM, int(1))])]).unwrap();
    let minus = Subspace::from_columns(6, &[vec6(&[(H, int(1)), (BH, -q)]), vec6(&[(XP, int(1))]), vec6(&[(XM, int(1)), (BXP, int(-1))])]).unwrap();
    assert!(ep.same_span(&plus));
    assert!(em.same_span(&minus));

    let a = &tw.algebra;
    let (u1, u2, u3) = (plus.vector(0), plus.vector(1), plus.vector(2));
    assert_eq!(a.br(&u1, &u2), u2.iter().map(|x| -x).collect::<Vec<_>>());
    assert_eq!(a.br(&u1, &u3), u3);
    assert_eq!(a.br(&u2, &u3), u1.iter().map(|x| x * int(-2)).collect::<Vec<_>>());
    let (w1, w2, w3) = (minus.vector(0), minus.vector(1), minus.vector(2));
    assert_eq!(a.br(&w1, &w2), w2);
    assert_eq!(a.br(&w1, &w3), w3.iter().map(|x| -x).collect::<Vec<_>>());
    assert_eq!(a.br(&w2, &w3), w1.iter().map(|x| x * int(2)).collect::<Vec<_>>());
}

#[test]
fn phi_b_sends_graph_bases() {
    let (tw, o) = forward();
    let (phi, rep) = phi_b(&tw, &o).unwrap();
    assert!(rep.passed(), "{rep}");
    let q = rat(1, 4);
    let img = |v: Vec<Rational>| phi.target().embed(&phi.apply(&phi.source().coords(&v).unwrap()));
    assert_eq!(img(vec6(&[(H, int(1)), (BH, q.clone())])), vec6(&[(H, int(1)), (BH, -q)]));
    assert_eq!(img(vec6(&[(XP, int(1)), (BXM, int(1))])), vec6(&[(XP, int(1))]));
    assert_eq!(img(vec6(&[(XM, int(1))])), vec6(&[(XM, int(1)), (BXP, int(-1))]));
}

fn rows(r: &[&[(i64, i64)]]) -> Matrix {
    Matrix::from_rows(r.iter().map(|row| row.iter().map(|&(n, d)| rat(n, d)).collect()).collect()).unwrap()
}

fn computed_e() -> Matrix {
    let z = (0, 1);
    rows(&[
        &[z, z, z, (4, 1), z, z],
        &[z, (-1, 1), z, z, z, (2, 1)],
        &[z, z, (1, 1), z, (2, 1), z],
        &[(1, 4), z, z, z, z, z],
        &[z, z, z, z, (-1, 1), z],
        &[z, z, z, z, z, (1, 1)],
    ])
}

fn computed_j() -> Matrix {
    let z = (0, 1);
    rows(&[
        &[z, z, z, (4, 1), z, z],
        &[z, (-1, 1), z, z, z, (2, 1)],
        &[z, z, (1, 1), z, (2, 1), z],
        &[(-1, 4), z, z, z, z, z],
        &[z, z, (-1, 1), z, (-1, 1), z],
        &[z, (-1, 1), z, z, z, (1, 1)],
    ])
}

/// The 6×6 matrices as they are printed for this example.
fn printed_e() -> Matrix {
    let z = (0, 1);
    rows(&[
        &[z, z, z, (4, 1), z, z],
        &[z, (1, 1), z, z, z, (2, 1)],
        &[z, z, (-1, 1), z, (2, 1), z],
        &[(1, 4), z, z, z, z, z],
        &[z, z, z, z, (1, 1), z],
        &[z, z, z, z, z, (-1, 1)],
    ])
}

#[test]
fn cps_matrices() {
    let (tw, o) = forward();
    let form = tw.form.clone().unwrap();
    let c = cps_gauged(&form, &tw.plus_side(), &tw.minus_side(), &o.g, &o.b).unwrap();
    assert!(c.verify().passed());
    assert_eq!(c.e, computed_e());
    assert_eq!(c.j, computed_j());
    let (ep, _, _) = split_ideals(&tw, &o).unwrap();
    assert!(eigenspace(&c.e, &int(1)).unwrap().same_span(&ep));

    // E is a product structure integrable on g̃_B, J is not.
    assert!(nijenhuis_defect(&tw.algebra, &c.e, StructureKind::Product).unwrap().is_zero());
    assert!(!nijenhuis_defect(&tw.algebra, &c.j, StructureKind::Complex).unwrap().is_zero());

    // The printed matrix is the block formula at (G, −B), and it differs.
    let flipped = cps_gauged(&form, &tw.plus_side(), &tw.minus_side(), &o.g, &-&o.b).unwrap();
    assert_eq!(flipped.e, printed_e());
    assert_ne!(c.e, printed_e());
}

#[test]
fn printed_e_is_not_integrable_on_gtilde() {
    let (tw, _) = forward();
    let defect = nijenhuis_defect(&tw.algebra, &printed_e(), StructureKind::Product).unwrap();
    assert!(!defect.is_zero());
}

fn reverse() -> ReverseResult {
    let (res, rep) = build_manin_from_orthogonal(&fixtures::sl2_pair(), &fixtures::sl2_theta(), false).unwrap();
    assert!(rep.passed(), "{rep}");
    res
}

#[test]
fn reverse_crossed_brackets() {
    let res = reverse();
    let a = &res.twilled.algebra;
    // plus basis 0..3 = e₊ⁱ, minus basis 3..6 = e₋ⁱ
    let e = |terms: &[(usize, i64)]| vec6(&terms.iter().map(|&(i, c)| (i, int(c))).collect::<Vec<_>>());
    assert_eq!(a.basis_bracket(0, 4), e(&[(1, -2), (4, -2)]));
    assert_eq!(a.basis_bracket(0, 5), e(&[(2, 2), (5, -2)]));
    assert_eq!(a.basis_bracket(1, 3), e(&[(1, 2)]));
    assert_eq!(a.basis_bracket(1, 5), e(&[(0, -1), (3, 1)]));
    assert_eq!(a.basis_bracket(2, 3), e(&[(2, -2)]));
    assert_eq!(a.basis_bracket(2, 4), e(&[(0, 1), (3, 1)]));
    for (i, j) in [(0, 3), (1, 4), (2, 5)] {
        assert_eq!(a.basis_bracket(i, j), e(&[]));
    }
    // [ , ]_B on the plus side, negated inside g_B
    assert_eq!(res.twilled.gplus.basis_bracket(0, 1), e(&[(1, -2)])[..3].to_vec());
    assert_eq!(res.twilled.gplus.basis_bracket(0, 2), e(&[(2, -2)])[..3].to_vec());
    assert_eq!(res.twilled.gplus.basis_bracket(1, 2), vec![int(0); 3]);

    let plus = Subspace::from_columns(6, &[e(&[(0, 1), (3, 1)]), e(&[(1, 1), (4, 2)]), e(&[(2, 1)])]).unwrap();
    let minus = Subspace::from_columns(6, &[e(&[(0, 1), (3, -1)]), e(&[(1, 1)]), e(&[(2, 1), (5, -2)])]).unwrap();
    assert!(res.eplus_b.same_span(&plus));
    assert!(res.eminus_b.same_span(&minus));
}

#[test]
fn reverse_matches_forward_after_substitution() {
    let res = reverse();
    let (tw, _) = forward();
    let mut p = Matrix::zeros(6, 6);
    for (col, row, c) in [(0, H, 4), (1, XP, 2), (2, XM, 2), (3, BH, 1), (4, BXM, 1), (5, BXP, 1)] {
        p[(row, col)] = int(c);
    }
    let moved = tw.algebra.in_basis(&p).unwrap();
    assert!(same_brackets(&moved, &res.twilled.algebra));
}
