use manin_forge_core::cps::{check_dual_gauge, cps_gauged, dual_gauge_data, eigenspace, gauge_splitting};
use manin_forge_core::fixtures;
use manin_forge_core::lie::projector;
use manin_forge_core::manin::check_o_operator;
use manin_forge_core::matrix::{int, rat, Matrix, Rational};
use manin_forge_core::reverse::{b_from_theta, check_theta, quasi_manin_from_phi};
use manin_forge_core::rmatrix::check_mcybe;
use manin_forge_core::{BilinearForm, LieAlgebra, Subspace};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(small_rat(), rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| v[i * cols + j].clone()))
}

fn sparse_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(prop_oneof![3 => Just(int(0)), 2 => small_rat()], rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| v[i * cols + j].clone()))
}

fn symmetric(n: usize) -> impl Strategy<Value = Matrix> {
    matrix(n, n).prop_map(|m| &m + &m.transpose())
}

fn skew(n: usize) -> impl Strategy<Value = Matrix> {
    matrix(n, n).prop_map(|m| &m - &m.transpose())
}

fn hyperbolic(d: usize) -> (BilinearForm, Subspace, Subspace) {
    let z = Matrix::zeros(d, d);
    let i = Matrix::identity(d);
    let form = BilinearForm::new(Matrix::block(&z, &i, &i, &z).unwrap()).unwrap();
    (form, Subspace::coordinate(2 * d, 0, d), Subspace::coordinate(2 * d, d, 2 * d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in sparse_matrix(3, 4)) {
        let (r, pivots) = m.rref();
        let (r2, pivots2) = r.rref();
        prop_assert_eq!(r2, r);
        prop_assert_eq!(pivots2, pivots);
    }

    #[test]
    fn kernel_is_annihilated_and_rank_nullity(m in sparse_matrix(3, 5)) {
        let k = m.kernel();
        prop_assert!((&m * &k).is_zero());
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn inverse_is_two_sided(m in matrix(3, 3)) {
        match m.invert() {
            Ok(inv) => {
                prop_assert_eq!(&m * &inv, Matrix::identity(3));
                prop_assert_eq!(&inv * &m, Matrix::identity(3));
            }
            Err(_) => prop_assert!(m.rank() < 3),
        }
    }

    #[test]
    fn transpose_is_an_involution(m in matrix(2, 3)) {
        prop_assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn projectors_are_idempotent(a in matrix(4, 2), b in matrix(4, 2)) {
        let (Ok(s), Ok(t)) = (Subspace::new(a), Subspace::new(b)) else { return Ok(()) };
        if !s.complementary(&t) {
            return Ok(());
        }
        let p = projector(&s, &t).unwrap();
        let m = p.matrix();
        prop_assert_eq!(m * m, m.clone());
        prop_assert!((m * t.basis()).is_zero());
        prop_assert_eq!(m * s.basis(), s.basis().clone());
    }

    #[test]
    fn opposite_twice_is_identity(s in 1i64..4) {
        let a = fixtures::sl2().scaled(&int(s));
        prop_assert_eq!(a.opposite().opposite().with_name("x"), a.with_name("x"));
    }

    #[test]
    fn gauged_structure_is_a_cps(g in symmetric(3), b in skew(3)) {
        if g.invert().is_err() {
            return Ok(());
        }
        let (form, fp, fm) = hyperbolic(3);
        let c = cps_gauged(&form, &fp, &fm, &g, &b).unwrap();
        prop_assert!(c.verify().passed());
        let (ep, em) = gauge_splitting(&form, &fp, &fm, &g, &b).unwrap();
        prop_assert!(eigenspace(&c.e, &int(1)).unwrap().same_span(&ep));
        prop_assert!(eigenspace(&c.e, &int(-1)).unwrap().same_span(&em));
        prop_assert!(eigenspace(&c.f, &int(1)).unwrap().same_span(&Subspace::graph(&b)));
        prop_assert!(eigenspace(&c.f, &int(-1)).unwrap().same_span(&fm));
    }

    #[test]
    fn gauged_structure_is_conformal(g in symmetric(2), b in skew(2), l in prop_oneof![(1i64..5), (-5i64..0)]) {
        if g.invert().is_err() {
            return Ok(());
        }
        let (form, fp, fm) = hyperbolic(2);
        let lam = int(l);
        let c = cps_gauged(&form, &fp, &fm, &g, &b).unwrap();
        let scaled = cps_gauged(&form, &fp, &fm, &g.scale(&lam), &b.scale(&lam)).unwrap();
        let d = Matrix::diagonal(&[int(1), int(1), lam.clone(), lam]);
        for ev in [int(1), int(-1)] {
            let moved = Subspace::new(&d * eigenspace(&c.e, &ev).unwrap().basis()).unwrap();
            prop_assert!(eigenspace(&scaled.e, &ev).unwrap().same_span(&moved));
        }
    }

    #[test]
    fn dual_gauge_round_trip(g in symmetric(3), b in skew(3)) {
        let Ok((gt, bt)) = dual_gauge_data(&g, &b) else { return Ok(()) };
        prop_assert!(check_dual_gauge(&g, &b, &gt, &bt).passed());
        let (g2, b2) = dual_gauge_data(&gt, &bt).unwrap();
        prop_assert_eq!(g2, g);
        prop_assert_eq!(b2, b);
    }

    #[test]
    fn theta_o_operator_iff_mcybe(t in sparse_matrix(3, 3)) {
        let p = fixtures::sl2_pair();
        let (q, _) = quasi_manin_from_phi(&p).unwrap();
        let o = b_from_theta(&q, &p, &t, true).unwrap();
        let mcybe = check_mcybe(&p.eplus, &t, "m").passed();
        prop_assert_eq!(check_o_operator(&q.split, &o).passed(), mcybe);
        if mcybe && check_theta(&p, &t).passed() {
            prop_assert!(b_from_theta(&q, &p, &t, false).is_ok());
        }
    }

    #[test]
    fn in_basis_preserves_jacobi(p in matrix(3, 3)) {
        if p.invert().is_err() {
            return Ok(());
        }
        let a: LieAlgebra = fixtures::sl2().in_basis(&p).unwrap();
        prop_assert!(a.check_jacobi().passed());
        prop_assert!(a.check_ad_invariance(&fixtures::sl2_trace_form().in_basis(&p).unwrap()).passed());
    }
}
