use knotorder_core::algebra::arith::is_prime;
use knotorder_core::algebra::rational::{int, rat};
use knotorder_core::algebra::Rational;
use knotorder_core::knot::SeifertMatrix;
use knotorder_core::lens::{
    admissible_k, independence_certificate, infinite_order_certificate, lattice_sigma, seifert_metabolic_check,
    sigma_closed, tau_bound, triangle_points, tristram_levine_signature, IndependenceVerdict, OrderVerdict,
};
use knotorder_core::Error;
use num_traits::Zero;
use proptest::prelude::*;

#[test]
fn closed_form_equals_lattice_count_on_the_full_grid() {
    let ks = admissible_k(3, 25);
    assert_eq!(ks, vec![3, 4, 7, 9, 10, 13, 15, 18, 22, 24, 25]);
    let mut checked = 0;
    for k in ks {
        let m = 4 * k + 1;
        for r in 1..m {
            assert_eq!(sigma_closed(k, r).unwrap(), lattice_sigma(k, r).unwrap(), "k={k} r={r}");
            checked += 1;
        }
    }
    assert!(checked > 500);
}

#[test]
fn tau_bound_is_negative_from_thirteen_on() {
    for m in (13..=101).filter(|&m| m % 4 == 1 && is_prime(m as u64)) {
        let k = (m - 1) / 4;
        for n in (2..=10).step_by(2) {
            let bound = tau_bound(m, n);
            assert!(bound < Rational::zero(), "m={m} n={n}: {bound}");
            let cert = infinite_order_certificate(k, n).unwrap();
            assert_eq!(cert.sigma1_tau_upper_bound, bound);
            assert_eq!(cert.verdict, OrderVerdict::InfiniteOrderEvidence);
        }
    }
}

#[test]
fn independence_certificates_are_order_independent() {
    let a = independence_certificate(&[(7, 2), (3, 4), (4, 2)]).unwrap();
    let b = independence_certificate(&[(3, 4), (4, 2), (7, 2)]).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.pairs, vec![(3, 4), (4, 2), (7, 2)]);
    assert_eq!(a.m1, Some(13));
    assert_eq!(a.reduced_bound, Some(tau_bound(13, 4)));
    assert_eq!(a.verdict, IndependenceVerdict::NotSlice);
    let odd = independence_certificate(&[(4, 2), (3, 3)]).unwrap();
    assert_eq!(odd.decided_by, "fox-milnor");
}

fn metabolic_seifert(a: [i64; 4], c: [i64; 4]) -> SeifertMatrix {
    // V = [[0, A], [Aᵀ − I, C]]: V − Vᵀ is unimodular and span(e1, e2) is metabolic
    SeifertMatrix::from_i64(&[
        vec![0, 0, a[0], a[1]],
        vec![0, 0, a[2], a[3]],
        vec![a[0] - 1, a[2], c[0], c[1]],
        vec![a[1], a[3] - 1, c[2], c[3]],
    ])
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pick_theorem_on_integral_triangles(x in 1i64..40, y in 1i64..40) {
        let pts = triangle_points(x, &int(y));
        prop_assert_eq!(pts.vertex, 2);
        let interior = int(pts.interior as i64);
        let boundary = int((pts.edge + pts.vertex + 1) as i64);
        prop_assert_eq!(rat(x * y, 2), interior + boundary / int(2) - int(1));
    }

    #[test]
    fn closed_form_agrees_at_random_admissible_points(ki in 0usize..40, r_seed in 1i64..10_000) {
        let ks = admissible_k(1, 200);
        let k = ks[ki % ks.len()];
        let m = 4 * k + 1;
        let r = 1 + r_seed % (m - 1);
        prop_assert_eq!(sigma_closed(k, r).unwrap(), lattice_sigma(k, r).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn metabolic_seifert_forms_have_vanishing_signature(
        a in prop::array::uniform4(-2i64..=2),
        c in prop::array::uniform4(-2i64..=2),
        d in 2u32..=30,
    ) {
        let v = metabolic_seifert(a, c);
        prop_assert!(seifert_metabolic_check(&v, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap());
        for j in 1..d as i64 {
            match tristram_levine_signature(&v, d, j) {
                Ok(s) => prop_assert_eq!(s, 0, "d={} j={}", d, j),
                Err(Error::Singular(_)) => {}
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            }
        }
    }
}
