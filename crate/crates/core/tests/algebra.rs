use std::sync::Arc;

use knotorder_core::algebra::det::cofactor_det;
use knotorder_core::algebra::rational::rat;
use knotorder_core::algebra::square::check_witness;
use knotorder_core::algebra::{
    det_laurent, is_square, Cyclotomic, CyclotomicField, IntegerMatrix, LaurentPoly, SquareConfig, SquareVerdict,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

const MODULI: [u32; 8] = [1, 3, 4, 5, 7, 8, 12, 29];

fn field(d: u32) -> Arc<CyclotomicField> {
    CyclotomicField::new(d).unwrap()
}

fn element(f: &Arc<CyclotomicField>, raw: &[(i64, i64)]) -> Cyclotomic {
    let coeffs: Vec<_> = raw.iter().take(f.degree()).map(|&(n, d)| rat(n, d)).collect();
    Cyclotomic::reduce(f, &coeffs)
}

fn raw_coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..=9, 1i64..=4), 28)
}

fn laurent(f: &Arc<CyclotomicField>, low: i64, raw: &[Vec<(i64, i64)>]) -> LaurentPoly {
    LaurentPoly::from_terms(f, raw.iter().enumerate().map(|(i, c)| (low + i as i64, element(f, c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(di in 0..MODULI.len(), a in raw_coeffs(), b in raw_coeffs(), c in raw_coeffs()) {
        let f = field(MODULI[di]);
        let (x, y, z) = (element(&f, &a), element(&f, &b), element(&f, &c));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            prop_assert!((&x * &x.inverse().unwrap()).is_one());
        } else {
            prop_assert!(x.inverse().is_none());
        }
    }

    #[test]
    fn galois_is_a_ring_homomorphism(di in 0..MODULI.len(), s in 1i64..60, a in raw_coeffs(), b in raw_coeffs()) {
        let f = field(MODULI[di]);
        let d = f.order() as i64;
        prop_assume!(s.gcd(&d) == 1);
        let (x, y) = (element(&f, &a), element(&f, &b));
        let g = |v: &Cyclotomic| v.galois(s).unwrap();
        prop_assert_eq!(g(&(&x + &y)), &g(&x) + &g(&y));
        prop_assert_eq!(g(&(&x * &y)), &g(&x) * &g(&y));
        prop_assert_eq!(g(&(&x - &y)), &g(&x) - &g(&y));
        prop_assert_eq!(g(&Cyclotomic::zeta_power(&f, 1)), Cyclotomic::zeta_power(&f, s));
    }

    #[test]
    fn canonical_form_is_idempotent(
        di in 0..MODULI.len(),
        low in -5i64..5,
        raw in prop::collection::vec(raw_coeffs(), 1..5),
        shift in -4i64..4,
        u in raw_coeffs(),
    ) {
        let f = field(MODULI[di]);
        let p = laurent(&f, low, &raw);
        prop_assume!(!p.is_zero());
        let c = p.canonical().unwrap();
        prop_assert_eq!(c.canonical().unwrap(), c.clone());
        let unit = element(&f, &u);
        prop_assume!(!unit.is_zero());
        let moved = p.scale(&unit).shift(shift);
        prop_assert_eq!(moved.canonical().unwrap(), c.clone());
        prop_assert!(moved.unit_equivalent(&p));
    }

    #[test]
    fn det_laurent_matches_cofactor_expansion(
        di in 0..4usize,
        n in 1usize..=4,
        entries in prop::collection::vec((-2i64..=1, prop::collection::vec(raw_coeffs(), 1..3)), 16),
    ) {
        let f = field([1u32, 3, 5, 8][di]);
        let m: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| (0..n).map(|j| {
                let (low, raw) = &entries[i * 4 + j];
                laurent(&f, *low, raw)
            }).collect())
            .collect();
        prop_assert_eq!(det_laurent(&m, &f).unwrap(), cofactor_det(&m, &f));
    }

    #[test]
    fn smith_normal_form_certifies_itself(
        rows in 1usize..5,
        cols in 1usize..5,
        entries in prop::collection::vec(-12i64..=12, 16),
    ) {
        let a = IntegerMatrix::from_i64(
            &(0..rows).map(|i| entries[i * 4..i * 4 + cols].to_vec()).collect::<Vec<_>>(),
        );
        let snf = a.smith_normal_form();
        prop_assert_eq!(snf.u.mul(&a).unwrap().mul(&snf.v).unwrap(), snf.d.clone());
        prop_assert_eq!(snf.u.det().unwrap().abs(), BigInt::from(1));
        prop_assert_eq!(snf.v.det().unwrap().abs(), BigInt::from(1));
        for i in 0..rows {
            for j in 0..cols {
                prop_assert!(i == j || snf.d.get(i, j).is_zero());
            }
        }
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative() && !w[1].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
    }

    #[test]
    fn square_certificates_are_sound(di in 0..MODULI.len(), a in raw_coeffs(), squared in any::<bool>()) {
        let f = field(MODULI[di]);
        let y = element(&f, &a);
        let x = if squared { &y * &y } else { y };
        let cert = is_square(&x, &SquareConfig::default());
        prop_assert!(cert.verify(&x));
        match cert.verdict {
            SquareVerdict::Yes => {
                let r = cert.root.as_ref().unwrap();
                prop_assert_eq!(&(r * r), &x);
            }
            SquareVerdict::No => prop_assert!(check_witness(&x, cert.witness.unwrap())),
            SquareVerdict::Indeterminate => {}
        }
        if squared {
            prop_assert_eq!(cert.verdict, SquareVerdict::Yes);
        }
    }
}

#[test]
fn non_square_witnesses_hold_at_further_primes() {
    use knotorder_core::algebra::square::non_residue_witnesses;
    let f = field(29);
    let x = &Cyclotomic::zeta_power(&f, 1) + &Cyclotomic::from_integer(&f, 3);
    let cert = is_square(&x, &SquareConfig::default());
    assert_eq!(cert.verdict, SquareVerdict::No);
    let extra = non_residue_witnesses(&x, 4, 200);
    assert!(extra.len() >= 4);
    assert!(extra.into_iter().all(|w| check_witness(&x, w)));
}
