use std::path::PathBuf;

use knotorder_core::algebra::{Cyclotomic, CyclotomicField};
use knotorder_core::group::cyclic_cover_presentation;
use knotorder_core::knot::{
    alexander_from_presentation, alexander_with_column, branched_cover_homology, character_from_element,
    determinant, four_plat, fraction_of, linking_form, two_bridge_presentation, Character, HomologyRoute,
    KnotFile, KnotRecord, LinkedAbelianGroup, SeifertMatrix,
};
use knotorder_core::twisted::{galois_twist, twisted_alexander, twisted_alexander_with_column};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn corpus() -> Vec<KnotRecord> {
    let mut out: Vec<KnotRecord> = std::fs::read_dir(data(""))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .map(|p| KnotFile::load(&p).unwrap().to_record().unwrap())
        .collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

fn record(name: &str) -> KnotRecord {
    KnotFile::load(data(name)).unwrap().to_record().unwrap()
}

#[test]
fn double_cover_order_is_the_determinant() {
    for k in corpus() {
        let det = determinant(&k.alexander().unwrap());
        for route in [HomologyRoute::Presentation, HomologyRoute::Seifert] {
            let Ok(h) = branched_cover_homology(&k, 2, Some(route)) else {
                continue;
            };
            assert_eq!(BigInt::from(h.order()), det, "{} via {route:?}", k.name);
        }
    }
}

#[test]
fn alexander_is_column_independent() {
    for k in corpus().iter().filter(|k| k.has_group()) {
        let p = k.group_presentation().unwrap();
        let base = alexander_from_presentation(&p).unwrap();
        for (j, &e) in p.eta0().unwrap().iter().enumerate() {
            if e != 0 {
                assert_eq!(alexander_with_column(&p, Some(j)).unwrap(), base, "{} column {j}", k.name);
            }
        }
    }
}

#[test]
fn seifert_and_presentation_routes_agree() {
    for k in corpus() {
        let routes = k.alexander_routes().unwrap();
        for (name, a) in &routes[1..] {
            assert!(a.unit_equivalent(&routes[0].1), "{}: {name}", k.name);
        }
    }
}

#[test]
fn wirtinger_abelianizes_to_z() {
    for k in corpus() {
        let Some(diagram) = &k.diagram else { continue };
        let p = diagram.wirtinger().unwrap();
        let ab = p.abelianization();
        assert_eq!(ab.invariants, vec![BigInt::zero()], "{}", k.name);
        assert_eq!(ab.knot_eta(), Some(vec![1; p.generator_count()]), "{}", k.name);
    }
}

fn assert_characters_additive(g: &LinkedAbelianGroup) {
    let d = *g.orders().iter().max().unwrap_or(&1);
    let elements = g.elements();
    assert!(elements.len() <= 100);
    let chars: Vec<Character> = elements
        .iter()
        .map(|h| character_from_element(g, h, d).unwrap())
        .collect();
    for (i, h1) in elements.iter().enumerate() {
        for (j, h2) in elements.iter().enumerate() {
            let sum = character_from_element(g, &g.add(h1, h2), d).unwrap();
            for x in &elements {
                assert_eq!(sum.eval(x), (chars[i].eval(x) + chars[j].eval(x)) % d);
            }
        }
    }
}

#[test]
fn characters_are_additive_on_small_groups() {
    for n in [3u64, 5, 9, 13, 29] {
        assert_characters_additive(&LinkedAbelianGroup::cyclic(n, 1).unwrap());
    }
    let z5 = LinkedAbelianGroup::cyclic(5, 2).unwrap();
    assert_characters_additive(&z5.orthogonal_sum(&z5));
    let z3 = LinkedAbelianGroup::cyclic(3, 1).unwrap();
    assert_characters_additive(&z3.orthogonal_sum(&LinkedAbelianGroup::cyclic(9, 2).unwrap()));
    for k in 1..=4 {
        let g = linking_form(&SeifertMatrix::twist_knot(k)).unwrap().group;
        assert_characters_additive(&g);
    }
}

#[test]
fn twisted_columns_agree() {
    for (name, d) in [("8_13.json", 29u64), ("T_3.json", 13), ("trefoil.json", 3)] {
        let p = record(name).group_presentation().unwrap();
        let chi = Character::new(d, vec![1]).unwrap();
        let base = twisted_alexander(&p, 2, &chi).unwrap();
        let cover = cyclic_cover_presentation(&p, 2).unwrap();
        for (j, &e) in cover.eta.iter().enumerate() {
            if e != 0 {
                let other = twisted_alexander_with_column(&p, 2, &chi, Some(j)).unwrap();
                assert_eq!(other.value, base.value, "{name} column {j}");
            }
        }
    }
}

#[test]
fn galois_equivariance_on_t3() {
    let p = record("T_3.json").group_presentation().unwrap();
    let base = twisted_alexander(&p, 2, &Character::new(13, vec![1]).unwrap()).unwrap();
    for s in 1..13 {
        let direct = twisted_alexander(&p, 2, &Character::new(13, vec![s]).unwrap()).unwrap();
        assert!(direct.value.unit_equivalent(&galois_twist(&base, s).unwrap().value), "s = {s}");
    }
}

#[test]
fn trivial_character_gives_the_cover_alexander_polynomial() {
    let q = CyclotomicField::rationals();
    for k in corpus().iter().filter(|k| k.has_group() && k.name != "unknot") {
        let p = k.group_presentation().unwrap();
        for n in [2usize, 3] {
            let cover = cyclic_cover_presentation(&p, n).unwrap();
            let rank = cover.branched_homology().invariants.len();
            let tw = twisted_alexander(&p, n, &Character::trivial(1, rank)).unwrap();
            let oracle = alexander_from_presentation(&cover.presentation).unwrap();
            assert!(tw.value.unit_equivalent(&oracle.embed_rational(&q).unwrap()), "{} n={n}", k.name);
        }
    }
}

#[test]
fn twisted_polynomials_are_deterministic() {
    let p = record("8_13.json").group_presentation().unwrap();
    let chi = Character::new(29, vec![1]).unwrap();
    let a = twisted_alexander(&p, 2, &chi).unwrap();
    let b = twisted_alexander(&p, 2, &chi).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.value.to_string(), b.value.to_string());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn two_bridge_diagrams_match_their_presentations(cf in prop::collection::vec(1u64..4, 1..5)) {
        let (pp, qq) = fraction_of(&cf);
        prop_assume!(pp % 2 == 1 && pp >= 3);
        let diagram = four_plat(&cf).unwrap();
        let wirtinger = diagram.wirtinger().unwrap();
        prop_assert_eq!(wirtinger.abelianization().invariants, vec![BigInt::zero()]);
        let from_diagram = alexander_from_presentation(&wirtinger).unwrap();
        let from_fraction = alexander_from_presentation(&two_bridge_presentation(pp, qq).unwrap()).unwrap();
        prop_assert!(from_diagram.unit_equivalent(&from_fraction));
        prop_assert_eq!(determinant(&from_diagram), BigInt::from(pp));
        let at_one = from_diagram.eval(&Cyclotomic::one(from_diagram.field()));
        prop_assert!(at_one.as_rational().unwrap().abs().is_one());
    }
}
