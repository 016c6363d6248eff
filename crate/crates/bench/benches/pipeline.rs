use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use knotorder_bench::knot;
use knotorder_core::algebra::{det_laurent, Cyclotomic, CyclotomicField, LaurentPoly};
use knotorder_core::knot::Character;
use knotorder_core::lens::{admissible_k, lattice_sigma, sigma_closed};
use knotorder_core::obstruction::order_two_report;
use knotorder_core::twisted::twisted_alexander;

fn twisted(c: &mut Criterion) {
    let p = knot("8_13.json").group_presentation().unwrap();
    let chi = Character::new(29, vec![1]).unwrap();
    c.bench_function("twisted_8_13_chi1", |b| b.iter(|| twisted_alexander(black_box(&p), 2, &chi).unwrap()));
}

fn determinant(c: &mut Criterion) {
    let f = CyclotomicField::new(29).unwrap();
    let n = 6;
    let m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let z = Cyclotomic::zeta_power(&f, (i * n + j) as i64);
                    LaurentPoly::from_terms(&f, [(0, z.clone()), ((i + j) as i64 % 3 - 1, z.conj())])
                })
                .collect()
        })
        .collect();
    c.bench_function("det_laurent_6x6_q_zeta29", |b| b.iter(|| det_laurent(black_box(&m), &f).unwrap()));
}

fn lattice(c: &mut Criterion) {
    let ks = admissible_k(3, 25);
    c.bench_function("lattice_sweep_k3_25", |b| {
        b.iter(|| {
            for &k in &ks {
                for r in 1..4 * k + 1 {
                    black_box(lattice_sigma(k, r).unwrap());
                }
            }
        })
    });
    c.bench_function("closed_sweep_k3_25", |b| {
        b.iter(|| {
            for &k in &ks {
                for r in 1..4 * k + 1 {
                    black_box(sigma_closed(k, r).unwrap());
                }
            }
        })
    });
}

fn order_two(c: &mut Criterion) {
    let k = knot("8_13.json");
    let mut group = c.benchmark_group("order_two");
    group.sample_size(10);
    group.bench_function("8_13", |b| b.iter(|| order_two_report(black_box(&k)).unwrap()));
    group.finish();
}

criterion_group!(benches, twisted, determinant, lattice, order_two);
criterion_main!(benches);
