use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use burnside_core::induced::{lift_map, transfer_matrix, transfer_parks_trivial};
use burnside_core::json::table_for_spec;
use burnside_core::partitions::enumerate_parts;
use burnside_core::verify::trivial_table;
use burnside_core::wreath_power::{parks_char, power_op};
use burnside_core::{
    AAElement, BurnsideElement, Caps, ConjugacyClassTable, GroupHom, Level, PermGroup,
};
use std::sync::Arc;

fn subgroup_classes(c: &mut Criterion) {
    let caps = Caps::default();
    let mut group = c.benchmark_group("subgroup classes");
    for spec in ["S3", "D4", "A4", "S4"] {
        group.bench_with_input(BenchmarkId::from_parameter(spec), spec, |b, spec| {
            b.iter(|| {
                let g = Arc::new(PermGroup::from_spec(spec, &caps).unwrap());
                black_box(ConjugacyClassTable::new(g, &caps).unwrap().len())
            })
        });
    }
    group.finish();
}

fn partitions(c: &mut Criterion) {
    let mut group = c.benchmark_group("decorated partitions");
    for n in [4, 6, 8] {
        group.bench_with_input(BenchmarkId::new("4 classes", n), &n, |b, &n| {
            b.iter(|| black_box(enumerate_parts(4, n).len()))
        });
    }
    group.finish();
}

fn power_operation(c: &mut Criterion) {
    let caps = Caps::default();
    let t = table_for_spec("S3", &caps).unwrap();
    let x = BurnsideElement::from_coords(t.clone(), &[1, -2, 1, 3]);
    let mut group = c.benchmark_group("power operation S3");
    for n in [2, 4, 6] {
        group.bench_with_input(BenchmarkId::new("formula", n), &n, |b, &n| {
            b.iter(|| black_box(power_op(&x, n).unwrap()))
        });
    }
    let y = BurnsideElement::from_coords(t.clone(), &[1, 1, 0, 1]);
    for n in [2, 3] {
        let lv = Level::new(t.clone(), n, &caps).unwrap();
        group.bench_with_input(BenchmarkId::new("explicit", n), &n, |b, _| {
            b.iter(|| black_box(lv.oracle_power_op(&y).unwrap()))
        });
    }
    group.finish();
}

fn parks(c: &mut Criterion) {
    let caps = Caps::default();
    let t = table_for_spec("S3", &caps).unwrap();
    let e = trivial_table(&caps).unwrap();
    let m = transfer_matrix(
        &GroupHom::to_trivial(t.group().clone(), e.group().clone()),
        &t,
        &e,
        &caps,
    )
    .unwrap();
    let mut group = c.benchmark_group("parks S3");
    for n in [2, 3, 4] {
        let x = AAElement::basis(t.clone(), enumerate_parts(t.len(), n).pop().unwrap());
        group.bench_with_input(BenchmarkId::new("character", n), &n, |b, _| {
            b.iter(|| black_box(parks_char(&x)))
        });
        group.bench_with_input(BenchmarkId::new("lift Tr to e", n), &n, |b, &n| {
            b.iter(|| black_box(lift_map(&m, n)))
        });
        group.bench_with_input(BenchmarkId::new("coefficient Tr to e", n), &n, |b, &n| {
            b.iter(|| black_box(transfer_parks_trivial(&t, &e, n).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    subgroup_classes,
    partitions,
    power_operation,
    parks
);
criterion_main!(benches);
