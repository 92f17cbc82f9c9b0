use criterion::{criterion_group, criterion_main, Criterion};
use quiver_comb::{
    decompose, enumerate_partitions, equivariant_integral, z_closed, ColorSpec, DimVector,
    Partition,
};

fn bench_decompose(c: &mut Criterion) {
    let y = Partition::new(vec![12, 10, 9, 7, 5, 4, 2, 1]).unwrap();
    c.bench_function("decompose_50_l3", |b| {
        b.iter(|| decompose(std::hint::black_box(&y), 3).unwrap())
    });
}

fn bench_enumerate(c: &mut Criterion) {
    c.bench_function("enumerate_partitions_20", |b| {
        b.iter(|| enumerate_partitions(std::hint::black_box(20)).len())
    });
}

fn bench_integral(c: &mut Criterion) {
    let spec = ColorSpec::new(2, vec![0, 1]).unwrap();
    let v = DimVector(vec![2, 2]);
    c.bench_function("integral_l2_w11_v22", |b| {
        b.iter(|| equivariant_integral(std::hint::black_box(&spec), &v).unwrap())
    });
}

fn bench_series(c: &mut Criterion) {
    c.bench_function("z_closed_l3_q12", |b| {
        b.iter(|| z_closed(3, 0, std::hint::black_box(12)).unwrap())
    });
}

criterion_group!(benches, bench_decompose, bench_enumerate, bench_integral, bench_series);
criterion_main!(benches);
