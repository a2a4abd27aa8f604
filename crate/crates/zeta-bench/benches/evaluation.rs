use criterion::{black_box, criterion_group, criterion_main, Criterion};
use zeta_core::{xi, zeros, zeta_em, Complex64, QuadratureConfig};

fn bench_euler_maclaurin(c: &mut Criterion) {
    let plain = Complex64::new(2.0, 0.0);
    let critical = Complex64::new(0.5, 14.134725);
    c.bench_function("euler_maclaurin_s2", |b| {
        b.iter(|| zeta_em::euler_maclaurin_auto(black_box(plain)))
    });
    c.bench_function("euler_maclaurin_critical", |b| {
        b.iter(|| zeta_em::euler_maclaurin_auto(black_box(critical)))
    });
}

fn bench_integral_route(c: &mut Criterion) {
    let cfg = QuadratureConfig::default();
    let critical = Complex64::new(0.5, 14.134725);
    let strip = Complex64::new(0.25, 10.0);
    let mut group = c.benchmark_group("integral_route");
    group.sample_size(20);
    group.bench_function("completed_zeta_critical", |b| {
        b.iter(|| xi::completed_zeta(black_box(critical), &cfg))
    });
    group.bench_function("completed_zeta_strip", |b| {
        b.iter(|| xi::completed_zeta(black_box(strip), &cfg))
    });
    group.bench_function("critical_line_equation", |b| {
        b.iter(|| zeros::critical_line_equation(black_box(14.0), &cfg))
    });
    group.finish();
}

criterion_group!(evaluation, bench_euler_maclaurin, bench_integral_route);
criterion_main!(evaluation);
