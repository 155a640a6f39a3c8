use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hskein::intersect::lookup;
use hskein::present::{assemble_presentation, Bounds, Mode};
use hskein::wrap::skein_closure;
use hskein::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn closure(c: &mut Criterion) {
    let m = lookup("f2xi").unwrap();
    let seed = m.wrap("<x1,x2,x3,x4>").unwrap();
    let mut g = c.benchmark_group("skein_closure/f2xi");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| skein_closure([black_box(seed.clone())], &m.pi1, 1, exec).members.len())
        });
    }
    g.finish();
}

fn presentation(c: &mut Criterion) {
    let m = lookup("t3").unwrap();
    let seeds: Vec<_> = ["<b1,b2,b3,b1*b2>", "<b1,b1,b2,b3^-1>"]
        .iter()
        .map(|s| m.wrap(s).unwrap())
        .collect();
    let mut g = c.benchmark_group("assemble_presentation/t3");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                assemble_presentation(&m, black_box(&seeds), Mode::Ru, Bounds::default(), exec)
                    .unwrap()
                    .rows
                    .len()
            })
        });
    }
    g.finish();
}

criterion_group!(benches, closure, presentation);
criterion_main!(benches);
