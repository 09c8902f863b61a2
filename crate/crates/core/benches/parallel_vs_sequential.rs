use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use zeta_exact::numeric::Precision;
use zeta_exact::verify::{run_suite, Suite};
use zeta_exact::ExecMode;

fn suites(c: &mut Criterion) {
    let prec = Precision::digits(20);
    let mut group = c.benchmark_group("verify");
    group.sample_size(10).measurement_time(Duration::from_secs(10));
    for suite in [Suite::ExactCore, Suite::LerchMulti, Suite::Dirichlet] {
        for mode in [ExecMode::Sequential, ExecMode::Parallel] {
            group.bench_with_input(BenchmarkId::new(suite.name(), format!("{mode:?}")), &mode, |b, &mode| {
                b.iter(|| run_suite(suite, prec, mode))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, suites);
criterion_main!(benches);
