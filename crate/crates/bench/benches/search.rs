use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use kconn_core::connectivity::vertex_connectivity;
use kconn_core::constructions::{construct_case2, ConstructionParams, Family};
use kconn_core::generate::{gen_colouring, gen_digraph, Distribution};
use kconn_core::proof::{case2_strategy, digraph_colouring, StrategyOptions};
use kconn_core::{arrows, Graph, Ratio};

fn arrowing(c: &mut Criterion) {
    let mut g = c.benchmark_group("arrows");
    for (name, pattern, n) in
        [("K3/6", Graph::complete(3), 6), ("C4/6", Graph::cycle(4), 6), ("K1,3/6", Graph::star(3), 6)]
    {
        g.bench_function(name, |b| b.iter(|| arrows(black_box(n), &pattern, &pattern).unwrap()));
    }
    g.sample_size(10);
    let k4 = Graph::complete(4);
    g.bench_function("K4/8 witness", |b| b.iter(|| arrows(8, &k4, &k4).unwrap()));
    g.finish();
}

fn connectivity(c: &mut Criterion) {
    let mut g = c.benchmark_group("vertex_connectivity");
    for n in [20, 40, 80] {
        let p = ConstructionParams::new(n, n / 2, 3, Family::Clique).unwrap();
        let graph = construct_case2(&p).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &graph, |b, graph| {
            b.iter(|| vertex_connectivity(graph).unwrap())
        });
    }
    g.finish();
}

fn strategies(c: &mut Criterion) {
    let mut g = c.benchmark_group("case2_strategy");
    let half = Distribution::Uniform(Ratio::new(1, 2).unwrap());
    let opts = StrategyOptions::case2();
    for n in [100, 400] {
        let col = gen_colouring(n, half, 1).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &col, |b, col| {
            b.iter(|| case2_strategy(col, 7, 3, 2, &opts).unwrap())
        });
    }
    g.finish();

    let d = gen_digraph(500, 5, 1);
    c.bench_function("digraph_colouring/500", |b| b.iter(|| digraph_colouring(black_box(&d))));
}

criterion_group!(benches, arrowing, connectivity, strategies);
criterion_main!(benches);
