use criterion::{black_box, criterion_group, criterion_main, Criterion};
use operadlab_core::cubes::{analyze_counterexample, cell_system, is_feasible, CellMode};
use operadlab_core::kgraph::{enumerate, leq, operad_compose, Variant};
use operadlab_core::topology::{homology, order_complex};
use operadlab_core::verify::poset_homology;
use operadlab_core::Budget;

fn enumeration(c: &mut Criterion) {
    let b = Budget::default();
    c.bench_function("enumerate K_2(4)", |bench| bench.iter(|| enumerate(Variant::K, 2, black_box(4), &b).unwrap()));
    c.bench_function("enumerate Khat_2(3)", |bench| bench.iter(|| enumerate(Variant::KHat, 2, black_box(3), &b).unwrap()));
}

fn order_and_composition(c: &mut Criterion) {
    let b = Budget::default();
    let elems = enumerate(Variant::K, 2, 3, &b).unwrap();
    c.bench_function("leq on all pairs of K_2(3)", |bench| {
        bench.iter(|| elems.iter().flat_map(|x| elems.iter().map(move |y| leq(x, y).unwrap())).filter(|&r| r).count())
    });
    let twos = enumerate(Variant::K, 2, 2, &b).unwrap();
    c.bench_function("compose K_2(3) with three K_2(2)", |bench| {
        bench.iter(|| {
            for g in &elems[..10] {
                black_box(operad_compose(g, &[twos[0].clone(), twos[1].clone(), twos[2].clone()]).unwrap());
            }
        })
    });
}

fn cells(c: &mut Criterion) {
    let b = Budget::default();
    let elems = enumerate(Variant::K, 2, 3, &b).unwrap();
    c.bench_function("Fourier-Motzkin on all cells of K_2(3)", |bench| {
        bench.iter(|| {
            for mu in &elems {
                let sys = cell_system(mu, 2, CellMode::StrictOrderings).unwrap();
                assert!(is_feasible(&sys, &b).unwrap());
            }
        })
    });
    c.bench_function("counterexample analysis", |bench| bench.iter(|| analyze_counterexample(&b).unwrap()));
}

fn topology(c: &mut Criterion) {
    let b = Budget::default();
    let (poset, complex, _) = poset_homology(Variant::K, 2, 3, &b).unwrap();
    c.bench_function("order complex of K_2(3)", |bench| bench.iter(|| order_complex(&poset, &b).unwrap()));
    c.bench_function("homology of K_2(3)", |bench| bench.iter(|| homology(&complex, false, &b).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = enumeration, order_and_composition, cells, topology
}
criterion_main!(benches);
