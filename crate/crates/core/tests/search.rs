use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use regcross::analysis::{coverage_of, noncrossing_accounting, type_profile};
use regcross::constructions::{crossings_convex, ConvexOrder};
use regcross::formulas::{best_known, min_noncrossing_pairs, type_counting_bound};
use regcross::geometry::count_crossings_geometric;
use regcross::search::{
    convex_max, convex_max_with, perturbation_probe, random_drawing, reproduce_table, CellStatus,
    SearchConfig, REFERENCE_TABLE,
};

#[test]
fn workers_do_not_change_the_answer() {
    for (n, d) in [(8, 4), (9, 4), (8, 5)] {
        let runs: Vec<_> = [1, 2, 8]
            .into_iter()
            .map(|workers| {
                convex_max_with(
                    n,
                    d,
                    &SearchConfig {
                        workers,
                        ..SearchConfig::default()
                    },
                )
                .unwrap()
            })
            .collect();
        for r in &runs[1..] {
            assert_eq!(r.max_crossings, runs[0].max_crossings);
            assert_eq!(r.witness, runs[0].witness);
        }
    }
}

#[test]
fn cycle_witnesses() {
    // n = 0 mod 4: only 4-cycles; n = 2 mod 4: 4-cycles and one 6-cycle
    assert_eq!(
        convex_max(8, 2).unwrap().witness.cycle_lengths().unwrap(),
        vec![4, 4]
    );
    assert_eq!(
        convex_max(6, 2).unwrap().witness.cycle_lengths().unwrap(),
        vec![6]
    );
    let long = SearchConfig {
        long_run: true,
        ..SearchConfig::default()
    };
    let ten = convex_max_with(10, 2, &long).unwrap();
    assert_eq!(ten.max_crossings, 32);
    assert_eq!(ten.witness.cycle_lengths().unwrap(), vec![4, 6]);
}

#[test]
fn convex_maxima_reach_known_values() {
    for n in 4..=9usize {
        for d in 2..n {
            if n * d % 2 == 1 {
                continue;
            }
            let r = convex_max(n, d).unwrap();
            let expect = best_known(n, d).unwrap().value();
            assert_eq!(r.max_crossings, expect, "({n}, {d})");
            let c = crossings_convex(&r.witness, &ConvexOrder::identity(n).unwrap()).unwrap();
            assert_eq!(c.total, r.max_crossings);
        }
    }
}

#[test]
fn probes_stay_below_convex_maximum() {
    for (n, d) in [(5, 2), (6, 3), (7, 4), (7, 2)] {
        let cmax = convex_max(n, d).unwrap().max_crossings;
        let p = perturbation_probe(n, d, 2000, 11).unwrap();
        assert!(p.max_crossings <= cmax, "({n}, {d})");
        let w = p.witness_drawing.unwrap();
        assert_eq!(
            count_crossings_geometric(&w).unwrap().total,
            p.max_crossings
        );
    }
}

#[test]
fn random_corpus_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..60 {
        let n = 4 + i % 7;
        let ds: Vec<usize> = (2..n).filter(|d| n * d % 2 == 0).collect();
        let d = ds[i % ds.len()];
        let drawing = random_drawing(n, d, &mut rng).unwrap();
        let p = type_profile(&drawing).unwrap();
        assert!(p.edge_identity_holds() && p.vertex_identities_hold());
        assert!(coverage_of(&p).is_ok());
        let a = noncrossing_accounting(&drawing).unwrap();
        assert!(a.crossing_identity_holds() && a.half_accounting_holds());
        assert!(a.m >= min_noncrossing_pairs(n, d).unwrap());
        assert!(a.crossings <= type_counting_bound(n, d).unwrap());
    }
}

#[test]
fn table_up_to_nine() {
    let t = reproduce_table(9, 9, 0).unwrap();
    for e in &t {
        assert_eq!(e.convex, Some(e.value), "({}, {})", e.n, e.d);
        assert_ne!(e.status, CellStatus::Discrepancy, "({}, {})", e.n, e.d);
    }
    let ten = reproduce_table(10, 0, 0).unwrap();
    let bad: Vec<_> = ten
        .iter()
        .filter(|e| e.status == CellStatus::Discrepancy)
        .collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(
        (bad[0].n, bad[0].d, bad[0].value, bad[0].printed),
        (10, 6, 173, Some(133))
    );
    assert_eq!(
        ten.iter().filter(|e| e.printed.is_some()).count(),
        REFERENCE_TABLE.len()
    );
}
