use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use regcross::constructions::{
    convex_diagonals, convex_drawing, crossings_convex, generalized_star, star_like_construction,
    star_like_even, ConvexOrder, GcdCase,
};
use regcross::formulas::{exact_odd, lower_bound_even, removal_count};
use regcross::geometry::{count_crossings_geometric, validate_general_position};
use regcross::graph::enumerate_labeled_regular;

#[test]
fn stars_match_closed_form() {
    for n in 4..=14usize {
        for d in 2..n {
            if (n + d) % 2 == 0 {
                continue;
            }
            let s = generalized_star(n, d).unwrap();
            assert_eq!(s.graph().d(), d);
            validate_general_position(&s).unwrap();
            let c = count_crossings_geometric(&s).unwrap().total;
            assert_eq!(c, exact_odd(n, d).unwrap(), "({n}, {d})");
        }
    }
}

#[test]
fn star_like_matches_lower_bound() {
    let mut seen = [false; 2];
    for n in (4..=14usize).step_by(2) {
        for d in (2..=n - 2).step_by(2) {
            let s = star_like_construction(n, d).unwrap();
            seen[(s.case == GcdCase::Odd) as usize] = true;
            assert_eq!(s.drawing.graph().d(), d);
            assert_eq!(s.removed.len(), n / 2);
            let c = count_crossings_geometric(&s.drawing).unwrap().total;
            assert_eq!(c, lower_bound_even(n, d).unwrap(), "({n}, {d})");
            assert_eq!(star_like_even(n, d).unwrap(), s.drawing);
        }
    }
    assert_eq!(seen, [true, true]);
    assert_eq!(star_like_construction(8, 2).unwrap().case, GcdCase::Even);
    assert_eq!(star_like_construction(10, 2).unwrap().case, GcdCase::Odd);
}

#[test]
fn removed_edges_form_a_perfect_matching_of_the_parent() {
    for (n, d) in [(8, 4), (10, 6), (12, 4), (14, 2)] {
        let s = star_like_construction(n, d).unwrap();
        let parent = generalized_star(n, d + 1).unwrap();
        let mut covered = vec![0; n];
        for &(u, v) in &s.removed {
            assert!(parent.graph().has_edge(u, v));
            assert!(!s.drawing.graph().has_edge(u, v));
            covered[u] += 1;
            covered[v] += 1;
        }
        assert!(covered.iter().all(|&c| c == 1));
    }
}

/// Deleting the length-k diagonals, `2 <= k < n/2`, from convex K_n without
/// lengths below k loses exactly `n(k-1)(n-2k)` crossings.
#[test]
fn stepwise_deletion_below_half() {
    for n in 4..=12usize {
        for k in 2..=(n - 1) / 2 {
            let with = count_crossings_geometric(&convex_diagonals(n, k..=n / 2).unwrap())
                .unwrap()
                .total;
            let without = count_crossings_geometric(&convex_diagonals(n, k + 1..=n / 2).unwrap())
                .unwrap()
                .total;
            assert_eq!(with - without, removal_count(n, k).unwrap(), "n={n} k={k}");
        }
    }
}

/// At even n the n/2 diameters all cross each other, so removing them loses
/// C(n/2, 2) crossings rather than zero.
#[test]
fn stepwise_deletion_of_diameters() {
    for n in (4..=12usize).step_by(2) {
        let with = count_crossings_geometric(&convex_diagonals(n, n / 2..=n / 2).unwrap())
            .unwrap()
            .total;
        let h = (n / 2) as u64;
        assert_eq!(with, h * (h - 1) / 2);
        assert_eq!(removal_count(n, n / 2).unwrap(), 0);
    }
}

#[test]
fn interleaving_agrees_with_geometry() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (n, d) in [(5, 2), (6, 3), (7, 4), (8, 3), (8, 4), (8, 5)] {
        let graphs: Vec<_> = enumerate_labeled_regular(n, d)
            .unwrap()
            .step_by(97)
            .take(10)
            .collect();
        for g in &graphs {
            for _ in 0..5 {
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(&mut rng);
                let order = ConvexOrder::new(order).unwrap();
                let fast = crossings_convex(g, &order).unwrap();
                let slow = count_crossings_geometric(&convex_drawing(g, &order).unwrap()).unwrap();
                assert_eq!(fast, slow);
            }
        }
    }
}

#[test]
fn convex_count_depends_only_on_cyclic_order() {
    let g = star_like_even(10, 4).unwrap().graph().clone();
    let base: Vec<usize> = vec![3, 1, 4, 0, 5, 9, 2, 6, 8, 7];
    let c0 = crossings_convex(&g, &ConvexOrder::new(base.clone()).unwrap())
        .unwrap()
        .total;
    for shift in 1..10 {
        let mut rot = base.clone();
        rot.rotate_left(shift);
        assert_eq!(
            crossings_convex(&g, &ConvexOrder::new(rot.clone()).unwrap())
                .unwrap()
                .total,
            c0
        );
        rot.reverse();
        assert_eq!(
            crossings_convex(&g, &ConvexOrder::new(rot).unwrap())
                .unwrap()
                .total,
            c0
        );
    }
}

#[test]
fn infeasible_constructions_fail() {
    assert!(generalized_star(8, 4).is_err());
    assert!(generalized_star(7, 3).is_err());
    assert!(star_like_even(9, 4).is_err());
    assert!(star_like_even(8, 3).is_err());
    assert!(star_like_even(8, 8).is_err());
}
