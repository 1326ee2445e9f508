use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use regcross::geometry::{count_crossings_geometric, segments_cross, Point};
use regcross::io::{parse_drawing, write_drawing};
use regcross::search::random_drawing;

fn small_point() -> impl Strategy<Value = Point> {
    (-50i64..50, -50i64..50).prop_map(|(x, y)| Point::from_ints(x, y))
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

proptest! {
    #[test]
    fn crossing_is_symmetric(a in small_point(), b in small_point(), c in small_point(), d in small_point()) {
        let r = segments_cross(&a, &b, &c, &d);
        if let Ok(x) = r {
            prop_assert_eq!(segments_cross(&c, &d, &a, &b).unwrap(), x);
            prop_assert_eq!(segments_cross(&b, &a, &d, &c).unwrap(), x);
        } else {
            prop_assert!(segments_cross(&c, &d, &a, &b).is_err());
        }
    }

    #[test]
    fn affine_maps_preserve_counts(
        seed in any::<u64>(),
        n in 4usize..9,
        m in prop::array::uniform4(-6i64..7),
        t in prop::array::uniform2(-20i64..20),
        den in 1i64..5,
    ) {
        prop_assume!(m[0] * m[3] != m[1] * m[2] * den * den);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = if n % 2 == 1 { 2 + 2 * (seed as usize % ((n - 1) / 2)) } else { 2 + seed as usize % (n - 2) };
        let drawing = random_drawing(n, d, &mut rng).unwrap();
        let a = [[rat(m[0], den), rat(m[1], 1)], [rat(m[2], 1), rat(m[3], den)]];
        let mapped = drawing.map_affine(a, [rat(t[0], 3), rat(t[1], 1)]).unwrap();
        let before = count_crossings_geometric(&drawing).unwrap();
        let after = count_crossings_geometric(&mapped).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn crossings_plus_noncrossings_is_all_pairs(seed in any::<u64>(), n in 4usize..11) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = if n % 2 == 1 { 2 * (1 + seed as usize % ((n - 1) / 2)) } else { 2 + seed as usize % (n - 2) };
        let drawing = random_drawing(n, d, &mut rng).unwrap();
        let r = count_crossings_geometric(&drawing).unwrap();
        prop_assert_eq!(r.total + r.non_crossing, r.nonadjacent_pairs);
        prop_assert_eq!(r.per_edge.iter().sum::<u64>(), 2 * r.total);
    }

    #[test]
    fn drawing_text_round_trip(seed in any::<u64>(), n in 4usize..10, den in 1i64..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = if n % 2 == 1 { 2 } else { 3 };
        let drawing = random_drawing(n, d, &mut rng).unwrap();
        let scale = [[rat(1, den), rat(0, 1)], [rat(0, 1), rat(2, den)]];
        let drawing = drawing.map_affine(scale, [rat(-1, 7), rat(0, 1)]).unwrap();
        let back = parse_drawing(&write_drawing(&drawing, None)).unwrap();
        prop_assert_eq!(back.positions(), drawing.positions());
        prop_assert_eq!(back.graph(), drawing.graph());
    }
}
