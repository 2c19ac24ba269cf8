//! Property tests for the path geometry on exact rational coordinates.

use cyd_core::diagram::{Diagram, DirectedPath};
use cyd_core::simplex::{affine_to_cartesian, cartesian_to_affine};
use num::{BigInt, BigRational};
use proptest::prelude::*;

fn ratio(num: u32, den: u32) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Sorted rational coordinates below a limit, plus the limit itself.
fn coords(n: usize) -> impl Strategy<Value = (BigRational, Vec<BigRational>)> {
    (1u32..=64, proptest::collection::vec(0u32..=16, n))
        .prop_map(|(limit_num, nums)| {
            let limit = ratio(limit_num, 8);
            let mut nums = nums;
            nums.sort_unstable();
            let vals = nums.iter().map(|&v| &limit * ratio(v, 16)).collect();
            (limit, vals)
        })
}

fn path(blocks: usize) -> impl Strategy<Value = DirectedPath<BigRational>> {
    (coords(blocks - 1), coords(blocks - 1)).prop_map(|((x, xs), (y, ys))| {
        DirectedPath::new(x, y, xs, ys).expect("sorted coordinates are valid")
    })
}

fn any_path() -> impl Strategy<Value = DirectedPath<BigRational>> {
    (1usize..=6).prop_flat_map(path)
}

proptest! {
    #[test]
    fn points_round_trip(p in any_path()) {
        let back = DirectedPath::from_points(&p.points()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn dual_is_an_involution_preserving_area(p in any_path()) {
        let d = p.dual();
        prop_assert_eq!(d.dual(), p.clone());
        prop_assert_eq!(d.area(), p.area());
        prop_assert_eq!(d.blocks(), p.blocks());
    }

    #[test]
    fn tessellations_agree_exactly(p in any_path()) {
        prop_assert_eq!(p.area(), p.area_vertical());
    }

    #[test]
    fn concat_adds_areas_with_cross_term(p in any_path(), q in any_path()) {
        let cat = p.concat(&q);
        let cross = p.width().clone() * q.height().clone();
        prop_assert_eq!(cat.area(), p.area() + q.area() + cross);
        prop_assert_eq!(cat.blocks(), p.blocks() + q.blocks());
    }

    #[test]
    fn concat_is_associative(p in any_path(), q in any_path(), s in any_path()) {
        prop_assert_eq!(p.concat(&q).concat(&s), p.concat(&q.concat(&s)));
    }

    #[test]
    fn diamond_is_a_unit(p in any_path()) {
        let d = Diagram::Path(p);
        prop_assert_eq!(Diagram::Diamond.concat(&d), d.clone());
        prop_assert_eq!(d.concat(&Diagram::Diamond), d);
    }

    #[test]
    fn canonicalize_is_idempotent_and_area_preserving(p in any_path()) {
        let c = p.canonicalize();
        prop_assert_eq!(c.area(), p.area());
        prop_assert_eq!(c.canonicalize(), c.clone());
        // canonical forms compare equal to the original both ways
        prop_assert!(c.leq(&p) && p.leq(&c));
    }

    #[test]
    fn stair_reflection_is_an_involution(p in any_path()) {
        let stair = p.stair_points();
        prop_assert_eq!(stair.reflect_y(p.height().clone()), p.points());
    }

    #[test]
    fn leq_is_reflexive_and_bounds_area(p in any_path()) {
        prop_assert!(p.leq(&p));
        // growing the height keeps the diagram comparable
        let taller = DirectedPath::new(
            p.width().clone(),
            p.height().clone() + ratio(1, 2),
            p.xs().to_vec(),
            p.ys().to_vec(),
        ).unwrap();
        prop_assert!(p.leq(&taller));
        prop_assert!(p.area() <= taller.area());
    }
}

proptest! {
    #[test]
    fn affine_cartesian_round_trip(z in proptest::collection::vec(0.0f64..4.0, 1..8)) {
        let (xs, total) = affine_to_cartesian(&z).unwrap();
        prop_assert!(xs.windows(2).all(|w| w[0] <= w[1]));
        let back = cartesian_to_affine(&xs, total).unwrap();
        prop_assert_eq!(back.len(), z.len());
        for (a, b) in back.iter().zip(&z) {
            prop_assert!((a - b).abs() <= 1e-12 * (1.0 + b.abs()));
        }
    }
}
