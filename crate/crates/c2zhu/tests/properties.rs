//! Property tests for the combinatorial layers: Littlewood-Richardson
//! symmetry and dimension bilinearity, Pieri consistency, duality, and the
//! character round trip.

use c2zhu::tensor::{char_decompose, char_of, lr_coefficients, pieri_row, tensor_sl};
use c2zhu::weights::{
    dual_sl, enumerate_pk, partitions_in_box, sl_dim, weyl_dim, GlWeight, Partition, SlWeight,
};
use c2zhu::IrrDecomposition;
use num::BigUint;
use proptest::prelude::*;

fn partition_in_box(max_parts: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_parts).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).expect("sorted parts form a partition")
    })
}

fn rank_and_two_shapes() -> impl Strategy<Value = (usize, Partition, Partition)> {
    (2usize..=4).prop_flat_map(|n| {
        (Just(n), partition_in_box(n, 4), partition_in_box(n, 4))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lr_is_symmetric_and_bilinear((n, a, b) in rank_and_two_shapes()) {
        let ab = lr_coefficients(&a, &b, n);
        let ba = lr_coefficients(&b, &a, n);
        prop_assert_eq!(&ab, &ba);
        let glw = |p: &Partition| GlWeight::new(n, p.clone()).unwrap();
        let lhs: BigUint = ab
            .iter()
            .map(|(nu, &c)| BigUint::from(c) * weyl_dim(&glw(nu)))
            .sum();
        prop_assert_eq!(lhs, weyl_dim(&glw(&a)) * weyl_dim(&glw(&b)));
    }

    #[test]
    fn pieri_is_the_single_row_lr_product(
        (n, a) in (1usize..=4).prop_flat_map(|n| (Just(n), partition_in_box(n, 4))),
        j in 0u32..=4,
    ) {
        let lr = lr_coefficients(&a, &Partition::new(vec![j]).unwrap(), n);
        let support: Vec<Partition> = lr.keys().cloned().collect();
        prop_assert_eq!(support, pieri_row(&a, j, n));
        prop_assert!(lr.values().all(|&c| c == 1));
    }

    #[test]
    fn tensor_dimension_is_multiplicative((n, a, b) in rank_and_two_shapes()) {
        prop_assume!(a.len() < n && b.len() < n);
        let a = SlWeight::new(n, a).unwrap();
        let b = SlWeight::new(n, b).unwrap();
        let t = tensor_sl(&a, &b);
        prop_assert!(t.is_nonnegative());
        let expected = num::BigInt::from(sl_dim(&a) * sl_dim(&b));
        prop_assert_eq!(t.virtual_dim(), expected);
    }

    #[test]
    fn dual_is_a_dimension_preserving_involution(
        (n, p) in (2usize..=5).prop_flat_map(|n| (Just(n), partition_in_box(n - 1, 5))),
    ) {
        let b = SlWeight::new(n, p).unwrap();
        let d = dual_sl(&b);
        prop_assert_eq!(dual_sl(&d), b.clone());
        prop_assert_eq!(sl_dim(&d), sl_dim(&b));
    }

    #[test]
    fn characters_round_trip(
        (n, mults) in (2usize..=4).prop_flat_map(|n| {
            let pool = enumerate_pk(n, 4).len();
            (Just(n), prop::collection::vec(0i64..=5, pool))
        }),
    ) {
        let pool = enumerate_pk(n, 4);
        let mut d = IrrDecomposition::new(n);
        for (w, &m) in pool.iter().zip(&mults) {
            d.add_weight(w.clone(), m);
        }
        let chi = char_of(&d).unwrap();
        prop_assert_eq!(char_decompose(&chi).unwrap(), d);
    }
}

/// The exhaustive symmetry grid: all pairs with |λ|, |μ| ≤ 6 at ranks up
/// to 4, exact equality of the full coefficient maps.
#[test]
fn lr_symmetry_exhaustive_grid() {
    for n in 2..=4usize {
        let shapes: Vec<Partition> =
            (0..=6u64).flat_map(|s| partitions_in_box(n, 6, s)).collect();
        for a in &shapes {
            for b in &shapes {
                if a <= b {
                    assert_eq!(
                        lr_coefficients(a, b, n),
                        lr_coefficients(b, a, n),
                        "n={n} λ={a} μ={b}"
                    );
                }
            }
        }
    }
}
