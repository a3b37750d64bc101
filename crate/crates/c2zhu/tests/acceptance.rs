//! Acceptance suite: one test per exit criterion, each printing a single
//! pass/fail line. Every threshold is exact; there are no tolerances
//! anywhere in this crate.
//!
//! Run with `cargo test -p c2zhu --test acceptance -- --nocapture`.

use c2zhu::formula::{
    b_identity_sides, bijection_check, c2_graded_decomposition, c2_graded_dim, c_dim,
    c_graded_dim, rect_branch, zhu_dim,
};
use c2zhu::oracle::{generate_relations, build_basis, Oracle};
use c2zhu::tensor::{char_decompose, lr_coefficients};
use c2zhu::weights::{gt_branch, partitions_in_box, weyl_dim, GlWeight, Partition};
use num::{BigUint, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// Graded dimensions from the closed formulas vs the brute-force oracle,
/// with the frozen totals for the three pinned instances.
#[test]
fn criterion_1_oracle_vs_formula_dimensions() {
    let pinned: &[((usize, u32), &[u64])] = &[
        ((2, 1), &[1, 3, 1]),
        ((3, 1), &[1, 8, 9, 1]),
        ((4, 1), &[1, 15, 36, 16, 1]),
    ];
    for (n, k) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)] {
        let oracle = Oracle::new(n, k).expect("oracle construction");
        let top = n * k as usize;
        let mut total = BigUint::zero();
        for m in 0..=top {
            let from_oracle = oracle.graded_dim(m).expect("oracle degree analysis");
            let from_formula = c2_graded_dim(n, k, m).expect("formula graded dim");
            assert_eq!(from_oracle, from_formula, "(n,k,m)=({n},{k},{m})");
            total += from_formula;
        }
        assert_eq!(total, zhu_dim(n, k), "total at (n,k)=({n},{k})");
        if let Some((_, dims)) = pinned.iter().find(|(nk, _)| *nk == (n, k)) {
            for (m, &d) in dims.iter().enumerate() {
                assert_eq!(c2_graded_dim(n, k, m).unwrap(), big(d), "pinned ({n},{k},{m})");
            }
        }
    }
    println!("criterion 1 (oracle vs formula graded dimensions): PASS");
}

/// Module-level comparison: peeling the oracle's weight-space character
/// recovers exactly the formula decomposition, degree by degree.
#[test]
fn criterion_2_oracle_vs_formula_modules() {
    for (n, k) in [(2, 1), (2, 2), (3, 1)] {
        let oracle = Oracle::new(n, k).expect("oracle construction");
        for m in 0..=n * k as usize {
            let chi = oracle.character(m).expect("oracle character");
            let from_oracle = char_decompose(&chi).expect("character peeling");
            let from_formula = c2_graded_decomposition(n, k, m).expect("formula decomposition");
            assert_eq!(from_oracle, from_formula, "(n,k,m)=({n},{k},{m})");
        }
    }
    println!("criterion 2 (module-level oracle vs formula decompositions): PASS");
}

/// The graded dimensions sum to the Zhu-algebra dimension.
#[test]
fn criterion_3_graded_sum_equals_zhu_dim() {
    for n in 2..=5usize {
        for k in 0..=4u32 {
            let total: BigUint = (0..=n * k as usize)
                .map(|m| c2_graded_dim(n, k, m).expect("graded dim"))
                .sum();
            assert_eq!(total, zhu_dim(n, k), "(n,k)=({n},{k})");
        }
    }
    println!("criterion 3 (graded sum equals Zhu dimension): PASS");
}

/// The box-truncated sum rule and its per-degree recursion.
#[test]
fn criterion_4_box_sum_rule_and_recursion() {
    for n in 2..=5usize {
        for k in 0..=5u32 {
            let level_sum: BigUint = (0..=k).map(|j| zhu_dim(n, j)).sum();
            assert_eq!(c_dim(n, k), level_sum, "(n,k)=({n},{k})");
            for m in 0..=n * k as usize {
                let direct = c_graded_dim(n, k, m);
                let recursive: BigUint = (0..=m.min(k as usize))
                    .map(|i| c2_graded_dim(n, k - i as u32, m - i).expect("graded dim"))
                    .sum();
                assert_eq!(direct, recursive, "(n,k,m)=({n},{k},{m})");
            }
        }
    }
    println!("criterion 4 (box sum rule and per-degree recursion): PASS");
}

/// The dual-side counting identity, both sides from disjoint code paths,
/// plus the explicit parameter-set bijection.
#[test]
fn criterion_5_dual_identity_and_bijection() {
    for n in 2..=5usize {
        for k in 0..=4u32 {
            let (lhs, rhs) = b_identity_sides(n, k);
            assert_eq!(lhs, rhs, "sides at (n,k)=({n},{k})");
            assert!(bijection_check(n, k), "bijection at (n,k)=({n},{k})");
        }
    }
    println!("criterion 5 (dual identity and parameter bijection): PASS");
}

/// The relation module has the dimension of the irreducible with highest
/// weight (k+1)θ; three pinned values plus the internal closure check.
#[test]
fn criterion_6_relation_module_dimensions() {
    let pinned = [((2usize, 1u32), 5usize), ((3, 1), 27), ((3, 2), 64)];
    for ((n, k), expected) in pinned {
        let basis = build_basis(n);
        let rel = generate_relations(&basis, k).expect("relation closure");
        assert_eq!(rel.dim(), expected, "(n,k)=({n},{k})");
    }
    // the closure check itself runs on every construction
    for (n, k) in [(2, 0), (2, 2), (2, 3), (4, 0), (4, 1)] {
        let basis = build_basis(n);
        generate_relations(&basis, k).expect("relation closure");
    }
    println!("criterion 6 (relation module dimensions): PASS");
}

/// Branching dimension sums, exhaustively on the stated ranges, and the
/// randomized LR symmetry/bilinearity suite with a fixed seed.
#[test]
fn criterion_7_branching_and_lr_suite() {
    for n in 2..=5usize {
        for size in 0..=8u64 {
            for p in partitions_in_box(n, 8, size) {
                let w = GlWeight::new(n, p).unwrap();
                let total: BigUint = gt_branch(&w).iter().map(weyl_dim).sum();
                assert_eq!(total, weyl_dim(&w), "branch sum for {w} at rank {n}");
            }
        }
    }
    for big_rank in 2..=6usize {
        for i in 1..big_rank {
            for k in 0..=4u32 {
                // the dimension-sum assertion runs inside rect_branch
                let _ = rect_branch(big_rank, i, k);
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(20_106);
    let random_partition = |rng: &mut StdRng, max_parts: usize, max_part: u32| {
        let mut v: Vec<u32> = (0..rng.gen_range(0..=max_parts))
            .map(|_| rng.gen_range(0..=max_part))
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    };
    for instance in 0..1000 {
        let n = rng.gen_range(2..=4usize);
        let a = random_partition(&mut rng, n, 4);
        let b = random_partition(&mut rng, n, 4);
        let ab = lr_coefficients(&a, &b, n);
        let ba = lr_coefficients(&b, &a, n);
        assert_eq!(ab, ba, "symmetry, instance {instance}: n={n} λ={a} μ={b}");
        let glw = |p: &Partition| GlWeight::new(n, p.clone()).unwrap();
        let total: BigUint = ab
            .iter()
            .map(|(nu, &c)| BigUint::from(c) * weyl_dim(&glw(nu)))
            .sum();
        assert_eq!(
            total,
            weyl_dim(&glw(&a)) * weyl_dim(&glw(&b)),
            "bilinearity, instance {instance}: n={n} λ={a} μ={b}"
        );
    }
    println!("criterion 7 (branching sums and randomized LR suite): PASS");
}

/// Grothendieck-group nonnegativity: no negative dimension and no negative
/// multiplicity anywhere on the tested grid.
#[test]
fn criterion_8_nonnegativity() {
    for n in 2..=5usize {
        for k in 0..=4u32 {
            for m in 0..=n * k as usize + 1 {
                let d = c2_graded_dim(n, k, m);
                assert!(d.is_ok(), "negative dimension at ({n},{k},{m}): {d:?}");
            }
        }
    }
    for n in 2..=4usize {
        for k in 0..=3u32 {
            for m in 0..=n * k as usize + 1 {
                let d = c2_graded_decomposition(n, k, m);
                assert!(d.is_ok(), "negative multiplicity at ({n},{k},{m}): {d:?}");
                assert!(d.unwrap().is_nonnegative());
            }
        }
    }
    println!("criterion 8 (Grothendieck-group nonnegativity): PASS");
}
