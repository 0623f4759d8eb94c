mod common;

use std::collections::BTreeSet;

use common::*;
use rand::Rng;
use splitcover::algebra::{
    algebraic_optimal_size, buchberger_feasible, encode_ideal, enumerate_roots,
    multicoloring_to_covering, AlgebraLimits, AlgebraicMethod, BoolMonomial, BoolPoly,
    GroebnerOutcome, VarId,
};
use splitcover::experiments::{medical_instance, small_example_instance};
use splitcover::{heuristic_cover, optimal_cover, Covering, SolveLimits};

fn cov(sets: &[&[usize]]) -> Covering {
    sets.iter().map(|s| set(s)).collect()
}

#[test]
fn partition_search_matches_exhaustive_oracle() {
    let mut rng = rng(1);
    for _ in 0..400 {
        let n = rng.gen_range(2..=5);
        let inst = random_feasible(&mut rng, n);
        let exact = optimal_cover(&inst, &SolveLimits::default()).unwrap();
        assert_eq!(Some(exact.optimal_size), naive_optimum(&inst), "{inst:?}");
        assert!(inst.is_covering(&exact.one_cover));
    }
}

#[test]
fn algebraic_size_matches_partition_search() {
    let mut rng = rng(2);
    for _ in 0..100 {
        let n = rng.gen_range(2..=4);
        let inst = random_feasible(&mut rng, n);
        let exact = optimal_cover(&inst, &SolveLimits::default())
            .unwrap()
            .optimal_size;
        if exact * n > 16 {
            continue;
        }
        for method in [
            AlgebraicMethod::Buchberger,
            AlgebraicMethod::RootEnumeration,
        ] {
            let alg = algebraic_optimal_size(&inst, &AlgebraLimits::default(), method).unwrap();
            assert_eq!(alg.k, exact, "{method:?} on {inst:?}");
        }
    }
}

#[test]
fn roots_are_exactly_the_covering_colorings() {
    let mut rng = rng(3);
    for _ in 0..60 {
        let n = rng.gen_range(2..=4);
        let k = rng.gen_range(1..=3);
        let inst = random_feasible(&mut rng, n);
        let gens = encode_ideal(&inst, k).unwrap();
        let got: Vec<u128> = enumerate_roots(&gens, &AlgebraLimits::default())
            .unwrap()
            .iter()
            .map(|a| a.bits)
            .collect();
        assert_eq!(got, brute_force_roots(&inst, k), "{inst:?} k={k}");
    }
}

#[test]
fn generators_vanish_iff_classes_cover() {
    let mut rng = rng(4);
    for _ in 0..40 {
        let n = rng.gen_range(2..=4);
        let k = rng.gen_range(1..=3);
        let inst = random_feasible(&mut rng, n);
        let gens = encode_ideal(&inst, k).unwrap();
        for bits in 0u128..1 << (n * k) {
            let vanish = gens.all().all(|p| !p.eval(bits));
            assert_eq!(vanish, classes_cover(&inst, &classes_of(bits, n, k)));
        }
    }
}

#[test]
fn small_example_roots_at_two_colors() {
    let inst = small_example_instance();
    let gens = encode_ideal(&inst, 2).unwrap();
    let roots = enumerate_roots(&gens, &AlgebraLimits::default()).unwrap();
    // independent count straight from the covering conditions over all 2^8
    // assignments
    assert_eq!(roots.len(), brute_force_roots(&inst, 2).len());
    assert_eq!(roots.len(), 18);

    let induced: BTreeSet<Covering> = roots
        .iter()
        .map(|r| multicoloring_to_covering(&r.to_multicoloring()).canonical())
        .collect();
    assert_eq!(induced.len(), 9);
    let printed = [
        cov(&[&[1, 3], &[0, 2, 3]]),
        cov(&[&[1, 2, 3], &[0, 3]]),
        cov(&[&[1, 2], &[0, 1, 3]]),
        cov(&[&[2, 3], &[0, 1, 3]]),
        cov(&[&[1, 2, 3], &[0, 1, 3]]),
        cov(&[&[2], &[0, 1, 3]]),
    ];
    for c in &printed {
        assert!(induced.contains(&c.canonical()), "{c} missing");
    }
    // a root the printed list leaves out
    assert!(induced.contains(&cov(&[&[1, 2, 3], &[0, 2, 3]]).canonical()));

    let one = encode_ideal(&inst, 1).unwrap();
    assert!(enumerate_roots(&one, &AlgebraLimits::default())
        .unwrap()
        .is_empty());
    assert_eq!(
        buchberger_feasible(&one, &AlgebraLimits::default()),
        GroebnerOutcome::Infeasible
    );
    assert!(matches!(
        buchberger_feasible(&gens, &AlgebraLimits::default()),
        GroebnerOutcome::Feasible(_)
    ));
}

#[test]
fn small_example_printed_generators() {
    let inst = small_example_instance();
    let gens = encode_ideal(&inst, 2).unwrap();
    let layout = gens.layout;
    // attribute labels 1..4 map to 0..3
    let x = |i: usize, j: usize| {
        BoolPoly::from(layout.monomial([VarId {
            attribute: i - 1,
            color: j,
        }]))
    };
    let m = |vars: &[(usize, usize)]| {
        BoolPoly::from(layout.monomial(vars.iter().map(|&(i, j)| VarId {
            attribute: i - 1,
            color: j,
        })))
    };
    let one = BoolPoly::one();

    let g1 = [m(&[(1, 1), (2, 1), (3, 1)]), m(&[(1, 2), (2, 2), (3, 2)])];
    assert_eq!(gens.g1, g1);

    let printed_first = &(&(&m(&[(2, 1), (4, 1), (2, 2), (4, 2)]) + &m(&[(2, 1), (4, 2)]))
        + &m(&[(2, 2), (4, 1)]))
        + &one;
    let printed_second = &(&(&m(&[(1, 1), (4, 1), (1, 2), (4, 2)]) + &m(&[(1, 1), (4, 1)]))
        + &m(&[(1, 2), (4, 2)]))
        + &one;
    let printed_third = &(&(&m(&[(3, 1), (3, 2)]) + &x(3, 1)) + &x(3, 2)) + &one;

    // A = {14, 24, 3}
    assert_eq!(gens.g2[0], printed_second);
    assert_eq!(gens.g2[2], printed_third);
    // the first printed element mixes colors in its middle terms; it differs
    // from the generator for {2,4} at some assignment
    assert_ne!(gens.g2[1], printed_first);
    assert!((0u128..256).any(|bits| gens.g2[1].eval(bits) != printed_first.eval(bits)));
    let unmixed = &(&(&m(&[(2, 1), (4, 1), (2, 2), (4, 2)]) + &m(&[(2, 1), (4, 1)]))
        + &m(&[(2, 2), (4, 2)]))
        + &one;
    assert_eq!(gens.g2[1], unmixed);
    assert!(BoolMonomial::ONE < gens.g2[1].leading().unwrap());
}

#[test]
fn medical_rows_exact_and_heuristic_sizes() {
    let optimal = [3, 2, 2, 3, 2];
    let heuristic = [3, 2, 3, 3, 2];
    for row in 1..=5 {
        let inst = medical_instance(row).unwrap();
        let r = optimal_cover(&inst, &SolveLimits::default()).unwrap();
        assert_eq!(r.optimal_size, optimal[row - 1], "row {row}");
        assert_eq!(
            naive_optimum(&inst.normalize()),
            Some(r.optimal_size),
            "row {row}"
        );
        let (h, _) = heuristic_cover(&inst).unwrap();
        assert_eq!(h.len(), heuristic[row - 1], "row {row}");
    }
}
