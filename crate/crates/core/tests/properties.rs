use derangement_core::algebra::{bareiss_rank, evaluated_rank, q_binomial, sign_on_q_gt_1};
use derangement_core::partition::{all_partitions_up_to, hstrip_minus, hstrip_plus, partitions_of, Partition};
use derangement_core::{IntPoly, SignVerdict};
use num_rational::BigRational;
use proptest::prelude::*;

fn partition_counts(n: usize) -> Vec<usize> {
    let mut p = vec![0usize; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] += p[m - part];
        }
    }
    p
}

/// `λ/μ` is a horizontal strip iff `μ ⊆ λ` and no column grows by more
/// than one box.
fn is_hstrip(lambda: &Partition, mu: &Partition) -> bool {
    if !lambda.contains(mu) {
        return false;
    }
    let (lc, mc) = (lambda.conjugate(), mu.conjugate());
    (1..=lc.len()).all(|j| lc.part(j) - mc.part(j) <= 1)
}

fn partition_strategy(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let ps = partitions_of(n);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

fn poly_strategy() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..=20, 0..8).prop_map(|c| IntPoly::from_i64s(&c))
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn partition_numbers() {
    let want = partition_counts(10);
    assert_eq!(want, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    for (m, &c) in want.iter().enumerate() {
        assert_eq!(partitions_of(m).len(), c);
    }
    for n in 0..=10 {
        assert_eq!(all_partitions_up_to(n).len(), want[..=n].iter().sum::<usize>());
    }
}

#[test]
fn canonical_order_is_closed() {
    for n in 0..=10 {
        let ls = all_partitions_up_to(n);
        assert!(ls.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(ls[0], Partition::row(n));
        assert_eq!(ls.last(), Some(&Partition::empty()));
        for l in &ls {
            assert!(ls.binary_search(&l.conjugate()).is_ok());
            assert_eq!(l.conjugate().conjugate(), *l);
        }
    }
}

proptest! {
    #[test]
    fn q_pascal(n in 1usize..=15, k in 0isize..=16) {
        let lhs = q_binomial(n, k);
        let rhs = q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k.max(0) as usize);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn q_binomial_symmetry(n in 0usize..=15, k in 0usize..=15) {
        prop_assume!(k <= n);
        prop_assert_eq!(q_binomial(n, k as isize), q_binomial(n, (n - k) as isize));
    }

    #[test]
    fn sign_agrees_with_evaluation(p in poly_strategy()) {
        let points = [rat(3, 2), rat(2, 1), rat(3, 1), rat(10, 1)];
        let signs: Vec<i8> = points.iter().map(|x| p.sign_at(x)).collect();
        match sign_on_q_gt_1(&p) {
            SignVerdict::ZeroEverywhere => prop_assert!(p.is_zero()),
            SignVerdict::PositiveOnQgt1 => prop_assert!(signs.iter().all(|&s| s > 0)),
            SignVerdict::NonNegativeOnQgt1 => prop_assert!(signs.iter().all(|&s| s >= 0)),
            SignVerdict::NegativeSomewhere(x) => {
                prop_assert!(x > rat(1, 1));
                prop_assert!(p.sign_at(&x) < 0);
            }
            SignVerdict::Undetermined => prop_assert!(false, "undetermined for {}", p),
        }
        if signs.iter().any(|&s| s < 0) {
            let negative = matches!(sign_on_q_gt_1(&p), SignVerdict::NegativeSomewhere(_));
            prop_assert!(negative);
        }
    }

    #[test]
    fn squared_polys_are_nonnegative(p in poly_strategy()) {
        let sq = &p * &p;
        prop_assert!(sign_on_q_gt_1(&sq).is_nonnegative());
    }

    #[test]
    fn bareiss_matches_generic_rank(
        rows in prop::collection::vec(prop::collection::vec(prop::collection::vec(-3i64..=3, 0..3), 4), 1..5),
        dup in any::<bool>(),
    ) {
        let mut m: Vec<Vec<IntPoly>> = rows
            .iter()
            .map(|r| r.iter().map(|c| IntPoly::from_i64s(c)).collect())
            .collect();
        if dup {
            let extra: Vec<IntPoly> = m[0].iter().map(|x| x.shift(1) + x.clone()).collect();
            m.push(extra);
        }
        let r = bareiss_rank(&m);
        // Minors have degree <= 2 * 5, so 11 sample points see every nonzero one.
        let generic = (2..=12).map(|x| evaluated_rank(&m, &rat(x, 1))).max().unwrap();
        prop_assert_eq!(r, generic);
        prop_assert!(r <= m.len().min(4));
    }

    #[test]
    fn hstrip_reciprocity(lambda in partition_strategy(8), m in 0usize..=8) {
        let minus = hstrip_minus(&lambda, m);
        for mu in &minus {
            prop_assert!(is_hstrip(&lambda, mu));
            prop_assert_eq!(mu.size() + m, lambda.size());
            prop_assert!(hstrip_plus(mu, m, 8).contains(&lambda));
        }
        let want: Vec<Partition> = all_partitions_up_to(8)
            .into_iter()
            .filter(|mu| mu.size() + m == lambda.size() && is_hstrip(&lambda, mu))
            .collect();
        prop_assert_eq!(minus.len(), want.len());
        if lambda.size() + m <= 8 {
            for nu in hstrip_plus(&lambda, m, 8) {
                prop_assert!(is_hstrip(&nu, &lambda));
            }
        }
    }
}
