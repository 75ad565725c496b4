use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use toric_core::cluster::{chi2_distance, ContingencyTable, Partition};
use toric_core::lattice::left_multiply;
use toric_core::oracle::check_linear_criterion;
use toric_core::*;

fn matrix(max_k: usize, max_n: usize, max_entry: u64) -> impl Strategy<Value = ModelMatrix> {
    (2..=max_k, 1..=max_n).prop_flat_map(move |(k, n)| {
        prop::collection::vec(prop::collection::vec(0..=max_entry, n), k)
            .prop_map(|rows| ModelMatrix::from_rows(rows).unwrap())
    })
}

/// Matrices with a leading column of ones and at least two more columns,
/// so that a non-constant pair can be merged.
fn mergeable(max_k: usize, max_n: usize) -> impl Strategy<Value = (ModelMatrix, usize, usize)> {
    (2..=max_k, 3..=max_n).prop_flat_map(|(k, n)| {
        (
            prop::collection::vec(prop::collection::vec(0..=2u64, n - 1), k),
            1..n,
            1..n,
        )
            .prop_filter("distinct columns", |(_, a, b)| a != b)
            .prop_map(|(rows, a, b)| {
                let rows = rows
                    .into_iter()
                    .map(|r| std::iter::once(1).chain(r).collect())
                    .collect();
                (ModelMatrix::from_rows(rows).unwrap(), a.min(b), a.max(b))
            })
    })
}

fn binomial(dim: usize) -> impl Strategy<Value = Binomial> {
    (
        prop::collection::vec(0..=2u64, dim),
        prop::collection::vec(0..=2u64, dim),
    )
        .prop_map(|(p, m)| Binomial::new(p, m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kernel_is_annihilated(m in matrix(6, 4, 3)) {
        let l = integer_kernel(&m);
        prop_assert_eq!(l.rank() + rank(&m), m.nrows());
        for u in l.vectors_i64().unwrap() {
            prop_assert!(left_multiply(&u, &m).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn merging_coarsens_the_kernel((m, a, b) in mergeable(6, 5)) {
        let merged = merge_columns(&m, a, b).unwrap();
        prop_assert_eq!(merged.ncols(), m.ncols() - 1);
        prop_assert_eq!(merged.row_sums(), m.row_sums());
        let wide = integer_kernel(&merged);
        for u in integer_kernel(&m).vectors() {
            prop_assert!(wide.contains(u));
        }
        prop_assert!(degrees_of_freedom(&merged) >= degrees_of_freedom(&m));
    }

    #[test]
    fn dedupe_is_idempotent(m in matrix(7, 3, 1)) {
        let (once, groups) = dedupe_rows(&m);
        let (twice, again) = dedupe_rows(&once);
        prop_assert_eq!(&once, &twice);
        prop_assert!(again.iter().all(|g| g.len() == 1));
        prop_assert_eq!(groups.iter().map(Vec::len).sum::<usize>(), m.nrows());
        prop_assert!(kernels_equal(&m, &m).unwrap());
    }

    #[test]
    fn kernel_equality_is_symmetric((m, a, b) in mergeable(5, 5)) {
        let merged = merge_columns(&m, a, b).unwrap();
        prop_assert_eq!(
            kernels_equal(&m, &merged).unwrap(),
            kernels_equal(&merged, &m).unwrap()
        );
        prop_assert_eq!(
            kernels_equal(&m, &merged).unwrap(),
            degrees_of_freedom(&m) == degrees_of_freedom(&merged)
        );
    }

    #[test]
    fn toric_ideal_is_the_kernel(m in matrix(6, 3, 2)) {
        let ideal = toric_ideal(&m, &TermOrder::degrevlex(m.nrows())).unwrap();
        prop_assert!(ideal.groebner().iter().all(|g| MonomialMap::new(&m).annihilates(g)));
        prop_assert!(check_completeness(&ideal, &m, &OracleConfig::with_bound(2)).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent((m, f) in matrix(5, 3, 2).prop_flat_map(|m| {
        let k = m.nrows();
        (Just(m), binomial(k))
    })) {
        let ideal = toric_ideal(&m, &TermOrder::degrevlex(m.nrows())).unwrap();
        let once = normal_form(&f, ideal.groebner(), ideal.order()).unwrap();
        let twice = normal_form(&once, ideal.groebner(), ideal.order()).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(once.is_zero(), ideal.contains(&f).unwrap());
    }

    #[test]
    fn ideal_sum_is_monotone((m, g) in matrix(5, 3, 2).prop_flat_map(|m| {
        let k = m.nrows();
        (Just(m), binomial(k))
    })) {
        let ideal = toric_ideal(&m, &TermOrder::degrevlex(m.nrows())).unwrap();
        let bigger = ideal_sum(&ideal, std::slice::from_ref(&g)).unwrap();
        prop_assert!(bigger.contains_all(ideal.groebner()).unwrap());
        prop_assert!(bigger.contains(&g).unwrap());
    }

    #[test]
    fn reduced_basis_ignores_generator_order(
        gens in prop::collection::vec(binomial(4), 1..5),
        seed in any::<u64>(),
    ) {
        let o = TermOrder::degrevlex(4);
        let mut shuffled = gens.clone();
        let n = shuffled.len();
        shuffled.rotate_left((seed as usize) % n);
        if seed % 2 == 1 {
            shuffled.reverse();
        }
        prop_assert_eq!(buchberger(&gens, &o).unwrap(), buchberger(&shuffled, &o).unwrap());
        let lex = TermOrder::lex(4);
        prop_assert!(ideals_equal(
            &IdealPresentation::from_generators(gens.clone(), o).unwrap(),
            &IdealPresentation::from_generators(gens, lex).unwrap(),
        ).unwrap());
    }

    #[test]
    fn merge_only_adds((m, a, b) in mergeable(6, 5)) {
        let r = analyze_merge(&m, a, b, &TermOrder::degrevlex(m.nrows())).unwrap();
        prop_assert!(r.merged.contains_all(r.base.groebner()).unwrap());
        let rebuilt = ideal_sum(&r.base, &r.added()).unwrap();
        prop_assert!(ideals_equal(&rebuilt, &r.merged).unwrap());
        prop_assert_eq!(r.identical, ideals_equal(&r.base, &r.merged).unwrap());
        prop_assert!(check_linear_criterion(&m, a, b).unwrap());
    }

    #[test]
    fn chi2_is_a_symmetric_dissimilarity(
        counts in (1..=4usize, 1..=4usize).prop_flat_map(|(i, j)| {
            prop::collection::vec(prop::collection::vec(1..=9u64, j), i)
        })
    ) {
        let t = ContingencyTable::from_counts(counts.clone()).unwrap();
        let p = Partition::discrete(t.nrows(), t.ncols());
        for x in 0..t.nrows() {
            for y in 0..t.nrows() {
                let d = chi2_distance(&t, &p, Axis::Rows, x, y).unwrap();
                prop_assert!(d >= BigRational::zero());
                prop_assert_eq!(&d, &chi2_distance(&t, &p, Axis::Rows, y, x).unwrap());
                let (sx, sy): (u64, u64) = (counts[x].iter().sum(), counts[y].iter().sum());
                let proportional = counts[x].iter().zip(&counts[y]).all(|(&u, &v)| u * sy == v * sx);
                prop_assert_eq!(d.is_zero(), proportional);
            }
        }
    }
}
