//! Property tests. The seed comes from `CONEWALK_SEED` and is fixed by default.

use num_bigint::BigUint;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

use conewalk::group_core::{Letter, Word};
use conewalk::heisenberg::{central_interval, tilde_length_exact, word_length_exact};
use conewalk::partitions::PartitionTable;
use conewalk::polytope::simplex_lattice_set;
use conewalk::szekeres::v_of;
use conewalk::traces::{harmonicity, NodeRef, Scalar, TraceSpec};
use conewalk::{D4Symmetry, HeisTriple, Polytope};

fn config() -> ProptestConfig {
    let seed = std::env::var("CONEWALK_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0x5eed);
    ProptestConfig { cases: 128, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..ProptestConfig::default() }
}

fn triple(bound: i64) -> impl Strategy<Value = HeisTriple> {
    (-bound..=bound, -bound..=bound, -bound..=bound).prop_map(|(r, a, b)| HeisTriple::new(r, a, b))
}

fn word() -> impl Strategy<Value = Word> {
    proptest::collection::vec(0usize..4, 0..12).prop_map(|v| {
        Word::from_letters(v.into_iter().map(|i| [Letter::G, Letter::GInv, Letter::H, Letter::HInv][i]))
    })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn heisenberg_group_laws(x in triple(20), y in triple(20), z in triple(20)) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&x.inv()), HeisTriple::IDENTITY);
    }

    #[test]
    fn symmetries_are_automorphisms(x in triple(10), y in triple(10), i in 0usize..8) {
        let s = D4Symmetry::all()[i];
        prop_assert_eq!(s.apply(&x.mul(&y)), s.apply(&x).mul(&s.apply(&y)));
    }

    #[test]
    fn word_length_is_subadditive_and_invariant(x in triple(6), y in triple(6), i in 0usize..8) {
        let lx = word_length_exact(&x);
        prop_assert!(word_length_exact(&x.mul(&y)) <= lx + word_length_exact(&y));
        prop_assert_eq!(word_length_exact(&x.inv()), lx);
        prop_assert_eq!(word_length_exact(&D4Symmetry::all()[i].apply(&x)), lx);
    }

    #[test]
    fn stable_length_bounds(x in triple(12)) {
        let t = tilde_length_exact(&x);
        prop_assert!(t <= word_length_exact(&x));
        prop_assert_eq!(t % 2, (x.degree() % 2) as u64);
    }

    #[test]
    fn intervals_are_nested(a in -5i64..=5, b in -5i64..=5, m in 0i64..14) {
        prop_assert!(central_interval(a, b, m).is_subset(&central_interval(a, b, m + 1)));
    }

    #[test]
    fn partition_recurrence_and_symmetry(r in 0i64..60, a in 1i64..12, b in 1i64..12) {
        let table = PartitionTable::new();
        let p = table.p3(r, a, b);
        prop_assert_eq!(&p, &(table.p3(r, a, b - 1) + table.p3(r - b, a - 1, b)));
        prop_assert_eq!(&p, &table.p3(r, b, a));
        prop_assert_eq!(&p, &table.p3(a * b - r, a, b));
    }

    #[test]
    fn slice_mass_is_a_power_of_two(m in 0i64..16) {
        let total: BigUint = PartitionTable::new().slice(m).mult.values().sum();
        prop_assert_eq!(total, BigUint::from(1u32) << m as usize);
    }

    #[test]
    fn discrete_traces_are_harmonic(p in 0i64..8, q in 1i64..8, upper in any::<bool>(), a in 0i64..10, b in 0i64..10, rf in 0.0f64..1.0) {
        let table = PartitionTable::new();
        let spec = if upper { TraceSpec::UpperDiscrete { c: q, d: p } } else { TraceSpec::LowerDiscrete { r: p, b: q } };
        let r = (rf * (a * b) as f64) as i64;
        prop_assert!(harmonicity(&table, &spec, &NodeRef::quadrant(r, a, b)).unwrap());
    }

    #[test]
    fn multiplicative_traces_are_harmonic(num in 0i64..=16, a in 0i64..12, b in 0i64..12) {
        let table = PartitionTable::new();
        let spec = TraceSpec::Multiplicative(Scalar::Exact(BigRational::new(num.into(), 16.into())));
        prop_assert!(harmonicity(&table, &spec, &NodeRef::quadrant(0, a, b)).unwrap());
    }

    #[test]
    fn root_is_increasing(t in 0.05f64..20.0) {
        prop_assert!(v_of(t * 1.01).unwrap() > v_of(t).unwrap());
    }

    #[test]
    fn free_group_inverse(w in word(), u in word()) {
        prop_assert!(w.mul(&w.inv()).is_empty());
        prop_assert!(w.mul(&u).is_reduced());
        prop_assert_eq!(w.mul(&u).inv(), u.inv().mul(&w.inv()));
        prop_assert_eq!(w.mul(&u).degree(), w.degree() + u.degree());
    }

    #[test]
    fn gauge_is_sublinear(x in proptest::collection::vec(-6i64..=6, 3), y in proptest::collection::vec(-6i64..=6, 3), n in 1i64..6) {
        let set = simplex_lattice_set(&[2, 3, 7]).unwrap().unwrap();
        let pts: Vec<Vec<BigRational>> = set.iter().map(|p| p.iter().map(|&c| BigRational::from_integer(c.into())).collect()).collect();
        let k = Polytope::hull(&pts).unwrap();
        let sum: Vec<i64> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
        prop_assert!(k.gauge_int(&sum) <= k.gauge_int(&x) + k.gauge_int(&y));
        let scaled: Vec<i64> = x.iter().map(|c| c * n).collect();
        prop_assert_eq!(k.gauge_int(&scaled), k.gauge_int(&x) * BigRational::from_integer(n.into()));
    }
}
