//! Library results against independent brute-force or series computations.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use conewalk::bratteli::quadrant_diagram;
use conewalk::free_realization::{primitivity_exponent, RealizationSpec};
use conewalk::heisenberg::{central_interval, order_unit_set, tilde_length_exact, word_length_exact};
use conewalk::partitions::PartitionTable;
use conewalk::polytope::{simplex_lattice_set, LatticePolytope};
use conewalk::szekeres::{bose_integral, v_of};
use conewalk::traces::{eval, normalization, NodeRef, Scalar, TraceSpec};
use conewalk::HeisTriple;

fn heis_mul(x: (i64, i64, i64), y: (i64, i64, i64)) -> (i64, i64, i64) {
    (x.0 + y.0 + x.1 * y.2, x.1 + y.1, x.2 + y.2)
}

/// Breadth-first word lengths in the Heisenberg group with `{g^±1, h^±1}`.
fn heis_bfs(radius: usize) -> HashMap<(i64, i64, i64), usize> {
    let gens = [(0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)];
    let mut dist = HashMap::new();
    dist.insert((0, 0, 0), 0);
    let mut queue = VecDeque::from([(0i64, 0i64, 0i64)]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        if d == radius {
            continue;
        }
        for s in gens {
            let y = heis_mul(s, x);
            dist.entry(y).or_insert_with(|| {
                queue.push_back(y);
                d + 1
            });
        }
    }
    dist
}

fn brute_partitions(r: i64, parts: i64, max: i64) -> u64 {
    if r == 0 {
        return 1;
    }
    if r < 0 || parts == 0 || max == 0 {
        return 0;
    }
    (1..=max.min(r)).map(|first| brute_partitions(r - first, parts - 1, first)).sum()
}

#[test]
fn interval_matches_breadth_first_search() {
    let dist = heis_bfs(8);
    for m in 0..=8i64 {
        for a in -9..=9i64 {
            for b in -9..=9i64 {
                for r in -20..=20i64 {
                    let reach = dist.get(&(r, a, b)).is_some_and(|&d| d as i64 <= m);
                    assert_eq!(central_interval(a, b, m).contains(r), reach, "({r},{a},{b}) at {m}");
                }
            }
        }
    }
}

#[test]
fn word_length_matches_breadth_first_search() {
    let dist = heis_bfs(10);
    for (&(r, a, b), &d) in &dist {
        if d <= 8 {
            assert_eq!(word_length_exact(&HeisTriple::new(r, a, b)), d as u64);
        }
    }
}

#[test]
fn stable_length_of_small_elements() {
    assert_eq!(tilde_length_exact(&HeisTriple::Z), 2);
    assert_eq!(tilde_length_exact(&HeisTriple::new(0, 3, -2)), 5);
    assert_eq!(word_length_exact(&HeisTriple::Z), 4);
}

#[test]
fn partitions_match_brute_force() {
    let table = PartitionTable::new();
    for a in 0..=7 {
        for b in 0..=7 {
            for r in -1..=a * b + 1 {
                assert_eq!(table.p3(r, a, b), BigUint::from(brute_partitions(r, a, b)), "p({r},{a},{b})");
            }
        }
    }
}

#[test]
fn unrestricted_partition_count() {
    let table = PartitionTable::new();
    assert_eq!(table.p2(100, 100), BigUint::from(190_569_292u64));
    assert_eq!(table.p2(10, 10), BigUint::from(42u32));
}

#[test]
fn coefficients_by_word_expansion() {
    let table = PartitionTable::new();
    let mut counts: HashMap<(i64, i64, i64), u64> = HashMap::new();
    for mask in 0u32..(1 << 10) {
        let mut x = (0, 0, 0);
        for i in 0..10 {
            let s = if mask >> i & 1 == 1 { (0, 1, 0) } else { (0, 0, 1) };
            x = heis_mul(s, x);
        }
        *counts.entry(x).or_default() += 1;
    }
    let slice = table.slice(10);
    assert_eq!(slice.mult.len(), counts.len());
    for ((r, a, b), c) in counts {
        assert_eq!(slice.mult[&HeisTriple::new(r, a, b)], BigUint::from(c));
    }
}

/// `∫₀^v x/(eˣ-1) dx = π²/6 - Σ_n e^{-nv}(v/n + 1/n²)`.
fn bose_series(v: f64) -> f64 {
    let tail: f64 = (1..20_000)
        .map(|n| {
            let n = n as f64;
            (-n * v).exp() * (v / n + 1.0 / (n * n))
        })
        .sum();
    std::f64::consts::PI.powi(2) / 6.0 - tail
}

#[test]
fn bose_integral_against_series() {
    for v in [0.5f64, 1.0, 2.0, 5.0] {
        let q: f64 = bose_integral(v);
        assert!((q - bose_series(v)).abs() < 1e-8, "v={v}: {q} vs {}", bose_series(v));
    }
}

#[test]
fn root_satisfies_series_equation() {
    for t in [0.25f64, 1.0, 4.0] {
        let v = v_of(t).unwrap();
        assert!((v * v - t * t * bose_series(v)).abs() < 1e-7 * (1.0 + v * v), "t={t}");
    }
}

#[test]
fn multiplicative_trace_closed_form() {
    let table = PartitionTable::new();
    let t = BigRational::new(3.into(), 8.into());
    let spec = TraceSpec::Multiplicative(Scalar::Exact(t.clone()));
    let v = eval(&table, &spec, &NodeRef::quadrant(2, 2, 3)).unwrap();
    let one_minus = BigRational::one() - &t;
    let want = &t * &t * &one_minus * &one_minus * &one_minus;
    assert_eq!(v.exact(), Some(&want));
    assert_eq!(normalization(&table, &spec, 7).unwrap().exact(), Some(&BigRational::one()));
}

#[test]
fn lower_trace_on_its_path() {
    let table = PartitionTable::new();
    let spec = TraceSpec::LowerDiscrete { r: 2, b: 3 };
    let v = eval(&table, &spec, &NodeRef::quadrant(2, 2, 3)).unwrap();
    let want = BigRational::new(1.into(), BigUint::from(brute_partitions(2, 2, 3)).into());
    assert_eq!(v.exact(), Some(&want));
}

#[test]
fn simplex_points_by_inequalities() {
    for m in 7..=12i64 {
        let set = simplex_lattice_set(&[2, 3, m]).unwrap().unwrap();
        let mut brute = BTreeSet::new();
        for x in -1..=1i64 {
            for y in -1..=2i64 {
                for z in -1..m {
                    let (u, v, w) = (x + 1, y + 1, z + 1);
                    if 3 * m * u + 2 * m * v + 6 * w <= 6 * m {
                        brute.insert(vec![x, y, z]);
                    }
                }
            }
        }
        assert_eq!(set, brute, "m={m}");
    }
}

#[test]
fn gauge_of_vertices_and_origin() {
    let pts: Vec<Vec<BigRational>> = [[-1i64, -1, -1], [1, -1, -1], [-1, 2, -1], [-1, -1, 6]]
        .iter()
        .map(|p| p.iter().map(|&c| BigRational::from_integer(c.into())).collect())
        .collect();
    let k = LatticePolytope::hull(&pts).unwrap();
    assert_eq!(k.vertices.len(), 4);
    assert_eq!(k.facets.len(), 4);
    for p in &pts {
        assert_eq!(k.gauge(p), BigRational::one());
    }
    assert_eq!(k.gauge_int(&[0, 0, 0]).to_f64(), Some(0.0));
}

#[test]
fn order_unit_counts_by_direct_count() {
    for m in 1..=10i64 {
        let mut count = 0usize;
        for a in 0..=m {
            for r in 0..=a * (m - a) {
                if r <= a || r >= (a - 1) * (m - a) {
                    count += 1;
                }
            }
        }
        assert_eq!(order_unit_set(m).unwrap().count, count);
    }
}

#[test]
fn quadrant_level_sizes_and_multiplicities() {
    let d = quadrant_diagram(7);
    let table = PartitionTable::new();
    for (k, level) in d.levels.iter().enumerate() {
        let total: BigUint = level.iter().map(|w| table.p3(w.r, w.a, w.b)).sum();
        assert_eq!(total, BigUint::from(1u32) << k);
    }
}

#[test]
fn realization_words_for_three_by_three() {
    let b = vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 1]];
    assert_eq!(primitivity_exponent(&b), Some(4));
    let spec = RealizationSpec::build(b).unwrap();
    assert_eq!(spec.transitions.len(), 4);
    assert_eq!(spec.support.len(), 9);
    assert!(spec.is_symmetric());
}
