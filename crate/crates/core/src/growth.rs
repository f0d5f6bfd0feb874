//! Cayley-ball supports, word length, witnessed bounds for the stable length
//! `~l`, level sets and census experiments.

use num_rational::Ratio;
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{invalid, Error, Result};
use crate::group_core::Group;

/// Finite generating multiset support `S` with `1 ∈ S`.
#[derive(Clone, Debug)]
pub struct AdmissibleSet<E> {
    elements: Vec<E>,
}

impl<E: Clone + Ord> AdmissibleSet<E> {
    pub fn new<G: Group<Elem = E>>(group: &G, elements: Vec<E>) -> Result<Self> {
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        if elements.binary_search(&group.identity()).is_err() {
            return invalid("admissible set must contain the identity");
        }
        Ok(AdmissibleSet { elements })
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Nested balls `S^0 ⊆ … ⊆ S^M` stored as spheres `Γ_k = S^k \ S^{k-1}`
/// together with the first-appearance level of every element.
#[derive(Clone, Debug)]
pub struct BallSequence<E> {
    spheres: Vec<Vec<E>>,
    level: FxHashMap<E, u32>,
}

impl<E: Clone + Eq + std::hash::Hash + Ord> BallSequence<E> {
    pub fn horizon(&self) -> usize {
        self.spheres.len() - 1
    }

    pub fn sphere(&self, k: usize) -> &[E] {
        &self.spheres[k]
    }

    pub fn spheres(&self) -> &[Vec<E>] {
        &self.spheres
    }

    /// `|S^k|`.
    pub fn ball_size(&self, k: usize) -> usize {
        self.spheres[..=k].iter().map(Vec::len).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        (0..=self.horizon()).map(|k| self.ball_size(k)).collect()
    }

    pub fn total(&self) -> usize {
        self.level.len()
    }

    pub fn level_of(&self, x: &E) -> Option<usize> {
        self.level.get(x).map(|&l| l as usize)
    }

    pub fn in_ball(&self, x: &E, k: usize) -> bool {
        matches!(self.level.get(x), Some(&l) if (l as usize) <= k)
    }

    /// Elements of `S^k` in sphere order.
    pub fn ball(&self, k: usize) -> impl Iterator<Item = &E> {
        self.spheres[..=k].iter().flatten()
    }
}

/// Exact ball sequence `S^0 … S^M` grown by left multiplication.
pub fn grow<G: Group>(
    group: &G,
    set: &AdmissibleSet<G::Elem>,
    horizon: usize,
    cap: usize,
) -> Result<BallSequence<G::Elem>> {
    let id = group.identity();
    let mut level = FxHashMap::default();
    level.insert(id.clone(), 0u32);
    let mut spheres = vec![vec![id]];
    for k in 0..horizon {
        let frontier = &spheres[k];
        let mut candidates: Vec<G::Elem> = frontier
            .par_iter()
            .flat_map_iter(|x| set.elements().iter().map(move |s| group.mul(s, x)))
            .collect();
        candidates.par_sort_unstable();
        candidates.dedup();
        let next: Vec<G::Elem> = candidates.into_iter().filter(|y| !level.contains_key(y)).collect();
        if level.len() + next.len() > cap {
            return Err(Error::ResourceCap {
                what: format!("ball growth element cap {cap}"),
                reached_depth: k,
                elements: level.len(),
            });
        }
        level.reserve(next.len());
        for y in &next {
            level.insert(y.clone(), (k + 1) as u32);
        }
        spheres.push(next);
    }
    Ok(BallSequence { spheres, level })
}

/// `l_S(x)` if `x` lies in the computed ball.
pub fn word_length<E: Clone + Eq + std::hash::Hash + Ord>(ball: &BallSequence<E>, x: &E) -> Option<usize> {
    ball.level_of(x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TildeStatus {
    /// `S^m x ⊆ S^{m+k}` was verified for the recorded `m`.
    Witnessed { bound: usize, m: usize },
    /// No witness with `k ≤ k_max` inside the horizon. Not a lower bound.
    NotWitnessedBelow { k_max: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildeLBound<E> {
    pub element: E,
    pub status: TildeStatus,
}

impl<E> TildeLBound<E> {
    pub fn bound(&self) -> Option<usize> {
        match self.status {
            TildeStatus::Witnessed { bound, .. } => Some(bound),
            TildeStatus::NotWitnessedBelow { .. } => None,
        }
    }
}

/// Alternating front/back order over a sorted sphere; extreme elements come
/// first, which makes failing inclusions fail fast.
fn two_ended<E>(v: &[E]) -> impl Iterator<Item = &E> {
    let n = v.len();
    (0..n).map(move |i| if i % 2 == 0 { &v[i / 2] } else { &v[n - 1 - i / 2] })
}

/// Whether `S^m · x ⊆ S^bound`.
pub fn right_translate_within<G: Group>(
    group: &G,
    ball: &BallSequence<G::Elem>,
    x: &G::Elem,
    m: usize,
    bound: usize,
) -> bool {
    (0..=m)
        .rev()
        .all(|j| two_ended(ball.sphere(j)).all(|y| ball.in_ball(&group.mul(y, x), bound)))
}

/// Smallest `k ≤ k_max` with a witness `m`, `m + k ≤ horizon`.
pub fn tilde_l_upper<G: Group>(
    group: &G,
    ball: &BallSequence<G::Elem>,
    x: &G::Elem,
    k_max: usize,
) -> TildeLBound<G::Elem> {
    tilde_l_upper_within(group, ball, x, k_max, ball.horizon())
}

/// As [`tilde_l_upper`] with an explicit horizon no larger than the ball's.
pub fn tilde_l_upper_within<G: Group>(
    group: &G,
    ball: &BallSequence<G::Elem>,
    x: &G::Elem,
    k_max: usize,
    horizon: usize,
) -> TildeLBound<G::Elem> {
    let horizon = horizon.min(ball.horizon());
    for k in 0..=k_max.min(horizon) {
        for m in 0..=horizon - k {
            if right_translate_within(group, ball, x, m, m + k) {
                return TildeLBound { element: x.clone(), status: TildeStatus::Witnessed { bound: k, m } };
            }
        }
    }
    TildeLBound { element: x.clone(), status: TildeStatus::NotWitnessedBelow { k_max } }
}

#[derive(Clone, Debug)]
pub struct GammaLevel<E> {
    pub level: usize,
    pub elements: Vec<E>,
    /// `None` at the horizon, where successors are not computed.
    pub dead_end: Vec<Option<bool>>,
}

/// `Γ_k` for every computed level with dead-end flags.
pub fn gamma_levels<G: Group>(
    group: &G,
    ball: &BallSequence<G::Elem>,
    set: &AdmissibleSet<G::Elem>,
) -> Vec<GammaLevel<G::Elem>> {
    let horizon = ball.horizon();
    (0..=horizon)
        .map(|k| {
            let elements = ball.sphere(k).to_vec();
            let dead_end = elements
                .iter()
                .map(|x| {
                    (k < horizon).then(|| {
                        !set.elements()
                            .iter()
                            .any(|s| ball.level_of(&group.mul(s, x)) == Some(k + 1))
                    })
                })
                .collect();
            GammaLevel { level: k, elements, dead_end }
        })
        .collect()
}

/// A factorisation `x = s·j` with `s ∈ S` and `l_S(j) = l_S(x) - 1`.
pub fn predecessor<G: Group>(
    group: &G,
    ball: &BallSequence<G::Elem>,
    set: &AdmissibleSet<G::Elem>,
    x: &G::Elem,
) -> Option<(G::Elem, G::Elem)> {
    let k = ball.level_of(x)?;
    if k == 0 {
        return None;
    }
    set.elements().iter().find_map(|s| {
        let j = group.mul(&group.inv(s), x);
        (ball.level_of(&j) == Some(k - 1)).then(|| (s.clone(), j))
    })
}

/// Exact `~l` supplied by a closed form.
pub type LengthOracle<'a, E> = &'a dyn Fn(&E) -> usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certainty {
    Exact,
    Heuristic,
}

#[derive(Clone, Debug)]
pub struct GammaPrime<E> {
    pub k: usize,
    pub elements: Vec<E>,
    pub status: Certainty,
}

/// `S^k ∩ ~l⁻¹(k)`: exact with an oracle, otherwise from witnessed bounds
/// (elements whose smallest witnessed bound is `k`).
pub fn gamma_prime<G: Group>(
    group: &G,
    ball: &BallSequence<G::Elem>,
    oracle: Option<LengthOracle<'_, G::Elem>>,
    k: usize,
) -> GammaPrime<G::Elem> {
    let k = k.min(ball.horizon());
    let elements = ball
        .ball(k)
        .filter(|x| match oracle {
            Some(f) => f(x) == k,
            None => tilde_l_upper(group, ball, x, k).bound() == Some(k),
        })
        .cloned()
        .collect();
    GammaPrime { k, elements, status: if oracle.is_some() { Certainty::Exact } else { Certainty::Heuristic } }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Census {
    pub k: usize,
    pub count: usize,
    /// Always true: elements outside the computed ball are not counted.
    pub lower_estimate: bool,
}

/// Number of elements of `S^M` with `~l ≤ k`.
pub fn census<G: Group>(
    group: &G,
    ball: &BallSequence<G::Elem>,
    oracle: Option<LengthOracle<'_, G::Elem>>,
    k: usize,
) -> Census {
    let count = ball
        .ball(ball.horizon())
        .filter(|x| match oracle {
            Some(f) => f(x) <= k,
            None => tilde_l_upper(group, ball, x, k).bound().is_some(),
        })
        .count();
    Census { k, count, lower_estimate: true }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealRelation {
    Subset,
    Equal,
    IncomparableOrUnknown,
}

/// Compare the order ideals generated by `g` and `h` through `~l`.
pub fn ideal_compare<G: Group>(
    group: &G,
    oracle: &dyn Fn(&G::Elem) -> usize,
    g: &G::Elem,
    h: &G::Elem,
) -> IdealRelation {
    let quotient = oracle(&group.mul(g, &group.inv(h)));
    if quotient == 0 {
        IdealRelation::Equal
    } else if quotient as i64 == oracle(g) as i64 - oracle(h) as i64 {
        IdealRelation::Subset
    } else {
        IdealRelation::IncomparableOrUnknown
    }
}

/// `|S^{m+k}| / |S^m|` for `m ≤ M - k`.
pub fn ratio_stats<E: Clone + Eq + std::hash::Hash + Ord>(ball: &BallSequence<E>, k: usize) -> Result<Vec<Ratio<u64>>> {
    let horizon = ball.horizon();
    if k > horizon {
        return invalid("ratio offset exceeds horizon");
    }
    let sizes = ball.sizes();
    Ok((0..=horizon - k)
        .map(|m| Ratio::new(sizes[m + k] as u64, sizes[m] as u64))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::{FreeAbelian, FreeGroup2, HeisTriple, Heisenberg, Word};

    fn z_set(points: &[i64]) -> AdmissibleSet<Vec<i64>> {
        AdmissibleSet::new(&FreeAbelian { dim: 1 }, points.iter().map(|&p| vec![p]).collect()).unwrap()
    }

    fn heis_set() -> AdmissibleSet<HeisTriple> {
        AdmissibleSet::new(
            &Heisenberg,
            vec![HeisTriple::IDENTITY, HeisTriple::G, HeisTriple::G.inv(), HeisTriple::H, HeisTriple::H.inv()],
        )
        .unwrap()
    }

    #[test]
    fn interval_balls() {
        let ball = grow(&FreeAbelian { dim: 1 }, &z_set(&[-1, 0, 1]), 3, 1000).unwrap();
        assert_eq!(ball.ball_size(3), 7);
        let ratios = ratio_stats(&ball, 1).unwrap();
        assert_eq!(ratios[1], Ratio::new(5, 3));
    }

    #[test]
    fn heisenberg_small_ball() {
        let ball = grow(&Heisenberg, &heis_set(), 4, 100_000).unwrap();
        assert_eq!(ball.ball_size(2), 17);
        assert_eq!(word_length(&ball, &HeisTriple::Z), Some(4));
        assert_eq!(word_length(&ball, &HeisTriple::new(2, 1, 1)), Some(4));
        assert_eq!(word_length(&ball, &HeisTriple::IDENTITY), Some(0));
    }

    #[test]
    fn admissible_requires_identity() {
        assert!(AdmissibleSet::new(&FreeAbelian { dim: 1 }, vec![vec![1]]).is_err());
    }

    #[test]
    fn cap_is_reported() {
        match grow(&Heisenberg, &heis_set(), 10, 50) {
            Err(Error::ResourceCap { reached_depth, .. }) => assert!(reached_depth < 10),
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn holey_integer_example() {
        let set = z_set(&[4, 3, 1, 0, -1]);
        let group = FreeAbelian { dim: 1 };
        let ball = grow(&group, &set, 10, 10_000).unwrap();
        assert_eq!(word_length(&ball, &vec![2]), Some(2));
        assert_eq!(tilde_l_upper(&group, &ball, &vec![2], 3).bound(), Some(1));
        let levels = gamma_levels(&group, &ball, &set);
        assert!(levels[2].elements.contains(&vec![2]));
        assert!(predecessor(&group, &ball, &set, &vec![2]).is_some());
    }

    #[test]
    fn spread_set_gives_unit_bound() {
        let set = z_set(&[-4, -3, -2, 0, 2, 3, 4]);
        let group = FreeAbelian { dim: 1 };
        let ball = grow(&group, &set, 8, 10_000).unwrap();
        assert_eq!(tilde_l_upper(&group, &ball, &vec![1], 3).bound(), Some(1));
        assert_eq!(tilde_l_upper(&group, &ball, &vec![0], 3).bound(), Some(0));
    }

    #[test]
    fn free_group_ratios_approach_three() {
        let set = AdmissibleSet::new(
            &FreeGroup2,
            ["", "g", "G", "h", "H"].iter().map(|s| Word::parse(s).unwrap()).collect(),
        )
        .unwrap();
        let ball = grow(&FreeGroup2, &set, 8, 1_000_000).unwrap();
        for k in 1..=8 {
            assert_eq!(ball.sphere(k).len(), 4 * 3usize.pow(k as u32 - 1));
        }
        let r = ratio_stats(&ball, 1).unwrap();
        let last = *r.last().unwrap();
        assert!((*last.numer() as f64 / *last.denom() as f64 - 3.0).abs() < 0.01);
    }

    #[test]
    fn no_dead_ends_on_the_line() {
        let set = z_set(&[-1, 0, 1]);
        let group = FreeAbelian { dim: 1 };
        let ball = grow(&group, &set, 5, 1000).unwrap();
        for lvl in gamma_levels(&group, &ball, &set) {
            assert!(lvl.dead_end.iter().all(|d| *d != Some(true)));
        }
    }
}
