//! Weighted Bratteli diagrams built from left multiplication by a group-ring
//! element, unique-antecedent paths and the discrete traces they carry.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use serde_json::{json, Value};

use crate::error::{invalid, Result};
use crate::group_core::{Group, HeisTriple, Heisenberg};
use crate::growth::BallSequence;
use crate::heisenberg::unique_antecedent;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub mult: BigUint,
    /// Index of the coefficient whose group element labels the edge.
    pub label: usize,
}

/// Layered diagram: `edges[k]` joins level `k` to level `k+1`.
#[derive(Clone, Debug)]
pub struct BratteliDiagram<E> {
    pub levels: Vec<Vec<E>>,
    pub edges: Vec<Vec<Edge>>,
    index: Vec<FxHashMap<E, usize>>,
    incoming: Vec<Vec<Vec<usize>>>,
}

impl<E: Clone + Eq + std::hash::Hash + Ord> BratteliDiagram<E> {
    fn assemble<G: Group<Elem = E>>(group: &G, levels: Vec<Vec<E>>, coeffs: &[(E, BigUint)]) -> Self {
        let index: Vec<FxHashMap<E, usize>> = levels
            .iter()
            .map(|lv| lv.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect())
            .collect();
        let mut edges = Vec::new();
        let mut incoming = vec![Vec::new()];
        for k in 0..levels.len().saturating_sub(1) {
            let mut es = Vec::new();
            let mut inc = vec![Vec::new(); levels[k + 1].len()];
            for (src, x) in levels[k].iter().enumerate() {
                for (label, (s, c)) in coeffs.iter().enumerate() {
                    if let Some(&dst) = index[k + 1].get(&group.mul(s, x)) {
                        inc[dst].push(es.len());
                        es.push(Edge { src, dst, mult: c.clone(), label });
                    }
                }
            }
            edges.push(es);
            incoming.push(inc);
        }
        BratteliDiagram { levels, edges, index, incoming }
    }

    /// Nodes are the filtered spheres `Γ_k` of a computed ball; an edge
    /// `x → s·x` carries the coefficient of `s`.
    pub fn from_growth<G: Group<Elem = E>>(
        group: &G,
        ball: &BallSequence<E>,
        coeffs: &[(E, BigUint)],
        filter: impl Fn(usize, &E) -> bool,
    ) -> Self {
        let levels = (0..=ball.horizon())
            .map(|k| ball.sphere(k).iter().filter(|x| filter(k, x)).cloned().collect())
            .collect();
        Self::assemble(group, levels, coeffs)
    }

    /// Nodes at level `k` are the filtered support of `f^k`.
    pub fn from_powers<G: Group<Elem = E>>(
        group: &G,
        coeffs: &[(E, BigUint)],
        depth: usize,
        filter: impl Fn(usize, &E) -> bool,
    ) -> Self {
        let mut levels: Vec<Vec<E>> = vec![vec![group.identity()]];
        for k in 0..depth {
            let next: BTreeSet<E> = levels[k]
                .iter()
                .flat_map(|x| coeffs.iter().map(move |(s, _)| group.mul(s, x)))
                .filter(|y| filter(k + 1, y))
                .collect();
            levels.push(next.into_iter().collect());
        }
        Self::assemble(group, levels, coeffs)
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn node_index(&self, level: usize, x: &E) -> Option<usize> {
        self.index.get(level)?.get(x).copied()
    }

    /// Edges entering node `i` of `level`.
    pub fn incoming(&self, level: usize, i: usize) -> impl Iterator<Item = &Edge> {
        let ids: &[usize] = if level == 0 { &[] } else { &self.incoming[level][i] };
        ids.iter().map(move |&e| &self.edges[level - 1][e])
    }

    pub fn outgoing(&self, level: usize, i: usize) -> impl Iterator<Item = &Edge> {
        self.edges.get(level).into_iter().flatten().filter(move |e| e.src == i)
    }

    /// Whether every node past level 0 has an incoming edge.
    pub fn predecessors_exist(&self) -> bool {
        (1..self.levels.len()).all(|k| self.incoming[k].iter().all(|inc| !inc.is_empty()))
    }

    /// Nodes at `level` with exactly one incoming edge.
    pub fn unique_antecedent_nodes(&self, level: usize) -> Vec<E> {
        if level == 0 || level >= self.levels.len() {
            return Vec::new();
        }
        self.incoming[level]
            .iter()
            .enumerate()
            .filter(|(_, inc)| inc.len() == 1)
            .map(|(i, _)| self.levels[level][i].clone())
            .collect()
    }

    /// Level-`k` nodes with a path to `w` at level `m`.
    pub fn antecedent_set(&self, w: &E, m: usize, k: usize) -> Result<BTreeSet<E>> {
        if k >= m {
            return invalid(format!("need k < m, got k={k}, m={m}"));
        }
        let Some(start) = self.node_index(m, w) else {
            return invalid(format!("node not present at level {m}"));
        };
        let mut frontier: BTreeSet<usize> = std::iter::once(start).collect();
        for level in (k + 1..=m).rev() {
            frontier = frontier.iter().flat_map(|&i| self.incoming(level, i).map(|e| e.src)).collect();
        }
        Ok(frontier.into_iter().map(|i| self.levels[k][i].clone()).collect())
    }

    /// Maximal chains of unique-antecedent nodes reaching `horizon`, each
    /// traced back to the first node that does not have a unique antecedent.
    pub fn trace_paths(&self, horizon: usize) -> Vec<TracePath<E>> {
        let horizon = horizon.min(self.depth());
        let mut out = Vec::new();
        for (leaf, inc) in self.incoming[horizon].iter().enumerate() {
            if horizon == 0 || inc.len() != 1 {
                continue;
            }
            let mut nodes = vec![leaf];
            let mut mults = Vec::new();
            let mut level = horizon;
            let mut cur = leaf;
            while level > 0 && self.incoming[level][cur].len() == 1 {
                let e = &self.edges[level - 1][self.incoming[level][cur][0]];
                mults.push(e.mult.clone());
                cur = e.src;
                level -= 1;
                nodes.push(cur);
            }
            nodes.reverse();
            mults.reverse();
            out.push(TracePath {
                start_level: level,
                nodes: nodes
                    .iter()
                    .enumerate()
                    .map(|(j, &i)| self.levels[level + j][i].clone())
                    .collect(),
                multiplicities: mults,
                horizon,
                status: PathStatus::HorizonLimited,
            });
        }
        out.sort_by(|p, q| (p.start_level, &p.nodes).cmp(&(q.start_level, &q.nodes)));
        out
    }

    /// JSON `{levels: [[key, …], …], edges: [[src, dst, mult], …]}` with
    /// node indices counted across all levels.
    pub fn to_json(&self, key: impl Fn(&E) -> Value) -> Value {
        let offsets: Vec<usize> = self
            .levels
            .iter()
            .scan(0, |acc, lv| {
                let o = *acc;
                *acc += lv.len();
                Some(o)
            })
            .collect();
        let levels: Vec<Value> = self.levels.iter().map(|lv| Value::Array(lv.iter().map(&key).collect())).collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .enumerate()
            .flat_map(|(k, es)| {
                let offsets = &offsets;
                es.iter().map(move |e| {
                    json!([offsets[k] + e.src, offsets[k + 1] + e.dst, e.mult.to_string()])
                })
            })
            .collect();
        json!({ "levels": levels, "edges": edges })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathStatus {
    /// Uniqueness checked only up to the horizon.
    HorizonLimited,
    /// Uniqueness holds at every later level by the closed-form predicate.
    Certified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracePath<E> {
    pub start_level: usize,
    /// `x_{k0}, x_{k0+1}, …, x_horizon`.
    pub nodes: Vec<E>,
    /// `c(n)` for the edge `x_n → x_{n+1}`.
    pub multiplicities: Vec<BigUint>,
    pub horizon: usize,
    pub status: PathStatus,
}

impl<E: Clone + Eq> TracePath<E> {
    pub fn start(&self) -> &E {
        &self.nodes[0]
    }

    pub fn node_at(&self, level: usize) -> Option<&E> {
        level.checked_sub(self.start_level).and_then(|j| self.nodes.get(j))
    }

    /// `a(x_k) / ∏_{k0 ≤ i < k} c(i)` for a vector `a` at level `k`.
    pub fn discrete_trace_eval(&self, level: usize, vector: &[(E, BigInt)]) -> Result<BigRational> {
        let Some(x) = self.node_at(level) else {
            return invalid(format!("level {level} outside path range"));
        };
        let numer: BigInt = vector.iter().filter(|(w, _)| w == x).map(|(_, c)| c.clone()).sum();
        let denom: BigUint = self.multiplicities[..level - self.start_level].iter().product();
        Ok(BigRational::new(numer, BigInt::from(denom)))
    }
}

/// The quadrant diagram of `g + h` up to `depth`.
pub fn quadrant_diagram(depth: usize) -> BratteliDiagram<HeisTriple> {
    let coeffs = [(HeisTriple::G, BigUint::one()), (HeisTriple::H, BigUint::one())];
    BratteliDiagram::from_powers(&Heisenberg, &coeffs, depth, |_, x: &HeisTriple| x.is_first_quadrant())
}

/// Mark paths on the quadrant diagram whose later nodes all satisfy the
/// closed-form uniqueness predicate; unique nodes always have a unique child,
/// so such paths continue indefinitely.
pub fn certify_quadrant_paths(paths: &mut [TracePath<HeisTriple>]) {
    for p in paths {
        let ok = p.nodes.iter().skip(1).enumerate().all(|(j, x)| {
            let m = (p.start_level + 1 + j) as i64;
            unique_antecedent(x.r, x.a, m)
        });
        if ok {
            p.status = PathStatus::Certified;
        }
    }
}

/// Multiplicity of `x_k` in `(g+h)^k` divides out of the path quotient to give
/// the normalized trace value.
pub fn normalized_quadrant_eval(
    path: &TracePath<HeisTriple>,
    level: usize,
    vector: &[(HeisTriple, BigInt)],
    node_mult: &BigUint,
) -> Result<BigRational> {
    let raw = path.discrete_trace_eval(level, vector)?;
    if node_mult.is_zero() {
        return invalid("zero multiplicity");
    }
    let unit: BigUint = path.multiplicities[..level - path.start_level].iter().product();
    Ok(raw * BigRational::new(BigInt::from(unit), BigInt::from(node_mult.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::{FreeAbelian, FreeGroup2, Letter, Word};
    use crate::growth::{grow, AdmissibleSet};

    #[test]
    fn parabola_sizes() {
        let d = quadrant_diagram(6);
        for m in 0..=6i64 {
            let expect: i64 = (0..=m).map(|a| a * (m - a) + 1).sum();
            assert_eq!(d.levels[m as usize].len() as i64, expect);
        }
        assert!(d.predecessors_exist());
    }

    #[test]
    fn line_gives_two_rays() {
        let z = FreeAbelian { dim: 1 };
        let set = AdmissibleSet::new(&z, vec![vec![-1], vec![0], vec![1]]).unwrap();
        let ball = grow(&z, &set, 5, 1000).unwrap();
        let coeffs: Vec<_> = set.elements().iter().map(|s| (s.clone(), BigUint::one())).collect();
        let d = BratteliDiagram::from_growth(&z, &ball, &coeffs, |_, _| true);
        for k in 1..5 {
            assert_eq!(d.levels[k], vec![vec![-(k as i64)], vec![k as i64]]);
            assert_eq!(d.edges[k].len(), 2);
        }
        let paths = d.trace_paths(5);
        assert_eq!(paths.len(), 2);
        assert!(paths.iter().all(|p| p.start_level == 0));
    }

    #[test]
    fn free_tree() {
        let f = FreeGroup2;
        let gens = [Letter::G, Letter::GInv, Letter::H, Letter::HInv];
        let mut s: Vec<Word> = gens.iter().map(|&l| Word::power(l, 1)).collect();
        s.push(Word::identity());
        let set = AdmissibleSet::new(&f, s).unwrap();
        let ball = grow(&f, &set, 4, 10_000).unwrap();
        let coeffs: Vec<_> = set.elements().iter().map(|s| (s.clone(), BigUint::one())).collect();
        let d = BratteliDiagram::from_growth(&f, &ball, &coeffs, |_, _| true);
        assert_eq!(d.edges[0].len(), 4);
        for k in 1..4 {
            assert_eq!(d.edges[k].len(), 3 * d.levels[k].len());
        }
    }

    #[test]
    fn extreme_and_center_nodes() {
        let d = quadrant_diagram(8);
        let flagged: BTreeSet<_> = d.unique_antecedent_nodes(8).into_iter().collect();
        assert!(flagged.contains(&HeisTriple::new(0, 8, 0)));
        assert!(flagged.contains(&HeisTriple::new(0, 0, 8)));
        assert!(!flagged.contains(&HeisTriple::new(8, 4, 4)));
    }

    #[test]
    fn ray_antecedents() {
        let d = quadrant_diagram(7);
        let set = d.antecedent_set(&HeisTriple::new(0, 7, 0), 7, 3).unwrap();
        assert_eq!(set.into_iter().collect::<Vec<_>>(), vec![HeisTriple::new(0, 3, 0)]);
    }

    #[test]
    fn path_from_one_one_one() {
        let d = quadrant_diagram(9);
        let mut paths = d.trace_paths(9);
        certify_quadrant_paths(&mut paths);
        let p = paths
            .iter()
            .find(|p| p.node_at(9) == Some(&HeisTriple::new(1, 8, 1)))
            .unwrap();
        assert!(p.multiplicities.iter().all(|c| c.is_one()));
        assert_eq!(p.status, PathStatus::Certified);
        let v = p.discrete_trace_eval(5, &[(HeisTriple::new(1, 4, 1), BigInt::from(7))]).unwrap();
        assert_eq!(v, BigRational::from_integer(BigInt::from(7)));
    }
}
