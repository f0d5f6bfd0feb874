//! Exact lattice polytopes with the origin in the interior: hulls, facet
//! normals, the gauge `Λ_K`, solidity and boundary checks, right simplices,
//! and comparisons of the gauge with word length.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::group_core::FreeAbelian;
use crate::growth::{grow, AdmissibleSet};

/// Exact ordered field used for polytope arithmetic.
pub trait ExactField: Clone + Num + Signed + Ord + ToPrimitive + fmt::Debug + fmt::Display + Send + Sync {
    fn from_int(n: i64) -> Self;
    fn floor_int(&self) -> i64;
    fn ceil_int(&self) -> i64;
}

impl ExactField for Rational64 {
    fn from_int(n: i64) -> Self {
        Rational64::from_integer(n)
    }
    fn floor_int(&self) -> i64 {
        self.floor().to_integer()
    }
    fn ceil_int(&self) -> i64 {
        self.ceil().to_integer()
    }
}

impl ExactField for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn floor_int(&self) -> i64 {
        self.floor().to_integer().to_i64().expect("coordinate fits in i64")
    }
    fn ceil_int(&self) -> i64 {
        self.ceil().to_integer().to_i64().expect("coordinate fits in i64")
    }
}

pub type Point<T> = Vec<T>;

fn dot<T: ExactField>(u: &[T], v: &[T]) -> T {
    u.iter().zip(v).fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

/// Solve `A v = 1` by Gaussian elimination; `None` when singular.
fn solve_ones<T: ExactField>(rows: &[Point<T>]) -> Option<Point<T>> {
    let d = rows.len();
    let mut m: Vec<Vec<T>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.push(T::one());
            r
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for j in col..=d {
            m[col][j] = m[col][j].clone() / p.clone();
        }
        for i in 0..d {
            if i != col && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for j in col..=d {
                    let delta = factor.clone() * m[col][j].clone();
                    m[i][j] = m[i][j].clone() - delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[d].clone()).collect())
}

fn rank<T: ExactField>(rows: &[Point<T>]) -> usize {
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, pivot);
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let factor = m[i][col].clone() / m[r][col].clone();
                for j in col..cols {
                    let delta = factor.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - delta;
                }
            }
        }
        r += 1;
    }
    r
}

fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = idx.clone();
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// `K = ∩_F {x : v_F·x ≤ 1}` with its extreme points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope<T> {
    pub dim: usize,
    pub vertices: Vec<Point<T>>,
    pub facets: Vec<Point<T>>,
}

impl<T: ExactField> LatticePolytope<T> {
    /// Convex hull of finitely many points; the origin must be interior.
    pub fn hull(points: &[Point<T>]) -> Result<Self> {
        let Some(dim) = points.first().map(Vec::len) else {
            return invalid("hull of no points");
        };
        if !(2..=4).contains(&dim) || points.iter().any(|p| p.len() != dim) {
            return invalid(format!("hull needs points of a common dimension 2..=4, got {dim}"));
        }
        let pts: Vec<Point<T>> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let n = T::from_int(pts.len() as i64);
        let centroid: Point<T> = (0..dim)
            .map(|i| pts.iter().fold(T::zero(), |acc, p| acc + p[i].clone()) / n.clone())
            .collect();
        let shifted: Vec<Point<T>> = pts
            .iter()
            .map(|p| p.iter().zip(&centroid).map(|(a, c)| a.clone() - c.clone()).collect())
            .collect();
        let mut facets = BTreeSet::new();
        for combo in combinations(shifted.len(), dim) {
            let rows: Vec<Point<T>> = combo.iter().map(|&i| shifted[i].clone()).collect();
            let Some(v) = solve_ones(&rows) else { continue };
            if shifted.iter().all(|p| dot(&v, p) <= T::one()) {
                // Back to the original frame: v·x ≤ 1 + v·c.
                let offset = T::one() + dot(&v, &centroid);
                if !offset.is_positive() {
                    return invalid("origin is not interior to the hull");
                }
                facets.insert(v.into_iter().map(|x| x / offset.clone()).collect::<Point<T>>());
            }
        }
        let facets: Vec<Point<T>> = facets.into_iter().collect();
        if facets.len() <= dim || rank(&facets) < dim {
            return invalid("points do not span the ambient space");
        }
        let vertices = pts
            .into_iter()
            .filter(|p| {
                let tight: Vec<Point<T>> = facets.iter().filter(|v| dot(v, p) == T::one()).cloned().collect();
                rank(&tight) == dim
            })
            .collect();
        Ok(LatticePolytope { dim, vertices, facets })
    }

    /// `Λ_K(x) = max_F v_F·x`.
    pub fn gauge(&self, x: &[T]) -> T {
        self.facets.iter().map(|v| dot(v, x)).max().expect("polytope has facets")
    }

    pub fn gauge_int(&self, x: &[i64]) -> T {
        let x: Point<T> = x.iter().map(|&c| T::from_int(c)).collect();
        self.gauge(&x)
    }

    pub fn contains_scaled(&self, x: &[i64], m: i64) -> bool {
        self.gauge_int(x) <= T::from_int(m)
    }

    /// Integer points of `mK`.
    pub fn lattice_points(&self, m: i64) -> Result<BTreeSet<Vec<i64>>> {
        if m < 0 {
            return invalid("scale must be nonnegative");
        }
        let scale = T::from_int(m);
        let lo: Vec<i64> = (0..self.dim)
            .map(|i| self.vertices.iter().map(|v| (v[i].clone() * scale.clone()).floor_int()).min().unwrap())
            .collect();
        let hi: Vec<i64> = (0..self.dim)
            .map(|i| self.vertices.iter().map(|v| (v[i].clone() * scale.clone()).ceil_int()).max().unwrap())
            .collect();
        let volume: i128 = lo.iter().zip(&hi).map(|(a, b)| (b - a + 1) as i128).product();
        if volume > crate::tolerances::DEFAULT_ELEMENT_CAP as i128 {
            return Err(crate::Error::ResourceCap {
                what: format!("lattice box for scale {m}"),
                reached_depth: 0,
                elements: volume as usize,
            });
        }
        let mut out = BTreeSet::new();
        let mut x = lo.clone();
        loop {
            if self.contains_scaled(&x, m) {
                out.insert(x.clone());
            }
            let mut i = 0;
            loop {
                if i == self.dim {
                    return Ok(out);
                }
                x[i] += 1;
                if x[i] <= hi[i] {
                    break;
                }
                x[i] = lo[i];
                i += 1;
            }
        }
    }
}

/// `m`-fold sumset `S + … + S`.
pub fn sumset(set: &BTreeSet<Vec<i64>>, m: usize) -> BTreeSet<Vec<i64>> {
    let dim = set.iter().next().map_or(0, Vec::len);
    let mut cur: BTreeSet<Vec<i64>> = std::iter::once(vec![0; dim]).collect();
    for _ in 0..m {
        cur = cur
            .iter()
            .flat_map(|x| set.iter().map(move |s| x.iter().zip(s).map(|(a, b)| a + b).collect()))
            .collect();
    }
    cur
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelCheck {
    pub m: usize,
    pub pass: bool,
    /// A lattice point breaking the condition.
    pub witness: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SolidityReport {
    pub cond0: bool,
    pub cond_i: Vec<LevelCheck>,
    pub cond_ii: Vec<LevelCheck>,
    pub overall: bool,
}

impl SolidityReport {
    pub fn first_failure_ii(&self) -> Option<&LevelCheck> {
        self.cond_ii.iter().find(|c| !c.pass)
    }
}

/// Conditions (0), solidity and the boundary condition for `K = cvx S`,
/// checked for scales `1..=d`.
pub fn solidity_check<T: ExactField>(set: &BTreeSet<Vec<i64>>) -> Result<SolidityReport> {
    let pts: Vec<Point<T>> = set.iter().map(|p| p.iter().map(|&c| T::from_int(c)).collect()).collect();
    let k = LatticePolytope::hull(&pts)?;
    let cond0 = k.lattice_points(1)? == *set;
    let mut cond_i = Vec::new();
    let mut cond_ii = Vec::new();
    for m in 1..=k.dim {
        let scaled = k.lattice_points(m as i64)?;
        let sums = sumset(set, m);
        let witness_i = scaled.symmetric_difference(&sums).next().cloned();
        cond_i.push(LevelCheck { m, pass: witness_i.is_none(), witness: witness_i });
        let inner = T::from_int(m as i64 - 1);
        let outer = T::from_int(m as i64);
        let witness_ii = scaled
            .iter()
            .find(|x| {
                let g = k.gauge_int(x);
                g > inner && g < outer
            })
            .cloned();
        cond_ii.push(LevelCheck { m, pass: witness_ii.is_none(), witness: witness_ii });
    }
    let overall = cond0 && cond_i.iter().all(|c| c.pass) && cond_ii.iter().all(|c| c.pass);
    Ok(SolidityReport { cond0, cond_i, cond_ii, overall })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplexVerdict<T> {
    Accepted(LatticePolytope<T>),
    /// `Σ 1/a(i) < 1` fails.
    SumTooLarge,
    /// `1 ≤ 1/a(d) + Σ 1/a(i)` fails.
    SumTooSmall,
}

/// `K_α = cvx({0} ∪ {a(i) e_i}) - (1,…,1)` when `(1,…,1)` is its unique
/// interior lattice point.
pub fn right_simplex<T: ExactField>(alpha: &[i64]) -> Result<SimplexVerdict<T>> {
    if alpha.iter().any(|&a| a < 1) || alpha.windows(2).any(|w| w[0] > w[1]) {
        return invalid("exponents must be positive and sorted");
    }
    let d = alpha.len();
    let sum = alpha.iter().fold(T::zero(), |acc, &a| acc + T::one() / T::from_int(a));
    if sum >= T::one() {
        return Ok(SimplexVerdict::SumTooLarge);
    }
    if sum + T::one() / T::from_int(alpha[d - 1]) < T::one() {
        return Ok(SimplexVerdict::SumTooSmall);
    }
    let mut pts = vec![vec![T::from_int(-1); d]];
    for (i, &a) in alpha.iter().enumerate() {
        let mut p = vec![T::from_int(-1); d];
        p[i] = T::from_int(a - 1);
        pts.push(p);
    }
    Ok(SimplexVerdict::Accepted(LatticePolytope::hull(&pts)?))
}

#[derive(Clone, Debug, Serialize)]
pub struct GaugeComparison {
    pub radius: usize,
    pub compared: usize,
    pub mismatches: usize,
    pub witness: Option<(Vec<i64>, usize, String)>,
}

/// Compare `l_S` with `Λ_K` on the ball of the given radius.
pub fn gauge_vs_wordlength<T: ExactField>(set: &BTreeSet<Vec<i64>>, radius: usize) -> Result<GaugeComparison> {
    let pts: Vec<Point<T>> = set.iter().map(|p| p.iter().map(|&c| T::from_int(c)).collect()).collect();
    let k = LatticePolytope::hull(&pts)?;
    let group = FreeAbelian { dim: k.dim };
    let adm = AdmissibleSet::new(&group, set.iter().cloned().collect())?;
    let ball = grow(&group, &adm, radius, crate::tolerances::DEFAULT_ELEMENT_CAP)?;
    let mut compared = 0;
    let mut mismatches = 0;
    let mut witness = None;
    for (l, sphere) in ball.spheres().iter().enumerate() {
        for x in sphere {
            compared += 1;
            let g = k.gauge_int(x);
            if g != T::from_int(l as i64) {
                mismatches += 1;
                if witness.is_none() {
                    witness = Some((x.clone(), l, g.to_string()));
                }
            }
        }
    }
    Ok(GaugeComparison { radius, compared, mismatches, witness })
}

#[derive(Clone, Debug, Serialize)]
pub struct FeketeReport {
    pub x: Vec<i64>,
    pub gauge: String,
    /// `l_S(n x) / n` for `n = 1..=n_max`.
    pub sequence: Vec<f64>,
    pub final_gap: f64,
}

/// `l_S(n x)/n` against `Λ_K(x)`.
pub fn fekete<T: ExactField>(set: &BTreeSet<Vec<i64>>, samples: &[Vec<i64>], n_max: usize) -> Result<Vec<FeketeReport>> {
    let pts: Vec<Point<T>> = set.iter().map(|p| p.iter().map(|&c| T::from_int(c)).collect()).collect();
    let k = LatticePolytope::hull(&pts)?;
    let needed = samples
        .iter()
        .map(|x| (k.gauge_int(x) * T::from_int(n_max as i64)).ceil_int())
        .max()
        .unwrap_or(0)
        .max(0) as usize;
    let group = FreeAbelian { dim: k.dim };
    let adm = AdmissibleSet::new(&group, set.iter().cloned().collect())?;
    let ball = grow(&group, &adm, needed, crate::tolerances::DEFAULT_ELEMENT_CAP)?;
    samples
        .iter()
        .map(|x| {
            let gauge = k.gauge_int(x);
            let sequence = (1..=n_max)
                .map(|n| {
                    let y: Vec<i64> = x.iter().map(|c| c * n as i64).collect();
                    ball.level_of(&y)
                        .map(|l| l as f64 / n as f64)
                        .ok_or_else(|| crate::Error::ResourceCap {
                            what: "fekete ball radius".into(),
                            reached_depth: needed,
                            elements: ball.total(),
                        })
                })
                .collect::<Result<Vec<f64>>>()?;
            let g = gauge.to_f64().unwrap_or(f64::NAN);
            let final_gap = (sequence.last().copied().unwrap_or(0.0) - g).abs();
            Ok(FeketeReport { x: x.clone(), gauge: gauge.to_string(), sequence, final_gap })
        })
        .collect()
}

/// `K_{(2,3,m)} ∩ Z^3` when the simplex is accepted.
pub fn simplex_lattice_set(alpha: &[i64]) -> Result<Option<BTreeSet<Vec<i64>>>> {
    match right_simplex::<BigRational>(alpha)? {
        SimplexVerdict::Accepted(k) => Ok(Some(k.lattice_points(1)?)),
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    fn cross() -> BTreeSet<Vec<i64>> {
        [vec![0, 0], vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]].into_iter().collect()
    }

    #[test]
    fn square() {
        let pts: Vec<Point<Rational64>> = cross().iter().map(|p| p.iter().map(|&c| q(c)).collect()).collect();
        let k = LatticePolytope::hull(&pts).unwrap();
        assert_eq!(k.vertices.len(), 4);
        assert_eq!(k.facets.len(), 4);
        assert!(k.facets.iter().all(|v| v.iter().all(|c| c.abs() == q(1))));
        assert_eq!(k.gauge(&[q(3), q(-2)]), q(5));
        assert_eq!(k.lattice_points(1).unwrap().len(), 5);
        assert_eq!(k.lattice_points(2).unwrap().len(), 13);
        assert_eq!(k.lattice_points(0).unwrap().len(), 1);
    }

    #[test]
    fn square_conditions() {
        let r = solidity_check::<Rational64>(&cross()).unwrap();
        assert!(r.overall);
        let c = gauge_vs_wordlength::<Rational64>(&cross(), 6).unwrap();
        assert_eq!(c.mismatches, 0);
    }

    #[test]
    fn origin_must_be_interior() {
        let pts: Vec<Point<Rational64>> = [[0, 0], [1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|p| p.iter().map(|&c| q(c)).collect())
            .collect();
        assert!(LatticePolytope::hull(&pts).is_err());
    }

    #[test]
    fn simplex_verdicts() {
        match right_simplex::<BigRational>(&[2, 3, 7]).unwrap() {
            SimplexVerdict::Accepted(k) => {
                let mut v: Vec<Vec<i64>> = k
                    .vertices
                    .iter()
                    .map(|p| p.iter().map(|c| c.to_integer().to_i64().unwrap()).collect())
                    .collect();
                v.sort();
                assert_eq!(v, vec![vec![-1, -1, -1], vec![-1, -1, 6], vec![-1, 2, -1], vec![1, -1, -1]]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(right_simplex::<Rational64>(&[2, 3, 13]).unwrap(), SimplexVerdict::SumTooSmall);
        assert_eq!(right_simplex::<Rational64>(&[2, 2, 2]).unwrap(), SimplexVerdict::SumTooLarge);
    }

    #[test]
    fn fekete_on_square() {
        let r = fekete::<Rational64>(&cross(), &[vec![1, 1], vec![0, 0]], 10).unwrap();
        assert!(r[0].sequence.iter().all(|&s| s == 2.0));
        assert!(r[1].sequence.iter().all(|&s| s == 0.0));
    }
}
