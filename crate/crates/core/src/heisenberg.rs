//! Closed-form combinatorics of the discrete Heisenberg group with the
//! generating set `{1, g^±1, h^±1}`.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use rustc_hash::FxHashSet;

use crate::error::{invalid, Result};
use crate::group_core::{group_ring_powers, D4Symmetry, HeisTriple, Heisenberg};

/// Degree data of `z^r g^a h^b` seen at time `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DefectData {
    pub a: i64,
    pub b: i64,
    pub m: i64,
    /// `m - a - b`.
    pub defect: i64,
    /// `defect / 2`.
    pub half: i64,
}

impl DefectData {
    pub fn new(a: i64, b: i64, m: i64) -> Result<Self> {
        if a < 0 || b < 0 {
            return invalid(format!("exponents must be nonnegative, got a={a}, b={b}"));
        }
        let defect = m - a - b;
        if defect < 0 || defect % 2 != 0 {
            return invalid(format!("defect {defect} of (a={a}, b={b}, m={m}) must be even and nonnegative"));
        }
        Ok(DefectData { a, b, m, defect, half: defect / 2 })
    }
}

/// Values of every branch of the piecewise maximum whose condition holds.
pub fn central_max_branches(a: i64, b: i64, m: i64) -> Result<Vec<i64>> {
    let d = DefectData::new(a, b, m)?;
    let h = d.half;
    let mut out = Vec::with_capacity(3);
    if h + b <= a {
        out.push((b + h) * a);
    }
    if h + a <= b {
        out.push((h + a) * b);
    }
    if h + b >= a && h + a >= b {
        let s = h + a + b;
        out.push(Integer::div_floor(&s, &2) * Integer::div_ceil(&s, &2));
    }
    Ok(out)
}

/// Largest central exponent `r` with `z^r g^a h^b ∈ S^m` for `a, b ≥ 0` and
/// even defect.
pub fn central_max(a: i64, b: i64, m: i64) -> Result<i64> {
    let values = central_max_branches(a, b, m)?;
    debug_assert!(values.windows(2).all(|w| w[0] == w[1]), "branches disagree at ({a},{b},{m})");
    Ok(values[0])
}

/// `{r : z^r g^a h^b ∈ S^m}` as an inclusive interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CentralInterval {
    pub bounds: Option<(i64, i64)>,
}

impl CentralInterval {
    pub const EMPTY: CentralInterval = CentralInterval { bounds: None };

    pub fn contains(&self, r: i64) -> bool {
        matches!(self.bounds, Some((lo, hi)) if lo <= r && r <= hi)
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_none()
    }

    pub fn is_subset(&self, other: &CentralInterval) -> bool {
        match (self.bounds, other.bounds) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some((l1, h1)), Some((l2, h2))) => l2 <= l1 && h1 <= h2,
        }
    }
}

/// Central exponents reachable at time `m` over `g^a h^b`, for any integers.
pub fn central_interval(a: i64, b: i64, m: i64) -> CentralInterval {
    let (ua, ub) = (a.abs(), b.abs());
    if m < ua + ub {
        return CentralInterval::EMPTY;
    }
    let m = if (m - ua - ub) % 2 == 1 { m - 1 } else { m };
    let hi = central_max(ua, ub, m).expect("reduced arguments are valid");
    let lo = ua * ub - hi;
    let bounds = if (a < 0) != (b < 0) { (-hi, -lo) } else { (lo, hi) };
    CentralInterval { bounds: Some(bounds) }
}

fn isqrt_ceil(n: i64) -> i64 {
    let mut s = (n as f64).sqrt() as i64;
    while s * s < n {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= n {
        s -= 1;
    }
    s
}

/// Exact word length `l_S`.
pub fn word_length_exact(t: &HeisTriple) -> u64 {
    let start = t.degree();
    let stop = start + 4 * isqrt_ceil(t.r.abs()) + 8;
    let mut m = start;
    while m <= stop {
        if central_interval(t.a, t.b, m).contains(t.r) {
            return m as u64;
        }
        m += 2;
    }
    panic!("word length search for {t} exceeded the growth bound {stop}");
}

/// Exact stable length `~l_S`: the degree, or the degree plus two.
pub fn tilde_length_exact(t: &HeisTriple) -> u64 {
    let n = t.degree();
    if central_interval(t.a, t.b, n).contains(t.r) {
        n as u64
    } else {
        n as u64 + 2
    }
}

/// First-quadrant level set `{(r, a, m-a) : 0 ≤ a ≤ m, 0 ≤ r ≤ a(m-a)}`.
pub fn parabola(m: i64) -> Vec<HeisTriple> {
    let mut out = Vec::new();
    for a in 0..=m {
        for r in 0..=a * (m - a) {
            out.push(HeisTriple::new(r, a, m - a));
        }
    }
    out
}

/// Whether the level-`m` quadrant node `(r, a, m-a)` has exactly one
/// antecedent under left multiplication by `g` or `h`.
pub fn unique_antecedent(r: i64, a: i64, m: i64) -> bool {
    r < a || r > (a - 1) * (m - a)
}

/// Whether `(r, a, m-a)` belongs to the order-unit support at level `m`.
pub fn in_order_unit_set(r: i64, a: i64, m: i64) -> bool {
    (0..=m).contains(&a) && (0..=a * (m - a)).contains(&r) && (r <= a || r >= (a - 1) * (m - a))
}

#[derive(Clone, Debug)]
pub struct GdReport {
    pub m: i64,
    pub members: Vec<HeisTriple>,
    pub count: usize,
    /// Union of the four sign images of `members`.
    pub orbit: Vec<HeisTriple>,
    pub orbit_count: usize,
    /// `(m-1)(m+2)`, reported alongside the enumeration.
    pub closed_form_count: i64,
    /// `4(m^2+m-3)`, reported alongside the enumeration.
    pub closed_form_orbit_count: i64,
}

/// Enumerate the order-unit support at level `m` and its sign orbit.
pub fn order_unit_set(m: i64) -> Result<GdReport> {
    if m < 1 {
        return invalid("level must be at least 1");
    }
    let members: Vec<HeisTriple> = parabola(m)
        .into_iter()
        .filter(|t| in_order_unit_set(t.r, t.a, m))
        .collect();
    let orbit: BTreeSet<HeisTriple> = members
        .iter()
        .flat_map(|t| {
            [(1, 1), (1, -1), (-1, 1), (-1, -1)]
                .into_iter()
                .map(move |(e1, e2)| D4Symmetry::signs(e1, e2).apply(t))
        })
        .collect();
    Ok(GdReport {
        m,
        count: members.len(),
        members,
        orbit_count: orbit.len(),
        orbit: orbit.into_iter().collect(),
        closed_form_count: (m - 1) * (m + 2),
        closed_form_orbit_count: 4 * (m * m + m - 3),
    })
}

/// `∪_{u ∈ Gd(m)} Γ''_{M-m} · u = Γ''_M`.
pub fn order_unit_cover(m: i64, big_m: i64) -> Result<bool> {
    if big_m < m {
        return invalid("outer level must be at least the inner level");
    }
    let gd = order_unit_set(m)?;
    let prefix = parabola(big_m - m);
    let covered: BTreeSet<HeisTriple> = gd
        .members
        .iter()
        .flat_map(|u| prefix.iter().map(move |v| v.mul(u)))
        .collect();
    let target: BTreeSet<HeisTriple> = parabola(big_m).into_iter().collect();
    Ok(covered == target)
}

/// Shift length `⌈(m+1)(m-2)/4⌉` and whether `g^M Γ''_m ∪ h^M Γ''_m ⊆ Gd(M+m)`.
pub fn ray_shift_inclusion(m: i64) -> Result<(i64, bool)> {
    if m < 1 {
        return invalid("level must be at least 1");
    }
    let shift = Integer::div_ceil(&((m + 1) * (m - 2)), &4).max(0);
    let g_shift = HeisTriple::new(0, shift, 0);
    let h_shift = HeisTriple::new(0, 0, shift);
    let total = shift + m;
    let ok = parabola(m).iter().all(|x| {
        [g_shift.mul(x), h_shift.mul(x)]
            .iter()
            .all(|y| in_order_unit_set(y.r, y.a, total) && y.b == total - y.a)
    });
    Ok((shift, ok))
}

#[derive(Clone, Debug)]
pub struct InfinitesimalReport {
    pub r: i64,
    pub k: usize,
    /// Smallest observed multiplicity ratio, if any node qualified.
    pub min_ratio: Option<Ratio<BigInt>>,
    /// `k/2 - |r|`.
    pub bound: Ratio<BigInt>,
    pub nodes_checked: usize,
    pub pass: bool,
}

/// Multiplicities of `f = 1 + g + g⁻¹ + h + h⁻¹` satisfy
/// `m(z^r w, k+2) ≥ (k/2 - |r|) m(w, k)` whenever `z^r w` has stable length `k+2`.
pub fn infinitesimal_check(r: i64, k: usize) -> Result<InfinitesimalReport> {
    if r == 0 {
        return invalid("central exponent must be nonzero");
    }
    if (k as i64) <= 2 * r.abs() {
        return invalid(format!("need k > 2|r|, got k={k}, r={r}"));
    }
    let f: Vec<(HeisTriple, BigUint)> = [
        HeisTriple::IDENTITY,
        HeisTriple::G,
        HeisTriple::G.inv(),
        HeisTriple::H,
        HeisTriple::H.inv(),
    ]
    .into_iter()
    .map(|s| (s, BigUint::one()))
    .collect();
    let powers = group_ring_powers(&Heisenberg, &f, k + 2);
    let bound = Ratio::new(BigInt::from(k as i64 - 2 * r.abs()), BigInt::from(2));
    let central = HeisTriple::new(r, 0, 0);
    let mut min_ratio: Option<Ratio<BigInt>> = None;
    let mut nodes_checked = 0;
    for (w, mult) in &powers[k] {
        let x = central.mul(w);
        if tilde_length_exact(&x) != k as u64 + 2 {
            continue;
        }
        nodes_checked += 1;
        let top = powers[k + 2].get(&x).cloned().unwrap_or_else(BigUint::zero);
        let ratio = Ratio::new(BigInt::from(top), BigInt::from(mult.clone()));
        if min_ratio.as_ref().is_none_or(|m| ratio < *m) {
            min_ratio = Some(ratio);
        }
    }
    let pass = min_ratio.as_ref().is_none_or(|m| *m >= bound);
    Ok(InfinitesimalReport { r, k, min_ratio, bound, nodes_checked, pass })
}

/// `z^{2k} g^{2k} h^{2k+1}`.
pub fn witness_element(k: i64) -> HeisTriple {
    HeisTriple::new(2 * k, 2 * k, 2 * k + 1)
}

/// Support of `(g + h)^len`, enumerated by repeated left multiplication.
pub fn forward_support(len: usize) -> FxHashSet<HeisTriple> {
    let mut cur: FxHashSet<HeisTriple> = std::iter::once(HeisTriple::IDENTITY).collect();
    for _ in 0..len {
        cur = cur
            .iter()
            .flat_map(|w| [HeisTriple::G.mul(w), HeisTriple::H.mul(w)])
            .collect();
    }
    cur
}

/// Whether `g^M w(n)` avoids `supp (g+h)^{M+4i} · w(n-i)` for all `1 ≤ i < n`.
pub fn nonnoetherian_witness(n: i64, big_m: i64) -> Result<bool> {
    if n < 2 {
        return invalid("witness index must be at least 2");
    }
    if big_m < 1 {
        return invalid("shift must be at least 1");
    }
    let x = HeisTriple::new(0, big_m, 0).mul(&witness_element(n));
    for i in 1..n {
        let base = witness_element(n - i);
        let support = forward_support((big_m + 4 * i) as usize);
        if support.iter().any(|u| u.mul(&base) == x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every level-`k` quadrant node has a path to `(r, a, m-a)`.
pub fn antecedents_fill_level(r: i64, a: i64, m: i64, k: i64) -> Result<bool> {
    if !(0..=m).contains(&a) || !(0..=a * (m - a)).contains(&r) {
        return invalid(format!("({r},{a},{}) is not a level-{m} quadrant node", m - a));
    }
    if !(0 < k && k < m) {
        return invalid(format!("need 0 < k < m, got k={k}, m={m}"));
    }
    Ok(k <= a && a <= m - k && k * (m - a) <= r && r <= a * (m - a) - a * k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_max_examples() {
        assert_eq!(central_max(2, 1, 3).unwrap(), 2);
        assert_eq!(central_interval(2, 1, 3).bounds, Some((0, 2)));
        assert_eq!(central_max(1, 1, 4).unwrap(), 2);
        for m in (0..40).step_by(2) {
            assert_eq!(central_max(0, 0, m).unwrap(), (m / 4) * ((m + 3) / 4));
        }
        assert!(central_max(1, 1, 3).is_err());
        assert!(central_max(-1, 1, 4).is_err());
    }

    #[test]
    fn interval_examples() {
        assert_eq!(central_interval(1, 0, 3).bounds, Some((-1, 1)));
        assert_eq!(central_interval(0, 2, 4).bounds, Some((-2, 2)));
        assert_eq!(central_interval(1, 1, 2).bounds, Some((0, 1)));
        assert!(central_interval(3, 2, 4).is_empty());
    }

    #[test]
    fn length_examples() {
        assert_eq!(word_length_exact(&HeisTriple::Z), 4);
        assert_eq!(word_length_exact(&HeisTriple::new(0, 3, 5)), 8);
        assert_eq!(word_length_exact(&HeisTriple::new(2, 1, 1)), 4);
        assert_eq!(tilde_length_exact(&HeisTriple::new(5, 0, 0)), 2);
        assert_eq!(tilde_length_exact(&HeisTriple::new(0, 1, 1)), 2);
        assert_eq!(tilde_length_exact(&HeisTriple::new(-1, 1, 1)), 4);
    }

    #[test]
    fn order_unit_small_levels() {
        let r = order_unit_set(1).unwrap();
        assert_eq!(r.members, vec![HeisTriple::new(0, 0, 1), HeisTriple::new(0, 1, 0)]);
        let r5 = order_unit_set(5).unwrap();
        assert_eq!(r5.closed_form_count, 28);
        assert!(r5.members.contains(&HeisTriple::new(0, 0, 5)));
        assert!(r5.members.contains(&HeisTriple::new(0, 5, 0)));
    }

    #[test]
    fn infinitesimal_precondition() {
        assert!(infinitesimal_check(1, 2).is_err());
        assert!(infinitesimal_check(0, 8).is_err());
    }

    #[test]
    fn witness_preconditions() {
        assert!(nonnoetherian_witness(1, 3).is_err());
        assert!(nonnoetherian_witness(2, 1).unwrap());
    }

    #[test]
    fn antecedent_criterion_examples() {
        assert!(antecedents_fill_level(8, 4, 8, 2).unwrap());
        assert!(!antecedents_fill_level(0, 3, 7, 1).unwrap());
        assert!(!antecedents_fill_level(2, 2, 8, 5).unwrap());
    }
}
