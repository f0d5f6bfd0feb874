//! Restricted partition numbers `p(r, a, b)`: partitions of `r` into at most
//! `a` parts, each at most `b`. These are the coefficients of the Gaussian
//! binomial `[a+b choose a]_q` and of `(g+h)^{a+b}` in the Heisenberg group.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::{Arc, Mutex};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group_core::HeisTriple;

/// Gaussian polynomials with `k(n-k)` above this are not tabulated; single
/// coefficients are then taken from a truncated product expansion.
pub const POLYNOMIAL_DEGREE_LIMIT: u64 = 1024;

type Polynomial = Arc<Vec<BigUint>>;

/// Memo of Gaussian binomial polynomials, safe for concurrent use.
#[derive(Debug, Default)]
pub struct PartitionTable {
    gauss: Mutex<FxHashMap<(u32, u32), Polynomial>>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    entries: Vec<(u32, u32, Vec<String>)>,
}

const CACHE_VERSION: u32 = 1;

impl PartitionTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Coefficients of `[n choose k]_q`, built by the q-Pascal rule
    /// `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
    pub fn gaussian_binomial(&self, n: u32, k: u32) -> Arc<Vec<BigUint>> {
        if k > n {
            return Arc::new(Vec::new());
        }
        let k = k.min(n - k);
        if let Some(p) = self.gauss.lock().unwrap().get(&(n, k)) {
            return p.clone();
        }
        // Build iteratively over n so the recursion depth stays bounded.
        let mut row: Vec<Arc<Vec<BigUint>>> = vec![Arc::new(vec![BigUint::one()])];
        for nn in 1..=n {
            let mut next = Vec::with_capacity(row.len() + 1);
            let top = k.min(nn);
            for kk in 0..=top {
                if let Some(p) = self.lookup(nn, kk) {
                    next.push(p);
                    continue;
                }
                let poly = if kk == 0 || kk == nn {
                    vec![BigUint::one()]
                } else {
                    let left = &row[(kk - 1) as usize];
                    let right = row.get(kk as usize);
                    let deg = (kk * (nn - kk)) as usize;
                    let mut poly = vec![BigUint::zero(); deg + 1];
                    for (i, c) in left.iter().enumerate() {
                        poly[i] += c;
                    }
                    if let Some(right) = right {
                        for (i, c) in right.iter().enumerate() {
                            poly[i + kk as usize] += c;
                        }
                    }
                    poly
                };
                let poly = Arc::new(poly);
                self.store(nn, kk, poly.clone());
                next.push(poly);
            }
            row = next;
        }
        row[k as usize].clone()
    }

    fn lookup(&self, n: u32, k: u32) -> Option<Arc<Vec<BigUint>>> {
        let kk = k.min(n - k);
        let guard = self.gauss.lock().unwrap();
        let p = guard.get(&(n, kk))?.clone();
        Some(p)
    }

    fn store(&self, n: u32, k: u32, p: Arc<Vec<BigUint>>) {
        if k <= n - k {
            self.gauss.lock().unwrap().insert((n, k), p);
        }
    }

    /// `p(r, a, b)`; zero outside `0 ≤ r ≤ ab` or for negative bounds.
    pub fn p3(&self, r: i64, a: i64, b: i64) -> BigUint {
        if r < 0 || a < 0 || b < 0 || r > a.saturating_mul(b) {
            return BigUint::zero();
        }
        if r == 0 {
            return BigUint::one();
        }
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if (lo as u64) * (hi as u64) <= POLYNOMIAL_DEGREE_LIMIT {
            let poly = self.gaussian_binomial((a + b) as u32, lo as u32);
            return poly[r as usize].clone();
        }
        bounded_partition_count(r, lo, hi)
    }

    /// `p(r, b) = p(r, r, b)`: partitions of `r` with parts at most `b`.
    pub fn p2(&self, r: i64, b: i64) -> BigUint {
        self.p3(r, r, b)
    }

    /// Multiplicities of the level-`m` quadrant nodes taken from the table.
    pub fn slice(&self, m: i64) -> CoeffSlice {
        let mut mult = BTreeMap::new();
        for a in 0..=m {
            for r in 0..=a * (m - a) {
                mult.insert(HeisTriple::new(r, a, m - a), self.p3(r, a, m - a));
            }
        }
        CoeffSlice { level: m, mult }
    }

    pub fn len(&self) -> usize {
        self.gauss.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Load a JSON memo written by [`PartitionTable::save`].
    pub fn load(path: &Path) -> Result<Self> {
        let file: CacheFile = serde_json::from_reader(std::io::BufReader::new(std::fs::File::open(path)?))?;
        if file.version != CACHE_VERSION {
            return Err(crate::error::Error::InvalidArgument(format!(
                "cache version {} (expected {CACHE_VERSION})",
                file.version
            )));
        }
        let table = PartitionTable::new();
        {
            let mut guard = table.gauss.lock().unwrap();
            for (n, k, coeffs) in file.entries {
                let poly = coeffs
                    .iter()
                    .map(|c| c.parse::<BigUint>().map_err(|e| crate::error::Error::InvalidArgument(e.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                guard.insert((n, k), Arc::new(poly));
            }
        }
        Ok(table)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let guard = self.gauss.lock().unwrap();
        let mut entries: Vec<(u32, u32, Vec<String>)> = guard
            .iter()
            .map(|(&(n, k), p)| (n, k, p.iter().map(|c| c.to_string()).collect()))
            .collect();
        entries.sort_by_key(|e| (e.0, e.1));
        let file = CacheFile { version: CACHE_VERSION, entries };
        serde_json::to_writer(std::io::BufWriter::new(std::fs::File::create(path)?), &file)?;
        Ok(())
    }
}

/// Coefficient of `q^r` in `∏_{i=1}^{lo} (1 - q^{hi+i}) / (1 - q^i)`, computed
/// on series truncated at degree `r`.
pub fn bounded_partition_count(r: i64, lo: i64, hi: i64) -> BigUint {
    let n = r as usize;
    let mut series = vec![BigInt::zero(); n + 1];
    series[0] = BigInt::one();
    for i in 1..=lo as usize {
        let shift = hi as usize + i;
        if shift <= n {
            for d in (shift..=n).rev() {
                let v = series[d - shift].clone();
                series[d] -= v;
            }
        }
    }
    for i in 1..=lo.min(r) as usize {
        for d in i..=n {
            let v = series[d - i].clone();
            series[d] += v;
        }
    }
    let c = &series[n];
    debug_assert!(!c.is_negative());
    c.to_biguint().expect("partition count is nonnegative")
}

/// Multiplicities of the level-`m` quadrant nodes in `(g+h)^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffSlice {
    pub level: i64,
    pub mult: BTreeMap<HeisTriple, BigUint>,
}

/// Expand `(g+h)^m` by repeated left multiplication in normal form.
pub fn coeff_oracle(m: usize) -> CoeffSlice {
    let mut cur: FxHashMap<HeisTriple, BigUint> = FxHashMap::default();
    cur.insert(HeisTriple::IDENTITY, BigUint::one());
    for _ in 0..m {
        let mut next: FxHashMap<HeisTriple, BigUint> = FxHashMap::default();
        for (w, c) in &cur {
            for s in [HeisTriple::G, HeisTriple::H] {
                *next.entry(s.mul(w)).or_default() += c;
            }
        }
        cur = next;
    }
    CoeffSlice { level: m as i64, mult: cur.into_iter().collect() }
}

/// `p(r±1, a, b) ≤ 2 p(r, a, b)` for all `1 ≤ r ≤ ab - 1`.
pub fn ratio_check(table: &PartitionTable, a: i64, b: i64) -> bool {
    (1..a * b).all(|r| {
        let twice = table.p3(r, a, b) * 2u32;
        table.p3(r - 1, a, b) <= twice && table.p3(r + 1, a, b) <= twice
    })
}

/// Whether `r ↦ p(r, a, b)` is unimodal on `0..=ab`.
pub fn is_unimodal(table: &PartitionTable, a: i64, b: i64) -> bool {
    let values: Vec<BigUint> = (0..=a * b).map(|r| table.p3(r, a, b)).collect();
    let peak = values
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.cmp(y.1).then(y.0.cmp(&x.0)))
        .map(|(i, _)| i)
        .unwrap_or(0);
    values[..=peak].windows(2).all(|w| w[0] <= w[1]) && values[peak..].windows(2).all(|w| w[0] >= w[1])
}

/// Natural logarithm of a big unsigned integer.
pub fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let t = PartitionTable::new();
        assert_eq!(t.p3(0, 3, 4), BigUint::one());
        assert_eq!(t.p3(2, 2, 2), BigUint::from(2u32));
        assert_eq!(t.p3(1, 1, 1), BigUint::one());
        assert_eq!(t.p2(4, 2), BigUint::from(3u32));
        assert_eq!(t.p2(3, 0), BigUint::zero());
        assert_eq!(t.p2(0, 0), BigUint::one());
        assert_eq!(t.p3(5, -1, 3), BigUint::zero());
        assert_eq!(t.p3(13, 3, 4), BigUint::zero());
    }

    #[test]
    fn large_path_matches_polynomial_path() {
        let t = PartitionTable::new();
        for (r, a, b) in [(30, 10, 12), (17, 5, 40), (40, 40, 7)] {
            assert_eq!(bounded_partition_count(r, a.min(b), a.max(b)), t.p3(r, a, b));
        }
    }

    #[test]
    fn unrestricted_limit() {
        let t = PartitionTable::new();
        assert_eq!(t.p2(10, 10), BigUint::from(42u32));
        assert_eq!(t.p2(10, 50), BigUint::from(42u32));
        assert_eq!(t.p2(100, 100).to_string(), "190569292");
    }

    #[test]
    fn oracle_level_two() {
        let s = coeff_oracle(2);
        let expect: BTreeMap<HeisTriple, BigUint> = [
            (HeisTriple::new(0, 2, 0), 1u32),
            (HeisTriple::new(0, 1, 1), 1),
            (HeisTriple::new(1, 1, 1), 1),
            (HeisTriple::new(0, 0, 2), 1),
        ]
        .into_iter()
        .map(|(k, v)| (k, BigUint::from(v)))
        .collect();
        assert_eq!(s.mult, expect);
    }

    #[test]
    fn ratio_examples() {
        let t = PartitionTable::new();
        assert!(ratio_check(&t, 3, 4));
        assert!(ratio_check(&t, 1, 1));
    }

    #[test]
    fn cache_round_trip() {
        let t = PartitionTable::new();
        t.gaussian_binomial(12, 5);
        let dir = std::env::temp_dir().join(format!("conewalk-cache-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("memo.json");
        t.save(&path).unwrap();
        let u = PartitionTable::load(&path).unwrap();
        assert_eq!(u.len(), t.len());
        assert_eq!(u.p3(7, 5, 7), t.p3(7, 5, 7));
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn big_log() {
        let x = BigUint::from(10u32).pow(400);
        assert!((ln_big(&x) - 400.0 * 10f64.ln()).abs() < 1e-9);
    }
}
