//! Trace families on the quadrant diagram of `(g+h)^m`: lower and upper
//! discrete traces, multiplicative traces and faithful traces.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::group_core::{group_ring_powers, D4Symmetry, HeisTriple, Heisenberg};
use crate::heisenberg::{parabola, tilde_length_exact};
use crate::partitions::{ln_big, PartitionTable};

/// A trace parameter given exactly or as a float.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(x) => *x,
        }
    }

    pub fn exact(num: i64, den: i64) -> Scalar {
        Scalar::Exact(BigRational::new(num.into(), den.into()))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(q) => write!(f, "{q}"),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| Error::InvalidArgument(format!("bad rational {s}")))?;
            let d: BigInt = d.trim().parse().map_err(|_| Error::InvalidArgument(format!("bad rational {s}")))?;
            if d.is_zero() {
                return invalid("zero denominator");
            }
            return Ok(Scalar::Exact(BigRational::new(n, d)));
        }
        if let Ok(n) = s.parse::<BigInt>() {
            return Ok(Scalar::Exact(BigRational::from_integer(n)));
        }
        s.parse::<f64>()
            .map(Scalar::Float)
            .map_err(|_| Error::InvalidArgument(format!("bad number {s}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum TraceSpec {
    /// Path trace starting at `(r, r, b)` and running along the `g`-ray.
    LowerDiscrete { r: i64, b: i64 },
    /// Path trace starting at `((c-1)d, c, d)` and running along the `h`-ray.
    UpperDiscrete { c: i64, d: i64 },
    /// `t^a (1-t)^b`, with `t` on the `g`-exponent.
    Multiplicative(Scalar),
    /// `x^a y^b / (1 + x + 1/x + y + 1/y)^k` on arbitrary triples.
    Faithful { x: Scalar, y: Scalar },
}

impl TraceSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            TraceSpec::LowerDiscrete { r, b } => {
                if *r < 0 || *b < 0 {
                    return invalid("discrete trace parameters must be nonnegative");
                }
                if *b == 0 && *r > 0 {
                    return invalid(format!("lower trace with r={r} needs b ≥ 1"));
                }
            }
            TraceSpec::UpperDiscrete { c, d } => TraceSpec::LowerDiscrete { r: *d, b: *c }.validate()?,
            TraceSpec::Multiplicative(t) => {
                let ok = match t {
                    Scalar::Exact(q) => !q.is_negative() && *q <= BigRational::one(),
                    Scalar::Float(x) => (0.0..=1.0).contains(x),
                };
                if !ok {
                    return invalid(format!("multiplicative parameter {t} outside [0,1]"));
                }
            }
            TraceSpec::Faithful { x, y } => {
                if x.to_f64().partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater)
                    || y.to_f64().partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater)
                {
                    return invalid("faithful trace parameters must be positive");
                }
            }
        }
        Ok(())
    }

    fn is_exact(&self) -> bool {
        match self {
            TraceSpec::LowerDiscrete { .. } | TraceSpec::UpperDiscrete { .. } => true,
            TraceSpec::Multiplicative(t) => matches!(t, Scalar::Exact(_)),
            TraceSpec::Faithful { x, y } => matches!((x, y), (Scalar::Exact(_), Scalar::Exact(_))),
        }
    }
}

impl fmt::Display for TraceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceSpec::LowerDiscrete { r, b } => write!(f, "lower:{r},{b}"),
            TraceSpec::UpperDiscrete { c, d } => write!(f, "upper:{c},{d}"),
            TraceSpec::Multiplicative(t) => write!(f, "mult:{t}"),
            TraceSpec::Faithful { x, y } => write!(f, "faithful:{x},{y}"),
        }
    }
}

impl FromStr for TraceSpec {
    type Err = Error;

    /// `lower:r,b`, `upper:c,d`, `mult:t`, `faithful:x,y`.
    fn from_str(s: &str) -> Result<TraceSpec> {
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidArgument(format!("trace spec {s} lacks ':'")))?;
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        let ints = || -> Result<(i64, i64)> {
            match parts.as_slice() {
                [p, q] => Ok((
                    p.parse().map_err(|_| Error::InvalidArgument(format!("bad integer {p}")))?,
                    q.parse().map_err(|_| Error::InvalidArgument(format!("bad integer {q}")))?,
                )),
                _ => invalid(format!("expected two integers in {s}")),
            }
        };
        let spec = match kind {
            "lower" => {
                let (r, b) = ints()?;
                TraceSpec::LowerDiscrete { r, b }
            }
            "upper" => {
                let (c, d) = ints()?;
                TraceSpec::UpperDiscrete { c, d }
            }
            "mult" => match parts.as_slice() {
                [t] => TraceSpec::Multiplicative(t.parse()?),
                _ => return invalid("mult takes one parameter"),
            },
            "faithful" => match parts.as_slice() {
                [x, y] => TraceSpec::Faithful { x: x.parse()?, y: y.parse()? },
                _ => return invalid("faithful takes two parameters"),
            },
            other => return invalid(format!("unknown trace family {other}")),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// A node `[w, m]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeRef {
    pub w: HeisTriple,
    pub m: i64,
}

impl NodeRef {
    pub fn new(w: HeisTriple, m: i64) -> Self {
        NodeRef { w, m }
    }

    /// A first-quadrant node at its own degree.
    pub fn quadrant(r: i64, a: i64, b: i64) -> Self {
        NodeRef { w: HeisTriple::new(r, a, b), m: a + b }
    }

    pub fn is_quadrant(&self) -> bool {
        let HeisTriple { r, a, b } = self.w;
        a >= 0 && b >= 0 && a + b == self.m && (0..=a * b).contains(&r)
    }

    pub fn successors(&self) -> [NodeRef; 2] {
        [
            NodeRef::new(HeisTriple::G.mul(&self.w), self.m + 1),
            NodeRef::new(HeisTriple::H.mul(&self.w), self.m + 1),
        ]
    }
}

/// A trace value, exact whenever the parameters are.
#[derive(Clone, Debug, PartialEq)]
pub enum TraceValue {
    Exact(BigRational),
    Float(f64),
}

impl TraceValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            TraceValue::Exact(q) => rational_to_f64(q),
            TraceValue::Float(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            TraceValue::Exact(q) => Some(q),
            TraceValue::Float(_) => None,
        }
    }
}

impl fmt::Display for TraceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceValue::Exact(q) => write!(f, "{q}"),
            TraceValue::Float(x) => write!(f, "{x}"),
        }
    }
}

/// Float value of a possibly huge rational.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let sign = if q.numer() < &BigInt::zero() { -1.0 } else { 1.0 };
    let n = q.numer().magnitude();
    if n.is_zero() {
        return 0.0;
    }
    sign * (ln_big(n) - ln_big(q.denom().magnitude())).exp()
}

/// `t^a (1-t)^b`.
pub fn multiplicative_value<T: Num + Clone>(t: &T, a: u32, b: u32) -> T {
    let co = T::one() - t.clone();
    pow(t, a) * pow(&co, b)
}

/// `x^a y^b / (1 + x + 1/x + y + 1/y)^k`.
pub fn faithful_value<T: Num + Clone>(x: &T, y: &T, a: i64, b: i64, k: u32) -> T {
    let one = T::one();
    let denom = one.clone() + x.clone() + one.clone() / x.clone() + y.clone() + one / y.clone();
    signed_pow(x, a) * signed_pow(y, b) / pow(&denom, k)
}

fn pow<T: Num + Clone>(x: &T, n: u32) -> T {
    let mut out = T::one();
    for _ in 0..n {
        out = out * x.clone();
    }
    out
}

fn signed_pow<T: Num + Clone>(x: &T, n: i64) -> T {
    let p = pow(x, n.unsigned_abs() as u32);
    if n < 0 {
        T::one() / p
    } else {
        p
    }
}

fn lower_value(table: &PartitionTable, r: i64, b: i64, node: &NodeRef) -> BigRational {
    let HeisTriple { r: big_r, a: big_a, .. } = node.w;
    let m = node.m;
    let denom = table.p2(r, b);
    let numer = if m >= r + b {
        BigUint::from((node.w == HeisTriple::new(r, m - b, b)) as u32)
    } else {
        table.p3(r - big_r - big_a * (b + big_a - m), r - big_a, b - m + big_a)
    };
    BigRational::new(numer.into(), denom.into())
}

/// Value of `spec` on `node`.
pub fn eval(table: &PartitionTable, spec: &TraceSpec, node: &NodeRef) -> Result<TraceValue> {
    spec.validate()?;
    if let TraceSpec::Faithful { x, y } = spec {
        return faithful_eval(x, y, &node.w, node.m);
    }
    if !node.is_quadrant() {
        return invalid(format!("[{}, {}] is not a quadrant node", node.w, node.m));
    }
    Ok(match spec {
        TraceSpec::LowerDiscrete { r, b } => TraceValue::Exact(lower_value(table, *r, *b, node)),
        TraceSpec::UpperDiscrete { c, d } => {
            let swapped = NodeRef::new(D4Symmetry::SWAP.apply(&node.w), node.m);
            TraceValue::Exact(lower_value(table, *d, *c, &swapped))
        }
        TraceSpec::Multiplicative(t) => {
            let (a, b) = (node.w.a as u32, node.w.b as u32);
            match t {
                Scalar::Exact(q) => TraceValue::Exact(multiplicative_value(q, a, b)),
                Scalar::Float(x) => TraceValue::Float(multiplicative_value(x, a, b)),
            }
        }
        TraceSpec::Faithful { .. } => unreachable!(),
    })
}

/// Faithful trace on `[w, k]` for any triple with `k ≥ ~l(w)`.
pub fn faithful_eval(x: &Scalar, y: &Scalar, w: &HeisTriple, k: i64) -> Result<TraceValue> {
    if x.to_f64() <= 0.0 || y.to_f64() <= 0.0 {
        return invalid("faithful trace parameters must be positive");
    }
    if k < 0 || (tilde_length_exact(w) as i64) > k {
        return invalid(format!("level {k} is below the stable length of {w}"));
    }
    Ok(match (x, y) {
        (Scalar::Exact(x), Scalar::Exact(y)) => TraceValue::Exact(faithful_value(x, y, w.a, w.b, k as u32)),
        _ => TraceValue::Float(faithful_value(&x.to_f64(), &y.to_f64(), w.a, w.b, k as u32)),
    })
}

/// Total mass `Σ p(r, a, m-a) · τ([z^r g^a h^{m-a}, m])` over level `m`.
pub fn normalization(table: &PartitionTable, spec: &TraceSpec, m: i64) -> Result<TraceValue> {
    if let TraceSpec::Faithful { x, y } = spec {
        return faithful_normalization(x, y, m as usize);
    }
    let mut exact = BigRational::zero();
    let mut float = 0.0;
    for w in parabola(m) {
        let mult = table.p3(w.r, w.a, w.b);
        match eval(table, spec, &NodeRef::new(w, m))? {
            TraceValue::Exact(q) => exact += q * BigRational::from_integer(mult.into()),
            TraceValue::Float(x) => float += x * mult.to_f64().unwrap_or(f64::INFINITY),
        }
    }
    Ok(if spec.is_exact() { TraceValue::Exact(exact) } else { TraceValue::Float(float) })
}

/// `Σ_{w ∈ supp f^k} m(w, k) τ_{x,y}([w, k])` with `f = 1 + g + g⁻¹ + h + h⁻¹`.
pub fn faithful_normalization(x: &Scalar, y: &Scalar, k: usize) -> Result<TraceValue> {
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
    let powers = group_ring_powers(&Heisenberg, &f, k);
    let mut exact = BigRational::zero();
    let mut float = 0.0;
    for (w, mult) in &powers[k] {
        match faithful_eval(x, y, w, k as i64)? {
            TraceValue::Exact(q) => exact += q * BigRational::from_integer(mult.clone().into()),
            TraceValue::Float(v) => float += v * mult.to_f64().unwrap_or(f64::INFINITY),
        }
    }
    Ok(match (x, y) {
        (Scalar::Exact(_), Scalar::Exact(_)) => TraceValue::Exact(exact),
        _ => TraceValue::Float(float),
    })
}

/// Whether the value at `node` equals the sum over its two successors.
pub fn harmonicity(table: &PartitionTable, spec: &TraceSpec, node: &NodeRef) -> Result<bool> {
    let here = eval(table, spec, node)?;
    let [sg, sh] = node.successors();
    let (vg, vh) = (eval(table, spec, &sg)?, eval(table, spec, &sh)?);
    Ok(match (here, vg, vh) {
        (TraceValue::Exact(x), TraceValue::Exact(p), TraceValue::Exact(q)) => x == p + q,
        (x, p, q) => (x.to_f64() - p.to_f64() - q.to_f64()).abs() <= 1e-12 * (1.0 + x.to_f64().abs()),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitRow {
    pub s: u64,
    pub r: i64,
    pub k: i64,
    pub t: f64,
    pub sup_error: f64,
}

/// Sup-distance between `τ_{r(s),k(s)}` and `ψ_t` over the test nodes.
pub fn limit_table(
    table: &PartitionTable,
    samples: &[(u64, i64, i64)],
    nodes: &[NodeRef],
    t: f64,
) -> Result<Vec<LimitRow>> {
    samples
        .par_iter()
        .map(|&(s, r, k)| {
            let discrete = TraceSpec::LowerDiscrete { r, b: k };
            let multiplicative = TraceSpec::Multiplicative(Scalar::Float(t));
            let mut sup_error: f64 = 0.0;
            for node in nodes {
                let d = eval(table, &discrete, node)?.to_f64();
                let p = eval(table, &multiplicative, node)?.to_f64();
                sup_error = sup_error.max((d - p).abs());
            }
            Ok(LimitRow { s, r, k, t, sup_error })
        })
        .collect()
}

/// The five small test nodes `g, h, gh, zgh, g²h`.
pub fn standard_test_nodes() -> Vec<NodeRef> {
    vec![
        NodeRef::quadrant(0, 1, 0),
        NodeRef::quadrant(0, 0, 1),
        NodeRef::quadrant(0, 1, 1),
        NodeRef::quadrant(1, 1, 1),
        NodeRef::quadrant(0, 2, 1),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn path_picks() {
        let t = PartitionTable::new();
        let spec = TraceSpec::LowerDiscrete { r: 0, b: 0 };
        assert_eq!(eval(&t, &spec, &NodeRef::quadrant(0, 5, 0)).unwrap(), TraceValue::Exact(q(1, 1)));
        assert_eq!(eval(&t, &spec, &NodeRef::quadrant(0, 4, 1)).unwrap(), TraceValue::Exact(q(0, 1)));
        let spec = TraceSpec::LowerDiscrete { r: 1, b: 1 };
        for m in 2..8 {
            assert_eq!(eval(&t, &spec, &NodeRef::quadrant(1, m - 1, 1)).unwrap(), TraceValue::Exact(q(1, 1)));
        }
    }

    #[test]
    fn multiplicative_half() {
        let t = PartitionTable::new();
        let spec = TraceSpec::Multiplicative(Scalar::exact(1, 2));
        assert_eq!(eval(&t, &spec, &NodeRef::quadrant(2, 2, 3)).unwrap(), TraceValue::Exact(q(1, 32)));
    }

    #[test]
    fn normalizations() {
        let t = PartitionTable::new();
        for spec in [
            TraceSpec::LowerDiscrete { r: 1, b: 1 },
            TraceSpec::UpperDiscrete { c: 0, d: 0 },
            TraceSpec::LowerDiscrete { r: 3, b: 2 },
            TraceSpec::Multiplicative(Scalar::exact(2, 7)),
        ] {
            assert_eq!(normalization(&t, &spec, 6).unwrap(), TraceValue::Exact(q(1, 1)), "{spec:?}");
        }
    }

    #[test]
    fn faithful_examples() {
        let one = Scalar::exact(1, 1);
        assert_eq!(
            faithful_eval(&one, &one, &HeisTriple::new(3, 0, 0), 2).unwrap(),
            TraceValue::Exact(q(1, 25))
        );
        assert_eq!(faithful_eval(&one, &one, &HeisTriple::IDENTITY, 0).unwrap(), TraceValue::Exact(q(1, 1)));
        assert!(faithful_eval(&Scalar::exact(-1, 1), &one, &HeisTriple::IDENTITY, 0).is_err());
        assert_eq!(
            faithful_normalization(&Scalar::exact(2, 3), &Scalar::exact(5, 4), 4).unwrap(),
            TraceValue::Exact(q(1, 1))
        );
    }

    #[test]
    fn parse_specs() {
        assert_eq!("lower:2,3".parse::<TraceSpec>().unwrap(), TraceSpec::LowerDiscrete { r: 2, b: 3 });
        assert!("lower:2,0".parse::<TraceSpec>().is_err());
        assert!("mult:3/2".parse::<TraceSpec>().is_err());
        assert_eq!("mult:0.25".parse::<TraceSpec>().unwrap(), TraceSpec::Multiplicative(Scalar::Float(0.25)));
    }

    #[test]
    fn harmonic_on_small_levels() {
        let t = PartitionTable::new();
        let spec = TraceSpec::LowerDiscrete { r: 2, b: 3 };
        for m in 0..8 {
            for w in parabola(m) {
                assert!(harmonicity(&t, &spec, &NodeRef::new(w, m)).unwrap(), "{w} at {m}");
            }
        }
    }
}
