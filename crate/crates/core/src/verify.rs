//! The acceptance matrix: sixteen exact or tolerance-pinned cross-checks,
//! grouped into suites and reported in a fixed order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::{BigRational, Rational64};
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bratteli::quadrant_diagram;
use crate::error::{Error, Result};
use crate::free_realization::{verify as realize, RealizationSpec};
use crate::group_core::{FiniteGroupTable, FreeAbelian, HeisTriple, Heisenberg, ZTimesFinite};
use crate::growth::{grow, tilde_l_upper, tilde_l_upper_within, AdmissibleSet};
use crate::heisenberg::{
    antecedents_fill_level, central_interval, infinitesimal_check, nonnoetherian_witness, order_unit_cover,
    order_unit_set, parabola, ray_shift_inclusion, tilde_length_exact, unique_antecedent,
};
use crate::partitions::{coeff_oracle, is_unimodal, ratio_check, PartitionTable};
use crate::polytope::{solidity_check, fekete, gauge_vs_wordlength, simplex_lattice_set};
use crate::szekeres::{calibrate, compare, g_of, v_of};
use crate::tolerances::{
    ASYMPTOTIC_LOG_REL_TOL, DEFAULT_ELEMENT_CAP, DERIVATIVE_IDENTITY_TOL, FINITE_DIFF_STEP, FLOAT_RESOLUTION,
    LARGE_T_RATIO_FRACTION,
    LIMIT_SUP_ERROR, MONOTONE_SLACK, SMALL_T_REMAINDER_BOUND, V_AT_ONE, V_AT_ONE_TOL,
};
use crate::traces::{eval, harmonicity, limit_table, normalization, standard_test_nodes, NodeRef, Scalar, TraceSpec};

/// Criteria whose failure is documented and expected.
pub const KNOWN_DEVIATIONS: &[&str] = &["C14"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub paper_ref: String,
    pub status: Status,
    pub measured: Value,
    pub expected: Value,
    pub tolerance: Value,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_known_deviation(&self) -> bool {
        KNOWN_DEVIATIONS.contains(&self.check_id.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    All,
    Heisenberg,
    Growth,
    Partitions,
    Traces,
    Szekeres,
    Bratteli,
    Polytope,
    Realization,
}

impl Suite {
    pub const NAMES: [&'static str; 9] =
        ["all", "heisenberg", "growth", "partitions", "traces", "szekeres", "bratteli", "polytope", "realization"];

    /// Criterion numbers run by this suite.
    pub fn criteria(self) -> Vec<u8> {
        match self {
            Suite::All => (1..=16).collect(),
            Suite::Heisenberg => vec![1, 2, 9, 10, 11],
            Suite::Growth => vec![3, 15],
            Suite::Partitions => vec![4, 5],
            Suite::Traces => vec![6, 7],
            Suite::Szekeres => vec![8],
            Suite::Bratteli => vec![12, 16],
            Suite::Polytope => vec![14],
            Suite::Realization => vec![13],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "heisenberg" => Suite::Heisenberg,
            "growth" => Suite::Growth,
            "partitions" => Suite::Partitions,
            "traces" => Suite::Traces,
            "szekeres" => Suite::Szekeres,
            "bratteli" => Suite::Bratteli,
            "polytope" => Suite::Polytope,
            "realization" => Suite::Realization,
            _ => return Err(Error::InvalidArgument(format!("unknown suite '{s}'"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(Suite::NAMES[*self as usize])
    }
}

/// Short description of what a criterion exercises.
pub fn reference(id: u8) -> &'static str {
    match id {
        1 => "Heisenberg central interval formula",
        2 => "Heisenberg stable length formula",
        3 => "word length of the central generator and the integer example",
        4 => "restricted partitions as coefficients of (g+h)^m",
        5 => "partition ratio bound, symmetries and unimodality",
        6 => "discrete and multiplicative traces: normalization and harmonicity",
        7 => "discrete traces converge to multiplicative traces",
        8 => "Szekeres asymptotics and properties of v",
        9 => "order units of the Heisenberg cone",
        10 => "multiplicity inequality for central translates",
        11 => "non-noetherian witness",
        12 => "antecedent sets in the quadrant diagram",
        13 => "realization of primitive matrices over the free group",
        14 => "lattice polytopes: solidity, boundary condition, gauge",
        15 => "stable length in Z×C_n and Z×S_3",
        16 => "Bratteli cross-validation of trace paths",
        _ => "unknown",
    }
}

fn report(id: u8, pass: bool, measured: Value, expected: Value, tolerance: Value) -> CheckReport {
    CheckReport {
        check_id: format!("C{id:02}"),
        paper_ref: reference(id).to_string(),
        status: if pass { Status::Pass } else { Status::Fail },
        measured,
        expected,
        tolerance,
    }
}

fn exact() -> Value {
    json!("exact")
}

fn heis_set() -> Result<AdmissibleSet<HeisTriple>> {
    AdmissibleSet::new(
        &Heisenberg,
        vec![HeisTriple::IDENTITY, HeisTriple::G, HeisTriple::G.inv(), HeisTriple::H, HeisTriple::H.inv()],
    )
}

fn c01() -> Result<CheckReport> {
    let depth = 9i64;
    let ball = grow(&Heisenberg, &heis_set()?, depth as usize, DEFAULT_ELEMENT_CAP)?;
    let mut compared = 0u64;
    let mut mismatches = Vec::new();
    for m in 0..=depth {
        let span = m + 2;
        let rmax = m * m / 2 + 3;
        for a in -span..=span {
            for b in -(span - a.abs())..=(span - a.abs()) {
                let iv = central_interval(a, b, m);
                for r in -rmax..=rmax {
                    compared += 1;
                    let t = HeisTriple::new(r, a, b);
                    if iv.contains(r) != ball.in_ball(&t, m as usize) && mismatches.len() < 5 {
                        mismatches.push(json!([m, t.to_string()]));
                    }
                }
            }
        }
    }
    Ok(report(
        1,
        mismatches.is_empty(),
        json!({ "compared": compared, "mismatches": mismatches }),
        json!({ "mismatches": 0, "levels": "m ≤ 9" }),
        exact(),
    ))
}

fn c02() -> Result<CheckReport> {
    let triples: Vec<HeisTriple> = (-4i64..=4)
        .flat_map(|a| {
            let s = 4 - a.abs();
            (-s..=s).flat_map(move |b| (-12i64..=12).map(move |r| HeisTriple::new(r, a, b)))
        })
        .collect();
    let horizon = |t: &HeisTriple| (4 * t.r.abs() + t.a.abs() + t.b.abs() + 6) as usize;
    let max_h = triples.iter().map(horizon).max().unwrap_or(0);
    let ball = grow(&Heisenberg, &heis_set()?, max_h, DEFAULT_ELEMENT_CAP)?;
    let bad: Vec<Value> = triples
        .par_iter()
        .filter_map(|t| {
            let want = tilde_length_exact(t) as usize;
            let got = tilde_l_upper_within(&Heisenberg, &ball, t, want + 2, horizon(t)).bound();
            (got != Some(want)).then(|| json!([t.to_string(), want, got]))
        })
        .collect();
    Ok(report(
        2,
        bad.is_empty(),
        json!({ "triples": triples.len(), "ball_horizon": max_h, "disagreements": bad }),
        json!({ "disagreements": 0 }),
        exact(),
    ))
}

fn c03() -> Result<CheckReport> {
    let ball = grow(&Heisenberg, &heis_set()?, 4, DEFAULT_ELEMENT_CAP)?;
    let lz = ball.level_of(&HeisTriple::Z);
    let line = FreeAbelian { dim: 1 };
    let set = AdmissibleSet::new(&line, [-1i64, 0, 1, 3, 4].iter().map(|&x| vec![x]).collect())?;
    let zball = grow(&line, &set, 12, DEFAULT_ELEMENT_CAP)?;
    let two = vec![2i64];
    let l2 = zball.level_of(&two);
    let tl2 = tilde_l_upper(&line, &zball, &two, 2).bound();
    let pass = lz == Some(4) && l2 == Some(2) && tl2 == Some(1);
    Ok(report(
        3,
        pass,
        json!({ "l_z": lz, "l_2": l2, "tilde_l_2_witnessed": tl2 }),
        json!({ "l_z": 4, "l_2": 2, "tilde_l_2_witnessed": 1 }),
        exact(),
    ))
}

fn c04(table: &PartitionTable) -> Result<CheckReport> {
    let bad: Vec<usize> = (0..=14usize).filter(|&m| table.slice(m as i64).mult != coeff_oracle(m).mult).collect();
    let keys: usize = (0..=14i64).map(|m| parabola(m).len()).sum();
    Ok(report(
        4,
        bad.is_empty(),
        json!({ "keys": keys, "failing_levels": bad }),
        json!({ "failing_levels": [] }),
        exact(),
    ))
}

fn c05(table: &PartitionTable) -> Result<CheckReport> {
    let pairs: Vec<(i64, i64)> = (1..=400i64).flat_map(|a| (1..=400 / a).map(move |b| (a, b))).collect();
    let bad: Vec<Value> = pairs
        .par_iter()
        .filter_map(|&(a, b)| {
            let ratio = ratio_check(table, a, b);
            let symmetric = (0..=a * b).all(|r| {
                let v = table.p3(r, a, b);
                v == table.p3(r, b, a) && v == table.p3(a * b - r, a, b)
            });
            let unimodal = is_unimodal(table, a, b);
            (!(ratio && symmetric && unimodal)).then(|| json!([a, b, ratio, symmetric, unimodal]))
        })
        .collect();
    Ok(report(
        5,
        bad.is_empty(),
        json!({ "pairs": pairs.len(), "failures": bad }),
        json!({ "failures": [] }),
        exact(),
    ))
}

fn c06(table: &PartitionTable) -> Result<CheckReport> {
    let mut specs = Vec::new();
    for p in 0..=6i64 {
        for q in 0..=6i64 {
            if q == 0 && p > 0 {
                continue;
            }
            specs.push(TraceSpec::LowerDiscrete { r: p, b: q });
            specs.push(TraceSpec::UpperDiscrete { c: q, d: p });
        }
    }
    for i in 0..=8 {
        specs.push(TraceSpec::Multiplicative(Scalar::exact(i, 8)));
    }
    let depth = 20i64;
    let failures: Vec<Value> = specs
        .par_iter()
        .map(|spec| -> Result<Option<Value>> {
            for m in 0..=depth {
                let total = normalization(table, spec, m)?;
                if total.exact() != Some(&BigRational::one()) {
                    return Ok(Some(json!([spec.to_string(), "normalization", m])));
                }
                if m < depth {
                    for w in parabola(m) {
                        if !harmonicity(table, spec, &NodeRef::new(w, m))? {
                            return Ok(Some(json!([spec.to_string(), "harmonicity", w.to_string(), m])));
                        }
                    }
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(report(
        6,
        failures.is_empty(),
        json!({ "traces": specs.len(), "levels": depth, "failures": failures }),
        json!({ "normalization": "1", "harmonic": true }),
        exact(),
    ))
}

fn c07(table: &PartitionTable) -> Result<CheckReport> {
    let t = (-v_of(1.0f64)?).exp();
    let samples: Vec<(u64, i64, i64)> = (1..=6u64).map(|i| (10 * i, 100 * (i * i) as i64, 10 * i as i64)).collect();
    let rows = limit_table(table, &samples, &standard_test_nodes(), t)?;
    let errors: Vec<f64> = rows.iter().map(|r| r.sup_error).collect();
    let monotone = errors.windows(2).all(|w| w[1] <= w[0] + MONOTONE_SLACK);
    let last = errors.last().copied().unwrap_or(f64::INFINITY);
    let ray = |spec: TraceSpec, node: NodeRef| eval(table, &spec, &node).map(|v| v.to_f64());
    let g_ray = [25i64, 100, 400, 1600]
        .iter()
        .map(|&r| ray(TraceSpec::LowerDiscrete { r, b: 3 }, NodeRef::quadrant(0, 1, 0)))
        .collect::<Result<Vec<f64>>>()?;
    let h_ray = [8i64, 16, 32, 64]
        .iter()
        .map(|&b| ray(TraceSpec::LowerDiscrete { r: 3, b }, NodeRef::quadrant(0, 0, 1)))
        .collect::<Result<Vec<f64>>>()?;
    let concentrates = |v: &[f64]| {
        v.windows(2).all(|w| w[1] >= w[0] - MONOTONE_SLACK) && v.last().is_some_and(|&x| x >= 0.99)
    };
    let pass = monotone && last < LIMIT_SUP_ERROR && concentrates(&g_ray) && concentrates(&h_ray);
    Ok(report(
        7,
        pass,
        json!({ "t": t, "sup_errors": errors, "g_ray_k3": g_ray, "h_ray_r3": h_ray }),
        json!({ "sup_errors": "nonincreasing", "ray_values": "nondecreasing towards 1" }),
        json!({ "final_sup_error": LIMIT_SUP_ERROR, "final_ray_value": 0.99 }),
    ))
}

fn c08(table: &PartitionTable) -> Result<CheckReport> {
    let cal = calibrate(table)?;
    let comps = [(2000, 50), (3600, 60)]
        .iter()
        .map(|&(r, k)| compare(table, r, k, cal.sign))
        .collect::<Result<Vec<_>>>()?;
    let asymptotic_ok = comps.iter().all(|c| c.relative_error < ASYMPTOTIC_LOG_REL_TOL);
    let small = (1..=20)
        .map(|i| {
            let t = 0.01 * i as f64;
            Ok((v_of(t)? - t * t * (1.0 - t * t / 4.0)).abs() / t.powi(6))
        })
        .collect::<Result<Vec<f64>>>()?;
    let small_max = small.iter().copied().fold(0.0, f64::max);
    let limit = std::f64::consts::PI / 6f64.sqrt();
    let ratios = (0..=40)
        .map(|i| {
            let t = 10f64.powf(-2.0 + 0.1 * i as f64);
            Ok(v_of(t)? / t)
        })
        .collect::<Result<Vec<f64>>>()?;
    let slack = FLOAT_RESOLUTION * limit;
    let ratio_ok = ratios.windows(2).all(|w| w[1] > w[0] - slack) && ratios.iter().all(|&x| x < limit + slack);
    let at_100 = *ratios.last().unwrap();
    let v1 = v_of(1.0f64)?;
    let h = FINITE_DIFF_STEP;
    let derivative = [0.3f64, 1.0, 3.0]
        .iter()
        .map(|&t| {
            let dg = (g_of(t + h)? - g_of(t - h)?) / (2.0 * h);
            Ok((t * t * dg - (t * g_of(t)? - 2.0 * v_of(t)?)).abs())
        })
        .collect::<Result<Vec<f64>>>()?;
    let derivative_max = derivative.iter().copied().fold(0.0, f64::max);
    let pass = asymptotic_ok
        && small_max <= SMALL_T_REMAINDER_BOUND
        && ratio_ok
        && at_100 > LARGE_T_RATIO_FRACTION * limit
        && (v1 - V_AT_ONE).abs() <= V_AT_ONE_TOL
        && derivative_max <= DERIVATIVE_IDENTITY_TOL;
    Ok(report(
        8,
        pass,
        json!({
            "sign": cal.sign,
            "relative_errors": comps.iter().map(|c| json!([c.r, c.k, c.relative_error])).collect::<Vec<_>>(),
            "small_t_remainder_max": small_max,
            "ratio_monotone_below_limit": ratio_ok,
            "ratio_at_100": at_100,
            "v_1": v1,
            "derivative_identity_max": derivative_max,
        }),
        json!({ "ratio_limit": limit, "v_1": V_AT_ONE }),
        json!({
            "relative_error": ASYMPTOTIC_LOG_REL_TOL,
            "small_t_remainder": SMALL_T_REMAINDER_BOUND,
            "ratio_fraction_at_100": LARGE_T_RATIO_FRACTION,
            "ratio_relative_resolution": FLOAT_RESOLUTION,
            "v_1": V_AT_ONE_TOL,
            "derivative_identity": DERIVATIVE_IDENTITY_TOL,
        }),
    ))
}

fn c09() -> Result<CheckReport> {
    let covers = [(3, 7), (4, 9), (5, 11)]
        .iter()
        .map(|&(m, big)| order_unit_cover(m, big))
        .collect::<Result<Vec<bool>>>()?;
    let shifts = (1..=5).map(ray_shift_inclusion).collect::<Result<Vec<(i64, bool)>>>()?;
    let gd = (1..=12).map(order_unit_set).collect::<Result<Vec<_>>>()?;
    let quadratic = gd.iter().filter(|g| g.m >= 4).all(|g| {
        let sq = (g.m * g.m) as f64;
        let (c, o) = (g.count as f64 / sq, g.orbit_count as f64 / sq);
        (0.5..=2.0).contains(&c) && (2.0..=8.0).contains(&o)
    });
    let pass = covers.iter().all(|&c| c) && shifts.iter().all(|s| s.1) && quadratic;
    Ok(report(
        9,
        pass,
        json!({
            "cover": covers,
            "ray_shift": shifts,
            "gd_counts": gd.iter().map(|g| json!([g.m, g.count, g.closed_form_count, g.orbit_count, g.closed_form_orbit_count])).collect::<Vec<_>>(),
        }),
        json!({ "cover": [true, true, true], "ray_shift": "all true", "growth": "quadratic" }),
        json!({ "count_over_m2": [0.5, 2.0], "orbit_over_m2": [2.0, 8.0], "closed_forms": "reported only" }),
    ))
}

fn c10() -> Result<CheckReport> {
    let mut rows = Vec::new();
    let mut pass = true;
    for r in [1i64, 2, -1] {
        for k in [8usize, 10, 12] {
            let rep = infinitesimal_check(r, k)?;
            pass &= rep.pass && rep.nodes_checked > 0;
            rows.push(json!([r, k, rep.nodes_checked, rep.min_ratio.map(|q| q.to_string()), rep.bound.to_string()]));
        }
    }
    Ok(report(10, pass, json!({ "rows": rows }), json!({ "min_ratio": "≥ k/2 - |r|" }), exact()))
}

fn c11() -> Result<CheckReport> {
    let cases: Vec<(i64, i64)> = (1..=6).map(|m| (2, m)).chain((1..=2).map(|m| (3, m))).collect();
    let results = cases
        .iter()
        .map(|&(n, m)| nonnoetherian_witness(n, m).map(|ok| json!([n, m, ok])))
        .collect::<Result<Vec<_>>>()?;
    let pass = results.iter().all(|v| v[2] == json!(true));
    Ok(report(11, pass, json!({ "cases": results }), json!({ "all": true }), exact()))
}

fn c12() -> Result<CheckReport> {
    let depth = 8usize;
    let diag = quadrant_diagram(depth);
    let mut compared = 0usize;
    let mut bad = Vec::new();
    for m in 2..=depth {
        for w in &diag.levels[m] {
            for k in 1..m {
                let set = diag.antecedent_set(w, m, k)?;
                let full = set.len() == diag.levels[k].len();
                let predicted = antecedents_fill_level(w.r, w.a, m as i64, k as i64)?;
                compared += 1;
                if full != predicted && bad.len() < 5 {
                    bad.push(json!([w.to_string(), m, k, full, predicted]));
                }
            }
        }
    }
    Ok(report(
        12,
        bad.is_empty(),
        json!({ "compared": compared, "mismatches": bad }),
        json!({ "mismatches": [] }),
        exact(),
    ))
}

fn c13() -> Result<CheckReport> {
    let matrices = [vec![vec![1u8, 1], vec![1, 1]], vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 1]]];
    let mut rows = Vec::new();
    let mut pass = true;
    for b in matrices {
        let spec = RealizationSpec::build(b.clone())?;
        let reps = realize(&spec, 4)?;
        let ok = spec.is_symmetric()
            && spec.coefficients_are_binary()
            && reps.iter().all(|r| r.transition_ok && r.isolated);
        pass &= ok;
        rows.push(json!({
            "matrix": b,
            "transition_ok": reps.iter().map(|r| r.transition_ok).collect::<Vec<_>>(),
            "isolated": reps.iter().map(|r| r.isolated).collect::<Vec<_>>(),
            "top_degree_ok": reps.iter().map(|r| r.top_degree_ok).collect::<Vec<_>>(),
            "anchors_at_level_n": reps.iter().map(|r| r.in_level).collect::<Vec<_>>(),
        }));
    }
    Ok(report(
        13,
        pass,
        json!({ "matrices": rows }),
        json!({ "transition": "equals B for n ≤ 4", "isolated": true }),
        exact(),
    ))
}

fn c14() -> Result<CheckReport> {
    let n_max = 40usize;
    let mut rows = Vec::new();
    let mut pass = true;
    for m in 7..=11i64 {
        let set = simplex_lattice_set(&[2, 3, m])?
            .ok_or_else(|| Error::InvalidArgument(format!("simplex (2,3,{m}) rejected")))?;
        let rep = solidity_check::<Rational64>(&set)?;
        let ii = rep.first_failure_ii();
        let mut row = json!({
            "m": m,
            "points": set.len(),
            "cond0": rep.cond0,
            "cond_i": rep.cond_i.iter().all(|c| c.pass),
            "cond_ii": ii.is_none(),
            "first_failure_ii": ii.map(|c| json!({ "level": c.m, "witness": c.witness })),
        });
        if m <= 10 {
            pass &= rep.overall;
        } else {
            pass &= ii.is_some_and(|c| c.m == 2 && c.witness.is_some());
        }
        if rep.overall {
            let gauge = gauge_vs_wordlength::<Rational64>(&set, 5)?;
            let samples = vec![vec![-1, -1, -1], vec![1, -1, -1], vec![-1, 2, -1], vec![-1, -1, m - 1], vec![-1, 0, 2]];
            let fek = fekete::<Rational64>(&set, &samples, n_max)?;
            let worst = fek.iter().map(|f| f.final_gap).fold(0.0, f64::max);
            pass &= gauge.mismatches == 0 && worst <= 1.0 / n_max as f64;
            row["gauge_mismatches"] = json!(gauge.mismatches);
            row["fekete_worst_gap"] = json!(worst);
        } else if let Some(c) = ii {
            let k = crate::polytope::LatticePolytope::<Rational64>::hull(
                &set.iter().map(|p| p.iter().map(|&c| Rational64::from_integer(c)).collect()).collect::<Vec<_>>(),
            )?;
            if let Some(w) = &c.witness {
                row["witness_gauge"] = json!(k.gauge_int(w).to_string());
            }
        }
        rows.push(row);
    }
    Ok(report(
        14,
        pass,
        json!({ "cases": rows }),
        json!({ "pass": [7, 8, 9, 10], "fail_ii_level_2": 11, "gauge_mismatches": 0 }),
        json!({ "fekete_gap": 1.0 / n_max as f64 }),
    ))
}

fn finite_tilde(group: &ZTimesFinite, gens: Vec<(i64, usize)>, targets: &[((i64, usize), usize)]) -> Result<Vec<Value>> {
    let set = AdmissibleSet::new(group, gens)?;
    let ball = grow(group, &set, 30, DEFAULT_ELEMENT_CAP)?;
    Ok(targets
        .iter()
        .map(|(x, want)| {
            let got = tilde_l_upper(group, &ball, x, want + 2).bound();
            json!({ "element": [x.0, x.1], "expected": want, "witnessed": got })
        })
        .collect())
}

fn c15() -> Result<CheckReport> {
    let mut rows = Vec::new();
    for n in [3usize, 4] {
        let group = ZTimesFinite { table: FiniteGroupTable::cyclic(n)? };
        let gens = vec![(0, 0), (1, 0), (-1, 0), (0, 1)];
        let targets: Vec<((i64, usize), usize)> = (1..n).map(|s| ((0, s), s)).collect();
        rows.extend(finite_tilde(&group, gens, &targets)?);
    }
    let perms = FiniteGroupTable::permutation_list(3);
    let find = |p: [usize; 3]| perms.iter().position(|q| q[..] == p[..]).expect("permutation present");
    let group = ZTimesFinite { table: FiniteGroupTable::symmetric(3)? };
    let (id, sigma, tau) = (find([0, 1, 2]), find([1, 2, 0]), find([1, 0, 2]));
    let sigma2 = group.table.mul(sigma, sigma);
    let gens = vec![(0, id), (1, id), (-1, id), (0, sigma), (0, tau)];
    rows.extend(finite_tilde(&group, gens, &[((0, sigma), 1), ((0, sigma2), 2)])?);
    let pass = rows.iter().all(|r| r["witnessed"] == r["expected"]);
    Ok(report(15, pass, json!({ "elements": rows }), json!({ "witnessed": "equals expected" }), exact()))
}

fn c16() -> Result<CheckReport> {
    let depth = 12usize;
    let diag = quadrant_diagram(depth);
    let paths = diag.trace_paths(depth);
    let found: BTreeSet<(usize, HeisTriple)> = paths.iter().map(|p| (p.start_level, *p.start())).collect();
    let mut predicted = BTreeSet::new();
    predicted.insert((0usize, HeisTriple::IDENTITY));
    let mut degenerate = 0usize;
    for level in 2..depth as i64 {
        for a in 1..level {
            let b = level - a;
            for r in [a, (a - 1) * b] {
                if a <= (a - 1) * b {
                    predicted.insert((level as usize, HeisTriple::new(r, a, b)));
                } else {
                    degenerate += 1;
                }
            }
        }
    }
    let missing: Vec<String> = predicted.difference(&found).map(|(l, t)| format!("{t}@{l}")).collect();
    let extra: Vec<String> = found.difference(&predicted).map(|(l, t)| format!("{t}@{l}")).collect();
    let mut predicate_bad = Vec::new();
    for level in 1..=depth {
        let got: BTreeSet<HeisTriple> = diag.unique_antecedent_nodes(level).into_iter().collect();
        let want: BTreeSet<HeisTriple> = diag.levels[level]
            .iter()
            .filter(|w| unique_antecedent(w.r, w.a, level as i64))
            .copied()
            .collect();
        if got != want {
            predicate_bad.push(level);
        }
    }
    let pass = missing.is_empty() && extra.is_empty() && predicate_bad.is_empty();
    Ok(report(
        16,
        pass,
        json!({
            "paths": paths.len(),
            "start_nodes": found.len(),
            "missing": missing,
            "unexpected": extra,
            "single_antecedent_family_members": degenerate,
            "predicate_mismatch_levels": predicate_bad,
        }),
        json!({ "start_nodes": predicted.len(), "missing": [], "unexpected": [] }),
        exact(),
    ))
}

/// Run one criterion; internal errors become failing reports.
pub fn run_criterion(id: u8, table: &PartitionTable) -> CheckReport {
    let out = match id {
        1 => c01(),
        2 => c02(),
        3 => c03(),
        4 => c04(table),
        5 => c05(table),
        6 => c06(table),
        7 => c07(table),
        8 => c08(table),
        9 => c09(),
        10 => c10(),
        11 => c11(),
        12 => c12(),
        13 => c13(),
        14 => c14(),
        15 => c15(),
        16 => c16(),
        _ => Err(Error::InvalidArgument(format!("unknown criterion {id}"))),
    };
    out.unwrap_or_else(|e| report(id, false, json!({ "error": e.to_string() }), Value::Null, Value::Null))
}

/// Run a suite; reports are ordered by check id.
pub fn run(suite: Suite, table: &PartitionTable) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = suite.criteria().into_iter().map(|id| run_criterion(id, table)).collect();
    out.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    out
}
