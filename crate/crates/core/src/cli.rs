//! Command-line front end.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use crate::bratteli::{quadrant_diagram, BratteliDiagram};
use crate::error::{Error, Result};
use crate::free_realization::{generation_depth, verify as realize, RealizationSpec};
use crate::group_core::{FiniteGroupTable, GroupDescriptor, GroupElement, HeisTriple};
use crate::growth::{grow, AdmissibleSet};
use crate::heisenberg::{central_interval, nonnoetherian_witness, order_unit_set, tilde_length_exact, word_length_exact};
use crate::partitions::PartitionTable;
use crate::polytope::{solidity_check, right_simplex, LatticePolytope, SimplexVerdict};
use crate::szekeres::{calibrate, compare, v_of};
use crate::tolerances::DEFAULT_ELEMENT_CAP;
use crate::traces::{eval, limit_table, standard_test_nodes, NodeRef, TraceSpec};
use crate::verify::{run, Suite};

/// Environment variable naming the partition cache file.
pub const CACHE_ENV: &str = "CONEWALK_CACHE";

#[derive(Parser, Debug)]
#[command(name = "conewalk", version, about = "Exact enumeration and cross-checks for space-time cones")]
pub struct RunConfig {
    /// Element cap for ball growth.
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_CAP, value_parser = positive)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Grow the balls S^0 … S^M.
    Balls(BallsArgs),
    /// Closed forms for the Heisenberg group.
    #[command(subcommand)]
    Heis(HeisCommand),
    /// Restricted partition counts.
    #[command(subcommand)]
    Partitions(PartitionCommand),
    /// Trace evaluation and convergence tables.
    #[command(subcommand)]
    Trace(TraceCommand),
    /// The implicit function v and the asymptotic partition estimate.
    #[command(subcommand)]
    Szekeres(SzekeresCommand),
    /// Build a Bratteli diagram.
    #[command(subcommand)]
    Bratteli(BratteliCommand),
    /// Lattice polytope checks.
    #[command(subcommand)]
    Polytope(PolytopeCommand),
    /// Realize a primitive 0-1 matrix over the free group.
    Realize(RealizeArgs),
    /// Run acceptance checks.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct BallsArgs {
    /// heisenberg, free2, z<d>, zxc<n> or zxs<n>.
    #[arg(long)]
    pub group: String,
    /// JSON array of elements; defaults to the identity and the standard generators with inverses.
    #[arg(long)]
    pub set: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    pub depth: i64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum HeisCommand {
    /// Central exponents of g^a h^b reachable in m steps.
    Interval {
        #[arg(allow_hyphen_values = true)]
        a: i64,
        #[arg(allow_hyphen_values = true)]
        b: i64,
        m: i64,
    },
    /// Stable length of z^r g^a h^b.
    Tildel {
        #[arg(allow_hyphen_values = true)]
        r: i64,
        #[arg(allow_hyphen_values = true)]
        a: i64,
        #[arg(allow_hyphen_values = true)]
        b: i64,
    },
    /// Word length of z^r g^a h^b.
    Length {
        #[arg(allow_hyphen_values = true)]
        r: i64,
        #[arg(allow_hyphen_values = true)]
        a: i64,
        #[arg(allow_hyphen_values = true)]
        b: i64,
    },
    /// Order-unit support at level m.
    Gd {
        m: i64,
        #[arg(long)]
        json: bool,
    },
    /// Non-noetherian witness check.
    Nonnoe {
        n: i64,
        #[arg(value_name = "M")]
        shift: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum PartitionCommand {
    /// Partitions of r into at most a parts each at most b.
    P3 { r: i64, a: i64, b: i64 },
    /// All coefficients of (g+h)^m.
    Slice {
        m: i64,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum TraceCommand {
    /// Evaluate a trace on a node.
    Eval {
        /// lower:r,b | upper:c,d | mult:t | faithful:x,y
        #[arg(long)]
        spec: String,
        /// r,a,b,m
        #[arg(long, allow_hyphen_values = true)]
        node: String,
    },
    /// Sup-error between discrete traces with k ≈ A√r and the matching multiplicative trace.
    Limits {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        smax: u64,
        #[arg(long, default_value_t = 10)]
        step: u64,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum SzekeresCommand {
    /// The root v(t).
    V { t: f64 },
    /// Exact against asymptotic log p(r, k).
    Compare {
        r: i64,
        k: i64,
        /// Exponent sign; calibrated when omitted.
        #[arg(long, allow_hyphen_values = true)]
        sign: Option<i8>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    Quadrant,
    None,
}

#[derive(Subcommand, Debug)]
pub enum BratteliCommand {
    Build {
        /// heisenberg, free2, z<d>, zxc<n> or zxs<n>.
        #[arg(long, default_value = "heisenberg")]
        group: String,
        /// JSON array of support elements, each with coefficient one.
        #[arg(long)]
        set: Option<PathBuf>,
        #[arg(long)]
        depth: usize,
        /// `quadrant` uses f = g + h on the Heisenberg group.
        #[arg(long, value_enum, default_value_t = Filter::None)]
        filter: Filter,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum PolytopeCommand {
    /// Solidity and boundary checks for cvx S, S read from a JSON array.
    #[command(alias = "solidity")]
    A17 {
        #[arg(long)]
        set: PathBuf,
    },
    /// The right simplex with the given exponents.
    Simplex {
        #[arg(required = true)]
        alpha: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        report: Format,
    },
}

#[derive(Args, Debug)]
pub struct RealizeArgs {
    /// JSON file holding a square 0-1 matrix.
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long, default_value_t = 4)]
    pub depth: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub report: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
    pub suite: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok,
    Failed(String),
}

fn table_from_env() -> Result<PartitionTable> {
    match std::env::var_os(CACHE_ENV) {
        Some(p) if Path::new(&p).exists() => PartitionTable::load(Path::new(&p)),
        _ => Ok(PartitionTable::new()),
    }
}

fn save_table(table: &PartitionTable) -> Result<()> {
    if let Some(p) = std::env::var_os(CACHE_ENV) {
        table.save(Path::new(&p))?;
    }
    Ok(())
}

fn parse_group(name: &str) -> Result<GroupDescriptor> {
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::InvalidArgument(format!("bad group name '{name}'")))
    };
    Ok(match name {
        "heisenberg" => GroupDescriptor::Heisenberg,
        "free2" => GroupDescriptor::FreeGroup2,
        _ if name.starts_with("zxc") => GroupDescriptor::ZTimesFinite(FiniteGroupTable::cyclic(num(&name[3..])?)?),
        _ if name.starts_with("zxs") => GroupDescriptor::ZTimesFinite(FiniteGroupTable::symmetric(num(&name[3..])?)?),
        _ if name.starts_with('z') => GroupDescriptor::new_free_abelian(num(&name[1..])?)?,
        _ => return Err(Error::InvalidArgument(format!("unknown group '{name}'"))),
    })
}

fn default_set(group: &GroupDescriptor) -> Result<Vec<GroupElement>> {
    Ok(match group {
        GroupDescriptor::Heisenberg => [HeisTriple::IDENTITY, HeisTriple::G, HeisTriple::G.inv(), HeisTriple::H, HeisTriple::H.inv()]
            .into_iter()
            .map(GroupElement::Heis)
            .collect(),
        GroupDescriptor::FreeGroup2 => ["", "g", "G", "h", "H"]
            .iter()
            .map(|s| crate::group_core::Word::parse(s).map(GroupElement::Word))
            .collect::<Result<_>>()?,
        GroupDescriptor::FreeAbelian(d) => {
            let mut out = vec![GroupElement::Lattice(vec![0; *d])];
            for i in 0..*d {
                for s in [1, -1] {
                    let mut v = vec![0; *d];
                    v[i] = s;
                    out.push(GroupElement::Lattice(v));
                }
            }
            out
        }
        GroupDescriptor::ZTimesFinite(_) => {
            return Err(Error::InvalidArgument("Z x finite groups need --set".into()));
        }
    })
}

fn read_json(path: &Path) -> Result<Value> {
    Ok(serde_json::from_reader(std::io::BufReader::new(std::fs::File::open(path)?))?)
}

fn read_set(group: &GroupDescriptor, path: Option<&Path>) -> Result<Vec<GroupElement>> {
    match path {
        None => default_set(group),
        Some(p) => match read_json(p)? {
            Value::Array(items) => items.iter().map(|v| group.parse_element(v)).collect(),
            _ => Err(Error::InvalidArgument("set file must hold a JSON array".into())),
        },
    }
}

fn write_out(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => writeln!(out, "{text}")?,
    }
    Ok(())
}

fn lattice_set(path: &Path) -> Result<BTreeSet<Vec<i64>>> {
    let v = read_json(path)?;
    let items = v
        .as_array()
        .ok_or_else(|| Error::InvalidArgument("set file must hold a JSON array".into()))?;
    items
        .iter()
        .map(|p| {
            p.as_array()
                .ok_or_else(|| Error::InvalidArgument(format!("expected integer array, got {p}")))?
                .iter()
                .map(|c| c.as_i64().ok_or_else(|| Error::InvalidArgument(format!("expected integer, got {c}"))))
                .collect()
        })
        .collect()
}

fn balls(cfg: &RunConfig, args: &BallsArgs, out: &mut dyn Write) -> Result<Outcome> {
    if args.depth < 0 {
        return Err(Error::InvalidArgument("depth must be nonnegative".into()));
    }
    let group = parse_group(&args.group)?;
    let set = AdmissibleSet::new(&group, read_set(&group, args.set.as_deref())?)?;
    let ball = grow(&group, &set, args.depth as usize, cfg.cap)?;
    let text = match args.format {
        Format::Json => {
            let levels: Vec<Value> = ball
                .spheres()
                .iter()
                .map(|s| Value::Array(s.iter().map(GroupElement::to_json).collect()))
                .collect();
            json!({ "levels": levels, "sizes": ball.sizes() }).to_string()
        }
        Format::Csv | Format::Table => {
            let mut s = String::from("level,sphere,ball");
            let mut total = 0;
            for (k, sphere) in ball.spheres().iter().enumerate() {
                total += sphere.len();
                s.push_str(&format!("\n{k},{},{total}", sphere.len()));
            }
            s
        }
    };
    write_out(out, args.out.as_deref(), &text)?;
    Ok(Outcome::Ok)
}

fn heis(cmd: &HeisCommand, out: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        HeisCommand::Interval { a, b, m } => match central_interval(*a, *b, *m).bounds {
            Some((lo, hi)) => writeln!(out, "[{lo}, {hi}]")?,
            None => writeln!(out, "empty")?,
        },
        HeisCommand::Tildel { r, a, b } => writeln!(out, "{}", tilde_length_exact(&HeisTriple::new(*r, *a, *b)))?,
        HeisCommand::Length { r, a, b } => writeln!(out, "{}", word_length_exact(&HeisTriple::new(*r, *a, *b)))?,
        HeisCommand::Gd { m, json } => {
            let rep = order_unit_set(*m)?;
            if *json {
                let members: Vec<[i64; 3]> = rep.members.iter().map(|t| [t.r, t.a, t.b]).collect();
                let v = json!({
                    "m": rep.m,
                    "members": members,
                    "count": rep.count,
                    "orbit_count": rep.orbit_count,
                    "closed_form_count": rep.closed_form_count,
                    "closed_form_orbit_count": rep.closed_form_orbit_count,
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(
                    out,
                    "count {} (closed form {}), orbit {} (closed form {})",
                    rep.count, rep.closed_form_count, rep.orbit_count, rep.closed_form_orbit_count
                )?;
            }
        }
        HeisCommand::Nonnoe { n, shift } => {
            let ok = nonnoetherian_witness(*n, *shift)?;
            writeln!(out, "{ok}")?;
            if !ok {
                return Ok(Outcome::Failed(format!("nonnoetherian witness ({n}, {shift})")));
            }
        }
    }
    Ok(Outcome::Ok)
}

fn partitions(cmd: &PartitionCommand, out: &mut dyn Write) -> Result<Outcome> {
    let table = table_from_env()?;
    match cmd {
        PartitionCommand::P3 { r, a, b } => writeln!(out, "{}", table.p3(*r, *a, *b))?,
        PartitionCommand::Slice { m, csv } => {
            if *m < 0 {
                return Err(Error::InvalidArgument("level must be nonnegative".into()));
            }
            let slice = table.slice(*m);
            if *csv {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["r", "a", "b", "multiplicity"])?;
                for (t, c) in &slice.mult {
                    w.write_record([t.r.to_string(), t.a.to_string(), t.b.to_string(), c.to_string()])?;
                }
                out.write_all(&w.into_inner().map_err(|e| Error::Io(e.into_error()))?)?;
            } else {
                for (t, c) in &slice.mult {
                    writeln!(out, "{t} {c}")?;
                }
            }
        }
    }
    save_table(&table)?;
    Ok(Outcome::Ok)
}

fn parse_node(s: &str) -> Result<NodeRef> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| Error::InvalidArgument(format!("bad node '{s}'"))))
        .collect::<Result<Vec<i64>>>()?;
    match parts.as_slice() {
        [r, a, b, m] => Ok(NodeRef::new(HeisTriple::new(*r, *a, *b), *m)),
        _ => Err(Error::InvalidArgument(format!("node '{s}' must be r,a,b,m"))),
    }
}

fn trace(cmd: &TraceCommand, out: &mut dyn Write) -> Result<Outcome> {
    let table = table_from_env()?;
    match cmd {
        TraceCommand::Eval { spec, node } => {
            let spec: TraceSpec = spec.parse()?;
            let v = eval(&table, &spec, &parse_node(node)?)?;
            match v.exact() {
                Some(q) => writeln!(out, "{q}")?,
                None => writeln!(out, "{}", v.to_f64())?,
            }
        }
        TraceCommand::Limits { alpha, smax, step, csv } => {
            if alpha.is_nan() || *alpha <= 0.0 || *step == 0 {
                return Err(Error::InvalidArgument("need alpha > 0 and step ≥ 1".into()));
            }
            let t = (-v_of(*alpha)?).exp();
            let samples: Vec<(u64, i64, i64)> = (1..=*smax / step)
                .map(|i| {
                    let s = i * step;
                    (s, (s * s) as i64, (alpha * s as f64).round().max(1.0) as i64)
                })
                .collect();
            let rows = limit_table(&table, &samples, &standard_test_nodes(), t)?;
            if *csv {
                writeln!(out, "s,r,k,t,sup_error")?;
            }
            for r in rows {
                if *csv {
                    writeln!(out, "{},{},{},{},{}", r.s, r.r, r.k, r.t, r.sup_error)?;
                } else {
                    writeln!(out, "s={} r={} k={} t={:.6} sup_error={:.6}", r.s, r.r, r.k, r.t, r.sup_error)?;
                }
            }
        }
    }
    save_table(&table)?;
    Ok(Outcome::Ok)
}

fn szekeres(cmd: &SzekeresCommand, out: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        SzekeresCommand::V { t } => writeln!(out, "{}", v_of(*t)?)?,
        SzekeresCommand::Compare { r, k, sign, json } => {
            let table = table_from_env()?;
            let sign = match sign {
                Some(s @ (1 | -1)) => *s,
                Some(s) => return Err(Error::InvalidArgument(format!("sign must be 1 or -1, got {s}"))),
                None => calibrate(&table)?.sign,
            };
            let c = compare(&table, *r, *k, sign)?;
            if *json {
                writeln!(out, "{}", serde_json::to_string(&json!({ "sign": sign, "comparison": c }))?)?;
            } else {
                writeln!(
                    out,
                    "exact {:.6} asymptotic {:.6} relative error {:.6} (sign {sign})",
                    c.exact_log, c.asymptotic_log, c.relative_error
                )?;
            }
            save_table(&table)?;
        }
    }
    Ok(Outcome::Ok)
}

fn bratteli(cmd: &BratteliCommand, out: &mut dyn Write) -> Result<Outcome> {
    let BratteliCommand::Build { group, set, depth, filter, out: path } = cmd;
    let text = if *filter == Filter::Quadrant {
        if group != "heisenberg" || set.is_some() {
            return Err(Error::InvalidArgument("the quadrant filter uses f = g + h on the Heisenberg group".into()));
        }
        quadrant_diagram(*depth).to_json(|t| json!([t.r, t.a, t.b])).to_string()
    } else {
        let desc = parse_group(group)?;
        let coeffs: Vec<(GroupElement, BigUint)> = read_set(&desc, set.as_deref())?
            .into_iter()
            .map(|x| (x, BigUint::one()))
            .collect();
        BratteliDiagram::from_powers(&desc, &coeffs, *depth, |_, _| true)
            .to_json(GroupElement::to_json)
            .to_string()
    };
    write_out(out, path.as_deref(), &text)?;
    Ok(Outcome::Ok)
}

fn polytope(cmd: &PolytopeCommand, out: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        PolytopeCommand::A17 { set } => {
            let rep = solidity_check::<BigRational>(&lattice_set(set)?)?;
            let v = json!({
                "cond0": rep.cond0,
                "cond_i": rep.cond_i,
                "cond_ii": rep.cond_ii,
                "overall": rep.overall,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
            if !rep.overall {
                return Ok(Outcome::Failed("polytope conditions".into()));
            }
        }
        PolytopeCommand::Simplex { alpha, report } => {
            let verdict = right_simplex::<BigRational>(alpha)?;
            let v = match &verdict {
                SimplexVerdict::Accepted(k) => simplex_json(k)?,
                SimplexVerdict::SumTooLarge => json!({ "accepted": false, "reason": "sum of reciprocals is at least 1" }),
                SimplexVerdict::SumTooSmall => {
                    json!({ "accepted": false, "reason": "sum of reciprocals plus the last is below 1" })
                }
            };
            match report {
                Format::Json => writeln!(out, "{v}")?,
                _ => writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?,
            }
        }
    }
    Ok(Outcome::Ok)
}

fn simplex_json(k: &LatticePolytope<BigRational>) -> Result<Value> {
    let pts = |v: &[Vec<BigRational>]| -> Vec<Vec<String>> {
        v.iter().map(|p| p.iter().map(ToString::to_string).collect()).collect()
    };
    let set = k.lattice_points(1)?;
    let rep = solidity_check::<BigRational>(&set)?;
    Ok(json!({
        "accepted": true,
        "vertices": pts(&k.vertices),
        "facets": pts(&k.facets),
        "lattice_points": set.len(),
        "cond0": rep.cond0,
        "cond_i": rep.cond_i,
        "cond_ii": rep.cond_ii,
        "overall": rep.overall,
    }))
}

fn realize_cmd(args: &RealizeArgs, out: &mut dyn Write) -> Result<Outcome> {
    let matrix: Vec<Vec<u8>> = serde_json::from_value(read_json(&args.matrix)?)
        .map_err(|e| Error::InvalidArgument(format!("matrix file: {e}")))?;
    let spec = RealizationSpec::build(matrix)?;
    let reports = realize(&spec, args.depth)?;
    let gen = generation_depth(&spec, args.depth.max(3))?;
    let words: Vec<String> = spec.transitions.iter().map(|(i, j, w)| format!("{}{}:{w}", i + 1, j + 1)).collect();
    let ok = reports.iter().all(|r| r.transition_ok && r.isolated);
    match args.report {
        Format::Json => {
            let v = json!({
                "words": words,
                "symmetric": spec.is_symmetric(),
                "binary": spec.coefficients_are_binary(),
                "generation_depth": gen,
                "levels": reports,
            });
            writeln!(out, "{v}")?;
        }
        _ => {
            writeln!(out, "words {}", words.join(" "))?;
            writeln!(out, "generation depth {gen:?}")?;
            for r in &reports {
                writeln!(
                    out,
                    "n={} transition_ok={} isolated={} top_degree_ok={} anchors_at_level_n={}",
                    r.n, r.transition_ok, r.isolated, r.top_degree_ok, r.in_level
                )?;
            }
        }
    }
    Ok(if ok { Outcome::Ok } else { Outcome::Failed("realization transition or isolation".into()) })
}

fn verify_cmd(args: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome> {
    let suite: Suite = args.suite.parse()?;
    let table = table_from_env()?;
    let reports = run(suite, &table);
    save_table(&table)?;
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?,
        Format::Csv => {
            writeln!(out, "check_id,status,paper_ref")?;
            for r in &reports {
                writeln!(out, "{},{:?},\"{}\"", r.check_id, r.status, r.paper_ref)?;
            }
        }
        Format::Table => {
            for r in &reports {
                let tag = if r.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {} {}", r.check_id, r.paper_ref)?;
            }
        }
    }
    Ok(match reports.iter().find(|r| !r.passed()) {
        Some(r) => Outcome::Failed(format!("{} ({})", r.check_id, r.paper_ref)),
        None => Outcome::Ok,
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceCap { .. } => 3,
        Error::Numeric(_) | Error::Overflow(_) => 1,
        _ => 2,
    }
}

/// Parse `argv`, run the command and return the process exit code.
pub fn dispatch<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let result = match &cfg.command {
        Command::Balls(a) => balls(&cfg, a, out),
        Command::Heis(c) => heis(c, out),
        Command::Partitions(c) => partitions(c, out),
        Command::Trace(c) => trace(c, out),
        Command::Szekeres(c) => szekeres(c, out),
        Command::Bratteli(c) => bratteli(c, out),
        Command::Polytope(c) => polytope(c, out),
        Command::Realize(a) => realize_cmd(a, out),
        Command::Verify(a) => verify_cmd(a, out),
    };
    match result {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed(what)) => {
            let _ = writeln!(err, "verification failed: {what}");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
