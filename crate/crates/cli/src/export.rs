//! Human tables and machine formats for single groups.

use std::fmt::Write as _;

use serde::Serialize;

use lambda_power::exact::LambdaReport;
use lambda_power::groups::FiniteGroup;
use lambda_power::invariants::{path_cover_number, WitnessedValue};
use lambda_power::ledger::{bound_ledger, Bound};
use lambda_power::limits::Limits;
use lambda_power::{build_power_graph, Result};

use crate::GraphFormat;

pub fn lambda_table(r: &LambdaReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "group     {}", r.group);
    let _ = writeln!(s, "order     {}", r.order);
    match r.lambda {
        Some(l) => {
            let _ = writeln!(s, "lambda    {l} (exact, {})", r.method);
        }
        None => {
            let lower = r.bounds.iter().filter(|b| is_lower(b)).map(|b| b.value).max();
            let upper = r.bounds.iter().filter(|b| !is_lower(b)).map(|b| b.value).min();
            let _ = writeln!(
                s,
                "lambda    unknown, bounds [{}, {}]",
                lower.map_or("-".into(), |v| v.to_string()),
                upper.map_or("-".into(), |v| v.to_string())
            );
        }
    }
    match &r.oracle {
        Some(o) => {
            let verdict = match r.agreement {
                Some(true) => "agrees",
                Some(false) => "DISAGREES",
                None => "not compared",
            };
            let _ = writeln!(s, "oracle    {} ({}), {verdict}", o.value, o.source);
        }
        None => {
            let _ = writeln!(s, "oracle    none");
        }
    }
    for b in &r.bounds {
        let kind = if is_lower(b) { "lower" } else { "upper" };
        let degraded = if b.degraded { " (degraded)" } else { "" };
        let _ = writeln!(s, "bound     {kind} {:>4}  {}{degraded}", b.value, b.source);
    }
    if !r.checks.is_empty() {
        let checks: Vec<String> = r.checks.iter().map(|c| format!("{}={}", c.method, c.lambda)).collect();
        let _ = writeln!(s, "checks    {}", checks.join(", "));
    }
    if let Some(v) = r.verified {
        let _ = writeln!(s, "verified  {v}");
    }
    if let Some(l) = &r.labeling {
        let labels: Vec<String> = l.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "labeling  {}", labels.join(" "));
    }
    if let Some(n) = &r.note {
        let _ = writeln!(s, "note      {n}");
    }
    let _ = writeln!(s, "runtime   {} ms", r.runtime_ms);
    s
}

fn is_lower(b: &Bound) -> bool {
    b.kind == lambda_power::ledger::BoundKind::Lower
}

/// A computed value, or the reason it could not be computed.
#[derive(Serialize)]
#[serde(untagged)]
pub enum Field<T> {
    Value(T),
    Capacity { capacity: String },
}

#[derive(Serialize)]
pub struct CoverField {
    pub value: usize,
    pub paths: Vec<Vec<usize>>,
}

#[derive(Serialize)]
pub struct MaximalCyclicField {
    pub sizes: Vec<usize>,
    pub pairwise_trivial: bool,
    pub size_condition: bool,
}

#[derive(Serialize)]
pub struct Invariants {
    pub group: String,
    pub order: usize,
    pub omega: Field<WitnessedValue>,
    pub alpha: Field<WitnessedValue>,
    pub complement_path_cover: Field<CoverField>,
    pub identity_profile: Vec<usize>,
    pub cut_vertex_condition: bool,
    pub maximal_cyclic: MaximalCyclicField,
    pub complement_p4: Option<[usize; 4]>,
    pub bounds: Vec<Bound>,
    pub lower: usize,
    pub upper: usize,
    pub pinned: Option<usize>,
}

pub fn invariants(g: &FiniteGroup, limits: &Limits) -> Result<Invariants> {
    let pg = build_power_graph(g);
    let ledger = bound_ledger(g, &pg, limits)?;
    let exact_or = |v: &Option<WitnessedValue>, what: &str| match v {
        Some(w) => Field::Value(w.clone()),
        None => Field::Capacity {
            capacity: format!("{what} search exceeds the {}-vertex limit", limits.clique),
        },
    };
    let cover = match path_cover_number(&pg.complement(), limits.dp) {
        Ok(c) => Field::Value(CoverField {
            value: c.count(),
            paths: c.paths,
        }),
        Err(e) if e.is_capacity() => Field::Capacity {
            capacity: e.to_string(),
        },
        Err(e) => return Err(e),
    };
    let cut = lambda_power::invariants::cut_vertex_condition(&ledger.identity_profile);
    Ok(Invariants {
        group: g.descriptor().to_string(),
        order: g.order(),
        omega: exact_or(&ledger.omega, "clique"),
        alpha: exact_or(&ledger.alpha, "independent set"),
        complement_path_cover: cover,
        identity_profile: ledger.identity_profile.clone(),
        cut_vertex_condition: cut,
        maximal_cyclic: MaximalCyclicField {
            sizes: ledger.maximal_cyclic.sizes.clone(),
            pairwise_trivial: ledger.maximal_cyclic.pairwise_trivial,
            size_condition: ledger.maximal_cyclic.size_condition_holds(),
        },
        complement_p4: ledger.complement_p4,
        bounds: ledger.bounds.clone(),
        lower: ledger.lower,
        upper: ledger.upper,
        pinned: ledger.pinned(),
    })
}

pub fn invariants_table(inv: &Invariants) -> String {
    fn show<T>(f: &Field<T>, value: impl Fn(&T) -> String) -> String {
        match f {
            Field::Value(v) => value(v),
            Field::Capacity { capacity } => format!("capacity exceeded ({capacity})"),
        }
    }
    let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let mut s = String::new();
    let _ = writeln!(s, "group                 {}", inv.group);
    let _ = writeln!(s, "order                 {}", inv.order);
    let _ = writeln!(s, "omega                 {}", show(&inv.omega, |w| format!("{}  [{}]", w.value, list(&w.witness))));
    let _ = writeln!(s, "alpha                 {}", show(&inv.alpha, |w| format!("{}  [{}]", w.value, list(&w.witness))));
    let _ = writeln!(s, "complement paths      {}", show(&inv.complement_path_cover, |c| c.value.to_string()));
    let _ = writeln!(s, "profile at identity   [{}]", list(&inv.identity_profile));
    let _ = writeln!(s, "cut-vertex condition  {}", inv.cut_vertex_condition);
    let m = &inv.maximal_cyclic;
    let _ = writeln!(
        s,
        "maximal cyclic        sizes [{}], pairwise trivial {}, size condition {}",
        list(&m.sizes),
        m.pairwise_trivial,
        m.size_condition
    );
    let p4 = inv.complement_p4.map_or("none".to_string(), |p| format!("[{}]", list(&p)));
    let _ = writeln!(s, "P4 in complement      {p4}");
    for b in &inv.bounds {
        let kind = if is_lower(b) { "lower" } else { "upper" };
        let degraded = if b.degraded { " (degraded)" } else { "" };
        let _ = writeln!(s, "bound                 {kind} {:>4}  {}{degraded}", b.value, b.source);
    }
    let pinned = inv.pinned.map_or("no".to_string(), |v| v.to_string());
    let _ = writeln!(s, "sandwich              [{}, {}], pinned {pinned}", inv.lower, inv.upper);
    s
}

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    identity: usize,
    edges: Vec<[usize; 2]>,
}

pub fn graph(g: &FiniteGroup, format: GraphFormat) -> std::result::Result<String, String> {
    let pg = build_power_graph(g);
    let edges = pg.edges();
    match format {
        GraphFormat::Json => {
            let json = GraphJson {
                n: pg.vertex_count(),
                identity: pg.identity_vertex(),
                edges: edges.iter().map(|&(u, v)| [u, v]).collect(),
            };
            serde_json::to_string(&json).map(|s| s + "\n").map_err(|e| e.to_string())
        }
        GraphFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["u", "v"]).map_err(|e| e.to_string())?;
            for (u, v) in edges {
                w.serialize((u, v)).map_err(|e| e.to_string())?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            String::from_utf8(bytes).map_err(|e| e.to_string())
        }
        GraphFormat::Dot => {
            let mut s = String::new();
            let _ = writeln!(s, "graph \"{}\" {{", g.descriptor());
            for v in 0..pg.vertex_count() {
                let _ = writeln!(s, "  {v} [label=\"{v} (ord {})\"];", g.orders()[v]);
            }
            for (u, v) in edges {
                let _ = writeln!(s, "  {u} -- {v};");
            }
            s.push_str("}\n");
            Ok(s)
        }
    }
}
