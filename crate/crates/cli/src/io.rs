//! JSON schemas for instances, witnesses, and certificates.
//!
//! Inputs are either inline JSON or a path to a JSON file. Node subsets
//! travel as arrays of 0-based indices; duplicated pairs in arc/edge lists
//! encode multiplicity.

use std::fs;

use serde_json::{json, Map, Value};

use gsynth_core::bits::{self, Mask};
use gsynth_core::branchings::{Branching, PackCertificate};
use gsynth_core::ext::Ext;
use gsynth_core::forests::{Hypergraph, WoodedInfeasible};
use gsynth_core::graph::{Bigraph, Digraph};
use gsynth_core::realize::{Certificate, DegreeBounds, DegreeSpec};
use gsynth_core::setfn::{B0Violation, SetFunctionOnT};

/// Input-shaped failures, reported with exit code 1.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn err(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

/// Loads an argument that is either inline JSON or a file path.
pub fn load_value(arg: &str) -> Result<Value, InputError> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| err(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| {
        err(format!(
            "malformed JSON at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

fn field<'v>(v: &'v Value, name: &str) -> Result<&'v Value, InputError> {
    v.get(name).ok_or_else(|| err(format!("missing field \"{name}\"")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, InputError> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| err(format!("{what} must be a non-negative integer")))
}

fn as_i64(v: &Value, what: &str) -> Result<i64, InputError> {
    v.as_i64().ok_or_else(|| err(format!("{what} must be an integer")))
}

pub fn int_vec(v: &Value, what: &str) -> Result<Vec<i64>, InputError> {
    v.as_array()
        .ok_or_else(|| err(format!("{what} must be an array")))?
        .iter()
        .map(|x| as_i64(x, what))
        .collect()
}

fn pair_list(v: &Value, what: &str) -> Result<Vec<(usize, usize)>, InputError> {
    v.as_array()
        .ok_or_else(|| err(format!("{what} must be an array of pairs")))?
        .iter()
        .map(|pair| {
            let arr = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| err(format!("each entry of {what} must be a pair")))?;
            Ok((as_usize(&arr[0], what)?, as_usize(&arr[1], what)?))
        })
        .collect()
}

/// `{"n": 3, "arcs": [[0,1],[1,2]]}`
pub fn parse_digraph(v: &Value) -> Result<Digraph, InputError> {
    let n = as_usize(field(v, "n")?, "n")?;
    let arcs = pair_list(field(v, "arcs")?, "arcs")?;
    Digraph::new(n, arcs).map_err(|e| err(e.to_string()))
}

/// `{"s": 2, "t": 2, "edges": [[0,0],[1,1]], "simple": true}`
pub fn parse_bigraph(v: &Value) -> Result<Bigraph, InputError> {
    let s = as_usize(field(v, "s")?, "s")?;
    let t = as_usize(field(v, "t")?, "t")?;
    let edges = pair_list(field(v, "edges")?, "edges")?;
    let simple = v.get("simple").and_then(Value::as_bool).unwrap_or(true);
    if simple {
        Bigraph::simple(s, t, edges)
    } else {
        Bigraph::multi(s, t, edges)
    }
    .map_err(|e| err(e.to_string()))
}

/// `{"m_s": [...], "m_t": [...]}`; `m_t` may be absent for S-only problems.
pub fn parse_spec(v: &Value) -> Result<DegreeSpec, InputError> {
    let m_s = int_vec(field(v, "m_s")?, "m_s")?;
    match v.get("m_t") {
        Some(Value::Null) | None => DegreeSpec::s_only(m_s),
        Some(mt) => DegreeSpec::new(m_s, int_vec(mt, "m_t")?),
    }
    .map_err(|e| err(e.to_string()))
}

fn parse_ext_entry(v: &Value, what: &str) -> Result<Ext, InputError> {
    match v {
        Value::Null => Err(err(format!("{what}: use \"-inf\"/\"+inf\" or a number"))),
        Value::String(s) if s == "-inf" => Ok(Ext::NegInf),
        Value::String(s) if s == "+inf" || s == "inf" => Ok(Ext::PosInf),
        _ => Ok(Ext::Fin(as_i64(v, what)?)),
    }
}

fn parse_bound_vec(
    v: Option<&Value>,
    len: usize,
    unbounded: Ext,
    what: &str,
) -> Result<Vec<Ext>, InputError> {
    match v {
        None | Some(Value::Null) => Ok(vec![unbounded; len]),
        Some(arr) => {
            let items = arr
                .as_array()
                .ok_or_else(|| err(format!("{what} must be an array or null")))?;
            if items.len() != len {
                return Err(err(format!("{what} must have length {len}")));
            }
            items
                .iter()
                .map(|x| match x {
                    Value::Null => Ok(unbounded),
                    other => parse_ext_entry(other, what),
                })
                .collect()
        }
    }
}

/// `{"s": 2, "t": 3, "f_s": [...]|null, "g_s": ..., "f_t": ..., "g_t": ...,
///   "alpha": a|"-inf"|null, "beta": b|"+inf"|null}` with null = unbounded.
/// The side sizes come from "s"/"t" or from any present vector.
pub fn parse_bounds(v: &Value) -> Result<DegreeBounds, InputError> {
    let len_of = |name: &str| -> Option<usize> {
        v.get(name).and_then(Value::as_array).map(Vec::len)
    };
    let s = match v.get("s") {
        Some(x) => as_usize(x, "s")?,
        None => len_of("f_s")
            .or_else(|| len_of("g_s"))
            .ok_or_else(|| err("cannot determine |S|: give \"s\" or an S-side vector"))?,
    };
    let t = match v.get("t") {
        Some(x) => as_usize(x, "t")?,
        None => len_of("f_t")
            .or_else(|| len_of("g_t"))
            .ok_or_else(|| err("cannot determine |T|: give \"t\" or a T-side vector"))?,
    };
    let bounds = DegreeBounds {
        f_s: parse_bound_vec(v.get("f_s"), s, Ext::NegInf, "f_s")?,
        g_s: parse_bound_vec(v.get("g_s"), s, Ext::PosInf, "g_s")?,
        f_t: parse_bound_vec(v.get("f_t"), t, Ext::NegInf, "f_t")?,
        g_t: parse_bound_vec(v.get("g_t"), t, Ext::PosInf, "g_t")?,
        alpha: match v.get("alpha") {
            None | Some(Value::Null) => Ext::NegInf,
            Some(x) => parse_ext_entry(x, "alpha")?,
        },
        beta: match v.get("beta") {
            None | Some(Value::Null) => Ext::PosInf,
            Some(x) => parse_ext_entry(x, "beta")?,
        },
    };
    bounds.validate().map_err(|e| err(e.to_string()))?;
    Ok(bounds)
}

/// Set functions:
/// `{"kind":"explicit","t":n,"values":{"<bitmask-decimal>":v,...}}` (every
/// subset must be present), `{"kind":"termrank","ell":l}`,
/// `{"kind":"forest","m_for":[...]}`,
/// `{"kind":"branching","digraph":{...},"k":k,"m_in":[...]|null}`.
pub fn parse_setfn(v: &Value) -> Result<SetFunctionOnT, InputError> {
    let kind = field(v, "kind")?
        .as_str()
        .ok_or_else(|| err("\"kind\" must be a string"))?;
    match kind {
        "explicit" => {
            let t = as_usize(field(v, "t")?, "t")?;
            if t > 16 {
                return Err(err("explicit tables support at most 16 elements"));
            }
            let map = field(v, "values")?
                .as_object()
                .ok_or_else(|| err("\"values\" must be an object keyed by bitmask"))?;
            let mut values = Vec::with_capacity(1 << t);
            for mask in 0..(1u64 << t) {
                let key = mask.to_string();
                let entry = map
                    .get(&key)
                    .ok_or_else(|| err(format!("missing value for subset mask {key}")))?;
                values.push(as_i64(entry, "table entry")?);
            }
            SetFunctionOnT::explicit(t, values)
        }
        "termrank" => {
            let ell = as_i64(field(v, "ell")?, "ell")?;
            let t = as_usize(field(v, "t")?, "t")?;
            SetFunctionOnT::term_rank(t, ell)
        }
        "forest" => SetFunctionOnT::forest(int_vec(field(v, "m_for")?, "m_for")?),
        "branching" => {
            let digraph = parse_digraph(field(v, "digraph")?)?;
            let k = as_i64(field(v, "k")?, "k")?;
            let m_in = match v.get("m_in") {
                None | Some(Value::Null) => None,
                Some(x) => Some(int_vec(x, "m_in")?),
            };
            SetFunctionOnT::branching_indeg(digraph, k, m_in)
        }
        other => return Err(err(format!("unknown set-function kind \"{other}\""))),
    }
    .map_err(|e| err(e.to_string()))
}

// ---------------------------------------------------------------------------
// Emission.
// ---------------------------------------------------------------------------

pub fn mask_json(mask: Mask) -> Value {
    Value::Array(bits::elements(mask).map(|i| json!(i)).collect())
}

pub fn bigraph_json(g: &Bigraph) -> Value {
    json!({
        "s": g.s_size(),
        "t": g.t_size(),
        "edges": g.edges().iter().map(|&(s, t)| json!([s, t])).collect::<Vec<_>>(),
        "simple": g.is_simple(),
    })
}

/// 0-1 matrix rendering with row and column sums echoed.
pub fn matrix_json(g: &Bigraph) -> Value {
    let matrix = g.to_matrix();
    let (row_sums, col_sums) = g.degrees();
    json!({
        "matrix": matrix,
        "row_sums": row_sums,
        "col_sums": col_sums,
    })
}

pub fn spec_json(spec: &DegreeSpec) -> Value {
    let mut obj = Map::new();
    obj.insert("m_s".into(), json!(spec.m_s()));
    if let Some(m_t) = spec.m_t() {
        obj.insert("m_t".into(), json!(m_t));
    }
    Value::Object(obj)
}

/// `{"condition": ..., "x": [...], "y": [...], "parts": [[...]], "lhs": L,
/// "rhs": R}`; the triple is included only when `full` is set.
pub fn certificate_json(cert: &Certificate, full: bool) -> Value {
    let mut obj = Map::new();
    obj.insert("condition".into(), json!(cert.condition.as_str()));
    obj.insert("lhs".into(), json!(cert.lhs));
    obj.insert("rhs".into(), json!(cert.rhs));
    if full {
        obj.insert("x".into(), mask_json(cert.x));
        obj.insert("y".into(), mask_json(cert.y));
        obj.insert(
            "parts".into(),
            Value::Array(cert.parts.parts().iter().map(|&p| mask_json(p)).collect()),
        );
    }
    Value::Object(obj)
}

pub fn pack_certificate_json(cert: &PackCertificate, full: bool) -> Value {
    match cert {
        PackCertificate::Cut { x, demand, capacity } => {
            let mut obj = Map::new();
            obj.insert("condition".into(), json!("root_cut"));
            obj.insert("lhs".into(), json!(demand));
            obj.insert("rhs".into(), json!(capacity));
            if full {
                obj.insert("x".into(), mask_json(*x));
            }
            Value::Object(obj)
        }
        PackCertificate::Subpartition { y, parts, lhs, rhs } => {
            let mut obj = Map::new();
            obj.insert("condition".into(), json!("indegree_subpartition"));
            obj.insert("lhs".into(), json!(lhs));
            obj.insert("rhs".into(), json!(rhs));
            if full {
                obj.insert("y".into(), mask_json(*y));
                obj.insert(
                    "parts".into(),
                    Value::Array(parts.iter().map(|&p| mask_json(p)).collect()),
                );
            }
            Value::Object(obj)
        }
        PackCertificate::Bounds(inner) => {
            let mut v = certificate_json(inner, full);
            if let Some(obj) = v.as_object_mut() {
                obj.insert("vocabulary".into(), json!("branch indices on S, nodes on T"));
            }
            v
        }
    }
}

pub fn b0_violation_json(viol: &B0Violation, s_size: usize, full: bool) -> Value {
    let x = viol.u & bits::full_mask(s_size);
    let z = viol.u >> s_size;
    let mut obj = Map::new();
    obj.insert("condition".into(), json!("master_function"));
    obj.insert("lhs".into(), json!(viol.lhs));
    obj.insert("rhs".into(), json!(viol.rhs));
    if full {
        obj.insert("x".into(), mask_json(x));
        obj.insert("z".into(), mask_json(z));
    }
    Value::Object(obj)
}

pub fn wooded_infeasible_json(w: &WoodedInfeasible) -> Value {
    match w {
        WoodedInfeasible::NotDivisible { total, ell } => json!({
            "condition": "divisibility",
            "total": total,
            "ell": ell,
        }),
        WoodedInfeasible::DegreeExceedsTau { node, degree, tau } => json!({
            "condition": "degree_exceeds_count",
            "node": node,
            "degree": degree,
            "hyperedge_count": tau,
        }),
        WoodedInfeasible::TauExceedsSupport { tau, support } => json!({
            "condition": "count_exceeds_support",
            "hyperedge_count": tau,
            "support": support,
        }),
    }
}

pub fn packing_json(packing: &[Branching]) -> Value {
    Value::Array(
        packing
            .iter()
            .map(|b| {
                json!({
                    "roots": mask_json(b.root_set()),
                    "arcs": b.arcs().iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

/// Forest as an edge list plus a parent-array encoding over the combined
/// node set (S first, then T); roots carry null.
pub fn forest_json(s_size: usize, t_size: usize, forest: &[(usize, usize)]) -> Value {
    let n = s_size + t_size;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(s, t) in forest {
        adj[s].push(s_size + t);
        adj[s_size + t].push(s);
    }
    let mut parent: Vec<Value> = vec![Value::Null; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = json!(v);
                    stack.push(w);
                }
            }
        }
    }
    json!({
        "edges": forest.iter().map(|&(s, t)| json!([s, t])).collect::<Vec<_>>(),
        "parents": parent,
    })
}

pub fn hypergraph_json(h: &Hypergraph) -> Value {
    json!({
        "n": h.s_size(),
        "edges": h
            .hyperedges()
            .iter()
            .map(|&e| mask_json(e))
            .collect::<Vec<_>>(),
    })
}
