//! Browser bindings: build a construction, plot bounds, check pasted hypergraphs.
//!
//! Every export returns a JSON string; failures come back as `{"error": ..}`.

use bergekit::berge::{self, BergePattern};
use bergekit::bounds::{lb_construction, t_eff, ub_general, ub_palmer};
use bergekit::construction::{build_hypergraph, select_parameters, verify_pairwise_freeness};
use bergekit::{FieldContext, FieldDescriptor, Hypergraph};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn to_string(res: Result<Value, String>) -> String {
    res.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn field(q: &str) -> Result<FieldContext, String> {
    let d: FieldDescriptor = if q.contains('^') {
        q.parse().map_err(|e| format!("{e}"))?
    } else {
        format!("{}^1", q.trim()).parse().map_err(|e| format!("{e}"))?
    };
    FieldContext::from_descriptor(d).map_err(|e| e.to_string())
}

/// Largest field order the page will build.
pub const MAX_DEMO_Q: u32 = 31;

pub fn construct_summary_value(r: usize, l: usize, q: &str) -> Result<Value, String> {
    let f = field(q)?;
    if f.q() > MAX_DEMO_Q {
        return Err(format!("the demo builds fields up to order {MAX_DEMO_Q}"));
    }
    let params = select_parameters(r, l, &f).map_err(|e| e.to_string())?;
    let c = build_hypergraph(&params).map_err(|e| e.to_string())?;
    let h = c.hypergraph();
    let fmt = |xs: &[bergekit::FieldElement]| xs.iter().map(|&x| f.format(x)).collect::<Vec<_>>();
    let mut checks = vec![berge::detect_c2(h), berge::detect_c3(h)];
    let mut bounds = Value::Null;
    if r >= 3 {
        let t = t_eff(r, l).map_err(|e| e.to_string())?;
        checks.push(berge::detect_k2t(h, t as usize + 1).map_err(|e| e.to_string())?);
        let count = lb_construction(r, l, f.q() as u64).map_err(|e| e.to_string())?;
        bounds = json!({
            "t": t,
            "edges": count.edges,
            "ub_general": ub_general(r, t, count.n).map_err(|e| e.to_string())?,
            "ub_palmer": ub_palmer(r, t, count.n).map_err(|e| e.to_string())?,
        });
    }
    let pw = verify_pairwise_freeness(&c).map_err(|e| e.to_string())?;
    let degrees = h.degree_sequence();
    Ok(json!({
        "field": f.descriptor().to_string(),
        "alphas": fmt(params.alphas()),
        "ms": fmt(params.ms()),
        "vertices": h.n_vertices(),
        "edges": h.num_edges(),
        "min_degree": degrees.iter().min(),
        "max_degree": degrees.iter().max(),
        "checks": checks.iter().map(|c| json!({"pattern": c.pattern.to_string(), "found": c.found})).collect::<Vec<_>>(),
        "pairwise": {
            "two_part_max": pw.pairs.iter().map(|s| s.max_common).max(),
            "two_part_bound": pw.two_part_bound,
            "one_color_max": pw.pairs.iter().map(|s| s.max_common_one_color).max(),
            "three_part_max": pw.triples.iter().map(|s| s.max_common).max(),
            "three_part_bound": pw.three_part_bound,
        },
        "bounds": bounds,
    }))
}

/// Upper bounds sampled on `0..=n_max`, with the `l = 1` constructions that fit.
pub fn bounds_curve_value(r: usize, t: u64, n_max: u64, points: usize) -> Result<Value, String> {
    let points = points.clamp(2, 2000);
    let ns: Vec<u64> = (0..points).map(|i| n_max * i as u64 / (points as u64 - 1)).collect();
    let eval = |g: fn(usize, u64, u64) -> Result<f64, bergekit::bounds::BoundsError>| {
        ns.iter().map(|&n| g(r, t, n).map_err(|e| e.to_string())).collect::<Result<Vec<_>, _>>()
    };
    let general = eval(ub_general)?;
    let palmer = eval(ub_palmer)?;
    let constructions: Vec<Value> = (3..=n_max)
        .filter_map(|q| lb_construction(r, 1, q).ok())
        .take_while(|c| c.n <= n_max)
        .map(|c| json!({"q": c.q, "n": c.n, "edges": c.edges}))
        .collect();
    Ok(json!({ "n": ns, "ub_general": general, "ub_palmer": palmer, "constructions": constructions }))
}

pub fn verify_value(edge_list: &str, pattern: &str) -> Result<Value, String> {
    let h = Hypergraph::parse_edge_list(edge_list).map_err(|e| e.to_string())?;
    let p: BergePattern = pattern.parse().map_err(|e| format!("{e}"))?;
    let rep = berge::detect(&h, &p).map_err(|e| e.to_string())?;
    let mut cert = rep.certificate();
    cert["edges"] = json!(rep.witness.as_ref().map(|w| w
        .edge_assignment
        .iter()
        .map(|&(_, e)| h.edge(e).to_vec())
        .collect::<Vec<_>>()));
    Ok(cert)
}

#[wasm_bindgen]
pub fn construct_summary(r: usize, l: usize, q: &str) -> String {
    to_string(construct_summary_value(r, l, q))
}

#[wasm_bindgen]
pub fn bounds_curve(r: usize, t: u32, n_max: u32, points: usize) -> String {
    to_string(bounds_curve_value(r, t as u64, n_max as u64, points))
}

#[wasm_bindgen]
pub fn verify_edge_list(edge_list: &str, pattern: &str) -> String {
    to_string(verify_value(edge_list, pattern))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_for_small_field() {
        let v = construct_summary_value(3, 1, "5").unwrap();
        assert_eq!(v["vertices"], 75);
        assert_eq!(v["edges"], 100);
        assert_eq!(v["min_degree"], 4);
        assert!(v["checks"].as_array().unwrap().iter().all(|c| c["found"] == false));
        assert_eq!(v["bounds"]["edges"], 100);
        assert!(construct_summary(3, 1, "2").contains("error"));
        assert!(construct_summary(3, 1, "37").contains("error"));
    }

    #[test]
    fn curve_shape() {
        let v = bounds_curve_value(3, 2, 300, 4).unwrap();
        assert_eq!(v["n"], json!([0, 100, 200, 300]));
        assert_eq!(v["ub_general"][0], 0.0);
        let qs: Vec<u64> = v["constructions"].as_array().unwrap().iter().map(|c| c["q"].as_u64().unwrap()).collect();
        assert_eq!(qs, vec![3, 5, 7, 9]);
    }

    #[test]
    fn pasted_edge_list() {
        let v = verify_value("3 4 2\n0 1 2\n0 1 3\n", "c2").unwrap();
        assert_eq!(v["found"], true);
        assert_eq!(v["edges"], json!([[0, 1, 2], [0, 1, 3]]));
        assert!(verify_edge_list("3 4 1\n0 1\n", "c2").contains("error"));
        assert!(verify_edge_list("3 4 1\n0 1 2\n", "k5").contains("error"));
    }
}
