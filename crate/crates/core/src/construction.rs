//! The finite-field hypergraph on `r` parts of `q^2` points.
//!
//! Part `i` is `F_q × F_q × {i}`. For `x, y ∈ F_q`, `a ∈ F_q^*` and a
//! multiplier `m_s`, the edge `e(x, y, a, m_s)` takes from part `i` the
//! point `(x + α_i m_s a, y + α_i m_s a^2)`. The result is linear, has
//! `l q^2 (q - 1)` edges and is `l(q - 1)`-regular.
//!
//! Parts are numbered from 0. Vertex ids follow
//! `id = part * q^2 + index(x) * q + index(y)` with canonical field indices.

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::gf::{FieldContext, FieldDescriptor, FieldElement, GfError};
use crate::hypergraph::{Hypergraph, HypergraphError, PartitionedHypergraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("malformed parameters: {0}")]
    Malformed(String),
    #[error("multiplier condition m_s(α_k − α_i) ≠ m_t(α_k − α_j) fails at s={} t={} i={} j={} k={}", .0.s, .0.t, .0.i, .0.j, .0.k)]
    Condition(Violation),
    #[error("no admissible multiplier m_{index} in GF({q}): every nonzero candidate is blocked")]
    NoMultiplier { index: usize, q: u32 },
    #[error("part indices must be distinct and below {r}, got ({i}, {j})")]
    Parts { i: u32, j: u32, r: usize },
    #[error("hypergraph does not match parameters: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// A failure of `m_s (α_k − α_i) ≠ m_t (α_k − α_j)`; indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub s: usize,
    pub t: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionParams {
    r: usize,
    field: FieldContext,
    alphas: Vec<FieldElement>,
    ms: Vec<FieldElement>,
}

fn malformed(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::Malformed(msg.into())
}

fn check_elements(field: &FieldContext, alphas: &[FieldElement], ms: &[FieldElement]) -> Result<(), ConstructionError> {
    if alphas.len() < 2 {
        return Err(malformed(format!("at least 2 alphas are required, got {}", alphas.len())));
    }
    if ms.is_empty() {
        return Err(malformed("at least one multiplier is required"));
    }
    if let Some(e) = alphas.iter().chain(ms).find(|e| e.order() != field.q()) {
        return Err(GfError::ContextMismatch(e.order(), field.q()).into());
    }
    for (a, x) in alphas.iter().enumerate() {
        if alphas[..a].contains(x) {
            return Err(malformed(format!("alpha_{} repeats an earlier alpha", a + 1)));
        }
    }
    for (a, m) in ms.iter().enumerate() {
        if m.is_zero() {
            return Err(malformed(format!("m_{} is zero", a + 1)));
        }
        if ms[..a].contains(m) {
            return Err(malformed(format!("m_{} repeats an earlier multiplier", a + 1)));
        }
    }
    Ok(())
}

/// Checks `m_s (α_k − α_i) ≠ m_t (α_k − α_j)` for all `s, t` and distinct
/// `i, j, k`, returning the first failure in `(s, t, i, j, k)` order.
/// Malformed input (repeated alphas, zero or repeated multipliers) is an
/// error rather than a violation.
pub fn check_condition(
    field: &FieldContext,
    alphas: &[FieldElement],
    ms: &[FieldElement],
) -> Result<Option<Violation>, ConstructionError> {
    check_elements(field, alphas, ms)?;
    Ok(first_violation(field, alphas, ms))
}

fn first_violation(f: &FieldContext, alphas: &[FieldElement], ms: &[FieldElement]) -> Option<Violation> {
    let r = alphas.len();
    for (s, &ms_) in ms.iter().enumerate() {
        for (t, &mt) in ms.iter().enumerate() {
            for i in 0..r {
                for j in 0..r {
                    for k in 0..r {
                        if i == j || j == k || i == k {
                            continue;
                        }
                        let lhs = f.mul(ms_, f.sub(alphas[k], alphas[i]));
                        let rhs = f.mul(mt, f.sub(alphas[k], alphas[j]));
                        if lhs == rhs {
                            return Some(Violation { s: s + 1, t: t + 1, i: i + 1, j: j + 1, k: k + 1 });
                        }
                    }
                }
            }
        }
    }
    None
}

impl ConstructionParams {
    pub fn new(
        field: FieldContext,
        alphas: Vec<FieldElement>,
        ms: Vec<FieldElement>,
    ) -> Result<Self, ConstructionError> {
        let r = alphas.len();
        check_elements(&field, &alphas, &ms)?;
        if let Some(v) = first_violation(&field, &alphas, &ms) {
            return Err(ConstructionError::Condition(v));
        }
        Ok(ConstructionParams { r, field, alphas, ms })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn l(&self) -> usize {
        self.ms.len()
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn alphas(&self) -> &[FieldElement] {
        &self.alphas
    }

    pub fn ms(&self) -> &[FieldElement] {
        &self.ms
    }

    pub fn to_json(&self) -> serde_json::Value {
        let f = &self.field;
        json!({
            "r": self.r,
            "l": self.l(),
            "field": f.descriptor().to_string(),
            "alphas": self.alphas.iter().map(|&a| f.format(a)).collect::<Vec<_>>(),
            "ms": self.ms.iter().map(|&m| f.format(m)).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, ConstructionError> {
        #[derive(Deserialize)]
        struct Raw {
            r: usize,
            l: usize,
            field: String,
            alphas: Vec<String>,
            ms: Vec<String>,
        }
        let raw: Raw = serde_json::from_value(value.clone()).map_err(|e| malformed(e.to_string()))?;
        let d: FieldDescriptor = raw.field.parse()?;
        let field = FieldContext::from_descriptor(d)?;
        let alphas = raw.alphas.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>, _>>()?;
        let ms = raw.ms.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>, _>>()?;
        if alphas.len() != raw.r || ms.len() != raw.l {
            return Err(malformed("r and l disagree with the listed elements"));
        }
        Self::new(field, alphas, ms)
    }
}

/// `r` smallest elements as alphas, then multipliers chosen greedily (see
/// [`select_multipliers`]). Guaranteed to succeed once `q >= 2 l r^3`, and
/// often succeeds below.
pub fn select_parameters(r: usize, l: usize, field: &FieldContext) -> Result<ConstructionParams, ConstructionError> {
    if r < 2 {
        return Err(malformed(format!("r must be at least 2, got {r}")));
    }
    if r > field.q() as usize {
        return Err(malformed(format!("GF({}) has fewer than r = {r} elements", field.q())));
    }
    let alphas: Vec<FieldElement> = field.elements().take(r).collect();
    select_multipliers(field, alphas, l)
}

/// Picks `m_1, .., m_l` for fixed alphas: each new multiplier is the
/// smallest nonzero element keeping the multiplier condition, which means
/// avoiding every `m_z (α_k − α_j)(α_k − α_i)^{-1}`.
pub fn select_multipliers(
    field: &FieldContext,
    alphas: Vec<FieldElement>,
    l: usize,
) -> Result<ConstructionParams, ConstructionError> {
    if l < 1 {
        return Err(malformed("l must be at least 1"));
    }
    check_elements(field, &alphas, &[field.one()])?;
    let mut ms: Vec<FieldElement> = Vec::with_capacity(l);
    for index in 1..=l {
        let next = field.nonzero_elements().find(|m| {
            if ms.contains(m) {
                return false;
            }
            ms.push(*m);
            let ok = first_violation(field, &alphas, &ms).is_none();
            ms.pop();
            ok
        });
        match next {
            Some(m) => ms.push(m),
            None => return Err(ConstructionError::NoMultiplier { index, q: field.q() }),
        }
    }
    ConstructionParams::new(field.clone(), alphas, ms)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexLabel {
    pub id: VertexId,
    pub x: FieldElement,
    pub y: FieldElement,
    pub part: u32,
}

/// A built hypergraph with its labels and per-edge colours (multiplier
/// index, 0-based, aligned with the canonical edge order).
#[derive(Debug, Clone)]
pub struct Construction {
    pub params: ConstructionParams,
    pub hypergraph: PartitionedHypergraph,
    pub labels: Vec<VertexLabel>,
    pub colors: Vec<u32>,
}

impl Construction {
    pub fn hypergraph(&self) -> &Hypergraph {
        self.hypergraph.hypergraph()
    }

    pub fn vertex_id(&self, x: FieldElement, y: FieldElement, part: u32) -> VertexId {
        vertex_id(self.params.q(), x, y, part)
    }

    /// Label table: `[{id, x, y, part}]` with field elements in text form.
    pub fn labels_json(&self) -> serde_json::Value {
        let f = self.params.field();
        serde_json::Value::Array(
            self.labels
                .iter()
                .map(|l| json!({"id": l.id, "x": f.format(l.x), "y": f.format(l.y), "part": l.part}))
                .collect(),
        )
    }
}

fn vertex_id(q: u32, x: FieldElement, y: FieldElement, part: u32) -> VertexId {
    part * q * q + x.index() * q + y.index()
}

fn edges_for_x(p: &ConstructionParams, x: FieldElement) -> Vec<(Vec<VertexId>, u32)> {
    let f = p.field();
    let q = f.q();
    let mut out = Vec::with_capacity((q as usize - 1) * q as usize * p.l());
    for y in f.elements() {
        for a in f.nonzero_elements() {
            let a2 = f.square(a);
            for (s, &m) in p.ms().iter().enumerate() {
                let (ma, ma2) = (f.mul(m, a), f.mul(m, a2));
                let edge = p
                    .alphas()
                    .iter()
                    .enumerate()
                    .map(|(i, &al)| {
                        let u = f.add(x, f.mul(al, ma));
                        let v = f.add(y, f.mul(al, ma2));
                        vertex_id(q, u, v, i as u32)
                    })
                    .collect();
                out.push((edge, s as u32));
            }
        }
    }
    out
}

pub fn build_hypergraph(params: &ConstructionParams) -> Result<Construction, ConstructionError> {
    let f = params.field();
    let q = f.q();
    let r = params.r();
    let xs: Vec<FieldElement> = f.elements().collect();

    #[cfg(feature = "parallel")]
    let mut tagged: Vec<(Vec<VertexId>, u32)> = {
        use rayon::prelude::*;
        xs.par_iter().flat_map_iter(|&x| edges_for_x(params, x)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let mut tagged: Vec<(Vec<VertexId>, u32)> = xs.iter().flat_map(|&x| edges_for_x(params, x)).collect();

    // ids increase with part, so each edge is already sorted
    tagged.sort_unstable();
    let colors = tagged.iter().map(|(_, c)| *c).collect();
    let n = r * (q as usize) * (q as usize);
    let base = Hypergraph::new(r, n, tagged.iter().map(|(e, _)| e))?;
    let labels: Vec<VertexLabel> = (0..r as u32)
        .flat_map(|part| {
            xs.iter()
                .flat_map(move |&x| f.elements().map(move |y| VertexLabel { id: vertex_id(q, x, y, part), x, y, part }))
        })
        .collect();
    let parts = labels.iter().map(|l| l.part).collect();
    let hypergraph = PartitionedHypergraph::new(base, parts)?;
    Ok(Construction { params: params.clone(), hypergraph, labels, colors })
}

/// Bipartite graph between two parts; each edge carries the colour (0-based
/// multiplier index) of the hyperedge it comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredBipartiteGraph {
    pub left_part: u32,
    pub right_part: u32,
    /// `(left vertex, right vertex, colour)`, sorted.
    pub edges: Vec<(VertexId, VertexId, u32)>,
}

fn check_parts(r: usize, i: u32, j: u32) -> Result<(), ConstructionError> {
    if i == j || i as usize >= r || j as usize >= r {
        return Err(ConstructionError::Parts { i, j, r });
    }
    Ok(())
}

/// The graph between parts `i` and `j` from the algebraic adjacency rule:
/// `(u, v, i) ~ (u + m_s (α_j − α_i) a, v + m_s (α_j − α_i) a^2, j)`.
pub fn build_auxiliary_graph(
    params: &ConstructionParams,
    i: u32,
    j: u32,
) -> Result<ColoredBipartiteGraph, ConstructionError> {
    check_parts(params.r(), i, j)?;
    let f = params.field();
    let q = f.q();
    let diff = f.sub(params.alphas()[j as usize], params.alphas()[i as usize]);
    let mut edges = Vec::new();
    for u in f.elements() {
        for v in f.elements() {
            for a in f.nonzero_elements() {
                for (s, &m) in params.ms().iter().enumerate() {
                    let step = f.mul(m, diff);
                    let u2 = f.add(u, f.mul(step, a));
                    let v2 = f.add(v, f.mul(step, f.square(a)));
                    edges.push((vertex_id(q, u, v, i), vertex_id(q, u2, v2, j), s as u32));
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(ColoredBipartiteGraph { left_part: i, right_part: j, edges })
}

/// The same graph read off the hyperedges: one bipartite edge per hyperedge.
pub fn project_pair(c: &Construction, i: u32, j: u32) -> Result<ColoredBipartiteGraph, ConstructionError> {
    check_parts(c.params.r(), i, j)?;
    let ph = &c.hypergraph;
    let mut edges: Vec<_> = (0..ph.hypergraph().num_edges())
        .map(|e| (ph.vertex_in_part(e, i), ph.vertex_in_part(e, j), c.colors[e]))
        .collect();
    edges.sort_unstable();
    Ok(ColoredBipartiteGraph { left_part: i, right_part: j, edges })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairStat {
    pub parts: (u32, u32),
    /// Largest common neighbourhood of two vertices on the same side.
    pub max_common: u32,
    /// Largest common neighbourhood inside a single colour class.
    pub max_common_one_color: u32,
    pub projection_matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleStat {
    pub centres: (u32, u32),
    pub leaves: u32,
    pub max_common: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairwiseReport {
    pub l: usize,
    /// `2l^2 - l`
    pub two_part_bound: u32,
    /// `2l^2`
    pub three_part_bound: u32,
    pub pairs: Vec<PairStat>,
    pub triples: Vec<TripleStat>,
}

impl PairwiseReport {
    pub fn holds(&self) -> bool {
        self.pairs
            .iter()
            .all(|p| p.projection_matches && p.max_common <= self.two_part_bound && p.max_common_one_color <= 1)
            && self.triples.iter().all(|t| t.max_common <= self.three_part_bound)
    }
}

/// `nbrs[w]` = `(neighbour in part `from`, colour)` for every vertex `w` of
/// part `to`, indexed by position inside the part.
fn part_neighbours(c: &Construction, from: u32, to: u32) -> Vec<Vec<(u32, u32)>> {
    let q2 = c.params.q() * c.params.q();
    let ph = &c.hypergraph;
    let mut out = vec![Vec::new(); q2 as usize];
    for e in 0..ph.hypergraph().num_edges() {
        let w = ph.vertex_in_part(e, to) - to * q2;
        let u = ph.vertex_in_part(e, from) - from * q2;
        out[w as usize].push((u, c.colors[e]));
    }
    out
}

/// Largest `|N(u) ∩ N(v)|` over `u` in one side and `v` in the other,
/// given each leaf's neighbour lists on both sides. With `same_side` the
/// two lists are the same and only `u < v` pairs count. With `color` only
/// edges of that colour are used.
fn max_common(
    q2: usize,
    left: &[Vec<(u32, u32)>],
    right: &[Vec<(u32, u32)>],
    same_side: bool,
    color: Option<u32>,
) -> u32 {
    let keep = |c: u32| color.is_none_or(|k| k == c);
    let mut counts = vec![0u32; q2 * q2];
    for (ls, rs) in left.iter().zip(right) {
        for &(u, cu) in ls {
            for &(v, cv) in rs {
                if (same_side && u >= v) || !keep(cu) || !keep(cv) {
                    continue;
                }
                counts[u as usize * q2 + v as usize] += 1;
            }
        }
    }
    counts.into_iter().max().unwrap_or(0)
}

/// Common-neighbourhood scan of every two-part graph (both sides as
/// centres) and every three-part union with centres in two parts and leaves
/// in the third.
pub fn verify_pairwise_freeness(c: &Construction) -> Result<PairwiseReport, ConstructionError> {
    let p = &c.params;
    let (r, q) = (p.r(), p.q() as usize);
    let h = c.hypergraph();
    if h.r() != r || h.n_vertices() != r * q * q || c.colors.len() != h.num_edges() {
        return Err(ConstructionError::Mismatch(format!("expected {r}-uniform on {} vertices", r * q * q)));
    }
    let q2 = q * q;
    let l = p.l() as u32;
    let mut pairs = Vec::new();
    for i in 0..r as u32 {
        for j in i + 1..r as u32 {
            let i_of_j = part_neighbours(c, i, j);
            let j_of_i = part_neighbours(c, j, i);
            let max_common_both =
                max_common(q2, &i_of_j, &i_of_j, true, None).max(max_common(q2, &j_of_i, &j_of_i, true, None));
            let one = (0..l)
                .map(|s| {
                    max_common(q2, &i_of_j, &i_of_j, true, Some(s)).max(max_common(q2, &j_of_i, &j_of_i, true, Some(s)))
                })
                .max()
                .unwrap_or(0);
            let projection_matches = build_auxiliary_graph(p, i, j)? == project_pair(c, i, j)?;
            pairs.push(PairStat {
                parts: (i, j),
                max_common: max_common_both,
                max_common_one_color: one,
                projection_matches,
            });
        }
    }
    let mut triples = Vec::new();
    for i in 0..r as u32 {
        for j in i + 1..r as u32 {
            for k in (0..r as u32).filter(|&k| k != i && k != j) {
                let from_i = part_neighbours(c, i, k);
                let from_j = part_neighbours(c, j, k);
                triples.push(TripleStat {
                    centres: (i, j),
                    leaves: k,
                    max_common: max_common(q2, &from_i, &from_j, false, None),
                });
            }
        }
    }
    Ok(PairwiseReport { l: p.l(), two_part_bound: 2 * l * l - l, three_part_bound: 2 * l * l, pairs, triples })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, k: u32) -> FieldContext {
        FieldContext::new(p, k).unwrap()
    }

    #[test]
    fn distinct_alphas_suffice_for_one_multiplier() {
        let f = gf(5, 1);
        let alphas: Vec<_> = [0, 3, 4].iter().map(|&n| f.from_int(n)).collect();
        assert_eq!(check_condition(&f, &alphas, &[f.one()]).unwrap(), None);
    }

    #[test]
    fn gf13_two_multipliers_violation() {
        let f = gf(13, 1);
        let alphas: Vec<_> = (0..3).map(|n| f.from_int(n)).collect();
        let ms = [f.from_int(1), f.from_int(2)];
        let v = check_condition(&f, &alphas, &ms).unwrap().unwrap();
        assert_eq!(v, Violation { s: 1, t: 2, i: 1, j: 2, k: 3 });
        assert!(matches!(
            ConstructionParams::new(f.clone(), alphas, ms.to_vec()),
            Err(ConstructionError::Condition(_))
        ));
    }

    #[test]
    fn repeated_alphas_are_malformed() {
        let f = gf(5, 1);
        let alphas = vec![f.one(), f.one(), f.zero()];
        assert!(matches!(check_condition(&f, &alphas, &[f.one()]), Err(ConstructionError::Malformed(_))));
        assert!(matches!(check_condition(&f, &[f.zero(), f.one()], &[f.zero()]), Err(ConstructionError::Malformed(_))));
    }

    #[test]
    fn greedy_selection() {
        let p = select_parameters(3, 1, &gf(5, 1)).unwrap();
        let f = p.field();
        let fmt = |v: &[FieldElement]| v.iter().map(|&e| f.format(e)).collect::<Vec<_>>();
        assert_eq!(fmt(p.alphas()), ["0", "1", "2"]);
        assert_eq!(fmt(p.ms()), ["1"]);
        assert!(select_parameters(2, 1, &gf(5, 1)).is_ok());
        assert_eq!(select_parameters(3, 2, &gf(5, 1)).unwrap_err(), ConstructionError::NoMultiplier { index: 2, q: 5 });
        let p7 = select_parameters(3, 2, &gf(7, 1)).unwrap();
        assert_eq!(fmt(p7.ms()), ["1", "3"]);
        assert!(select_parameters(9, 1, &gf(7, 1)).is_err());
    }

    #[test]
    fn params_json_round_trip() {
        let p = select_parameters(3, 2, &gf(3, 2)).unwrap_or_else(|_| select_parameters(3, 1, &gf(3, 2)).unwrap());
        let v = p.to_json();
        assert_eq!(v["field"], "3^2");
        assert_eq!(ConstructionParams::from_json(&v).unwrap(), p);
    }

    #[test]
    fn small_build_counts() {
        let p = select_parameters(3, 1, &gf(5, 1)).unwrap();
        let c = build_hypergraph(&p).unwrap();
        let h = c.hypergraph();
        assert_eq!(h.n_vertices(), 75);
        assert_eq!(h.num_edges(), 100);
        assert!(h.degree_sequence().iter().all(|&d| d == 4));
        assert_eq!(c.labels.len(), 75);
        assert_eq!(c.labels[26].id, 26);
        assert_eq!(c.labels_json()[26]["part"], 1);
    }

    #[test]
    fn two_multipliers_over_gf13() {
        let p = select_parameters(3, 2, &gf(13, 1)).unwrap();
        let c = build_hypergraph(&p).unwrap();
        assert_eq!(c.hypergraph().n_vertices(), 507);
        assert_eq!(c.hypergraph().num_edges(), 2 * 169 * 12);
        assert!(c.colors.iter().filter(|&&s| s == 1).count() == 169 * 12);
    }

    #[test]
    fn graph_case_is_c4_free_and_regular() {
        let f = gf(3, 1);
        let p = ConstructionParams::new(f.clone(), vec![f.zero(), f.one()], vec![f.one()]).unwrap();
        let c = build_hypergraph(&p).unwrap();
        let h = c.hypergraph();
        assert_eq!(h.n_vertices(), 18);
        assert_eq!(h.num_edges(), 18);
        assert!(h.degree_sequence().iter().all(|&d| d == 2));
        assert!(!crate::berge::detect_k2t(h, 2).unwrap().found);
    }

    #[test]
    fn auxiliary_graph_equals_projection() {
        let p = select_parameters(3, 1, &gf(5, 1)).unwrap();
        let c = build_hypergraph(&p).unwrap();
        let aux = build_auxiliary_graph(&p, 0, 1).unwrap();
        assert_eq!(aux.edges.len(), 100);
        assert!(aux.edges.iter().all(|&(_, _, col)| col == 0));
        assert_eq!(aux, project_pair(&c, 0, 1).unwrap());
        assert!(build_auxiliary_graph(&p, 1, 1).is_err());
        assert!(build_auxiliary_graph(&p, 0, 3).is_err());
    }

    #[test]
    fn pairwise_report_q5() {
        let p = select_parameters(3, 1, &gf(5, 1)).unwrap();
        let c = build_hypergraph(&p).unwrap();
        let rep = verify_pairwise_freeness(&c).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.pairs.len(), 3);
        assert_eq!(rep.triples.len(), 3);
        assert!(rep.pairs.iter().all(|s| s.max_common <= 1));
        assert!(rep.triples.iter().all(|s| s.max_common <= 2));
    }
}
