//! Uniform hypergraphs on dense vertex ids, with an optional r-partition.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

pub type VertexId = u32;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("uniformity must be at least 2, got {0}")]
    Uniformity(usize),
    #[error("edge {index} has {got} vertices, expected {expected}")]
    EdgeSize { index: usize, got: usize, expected: usize },
    #[error("edge {index} repeats vertex {vertex}")]
    RepeatedVertex { index: usize, vertex: VertexId },
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("edge {edge:?} appears more than once")]
    DuplicateEdge { edge: Vec<VertexId> },
    #[error("hypergraph is not linear: edges {0} and {1} share two or more vertices")]
    NotLinear(EdgeId, EdgeId),
    #[error("part assignment has {got} entries for {n} vertices")]
    PartCount { got: usize, n: usize },
    #[error("vertex {vertex} assigned to part {part}, only {r} parts exist")]
    PartOutOfRange { vertex: VertexId, part: u32, r: usize },
    #[error("edge {index} does not meet every part exactly once")]
    NotTransversal { index: usize },
    #[error("edge list line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// An r-uniform hypergraph in canonical form: each edge sorted ascending,
/// the edge list sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    flat: Vec<VertexId>,
    incidence: Vec<Vec<EdgeId>>,
}

impl Hypergraph {
    pub fn new<I, E>(r: usize, n_vertices: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[VertexId]>,
    {
        if r < 2 {
            return Err(HypergraphError::Uniformity(r));
        }
        let mut list: Vec<Vec<VertexId>> = Vec::new();
        for (index, e) in edges.into_iter().enumerate() {
            let mut e = e.as_ref().to_vec();
            if e.len() != r {
                return Err(HypergraphError::EdgeSize { index, got: e.len(), expected: r });
            }
            e.sort_unstable();
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(HypergraphError::RepeatedVertex { index, vertex: w[0] });
            }
            if let Some(&v) = e.last().filter(|&&v| v as usize >= n_vertices) {
                return Err(HypergraphError::VertexOutOfRange { vertex: v, n: n_vertices });
            }
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateEdge { edge: w[0].clone() });
        }
        let mut incidence = vec![Vec::new(); n_vertices];
        for (i, e) in list.iter().enumerate() {
            for &v in e {
                incidence[v as usize].push(i);
            }
        }
        Ok(Hypergraph { r, n: n_vertices, flat: list.into_iter().flatten().collect(), incidence })
    }

    pub fn empty(r: usize, n_vertices: usize) -> Result<Self, HypergraphError> {
        Self::new(r, n_vertices, std::iter::empty::<Vec<VertexId>>())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.flat.len() / self.r
    }

    pub fn edge(&self, e: EdgeId) -> &[VertexId] {
        &self.flat[e * self.r..(e + 1) * self.r]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[VertexId]> + '_ {
        self.flat.chunks_exact(self.r)
    }

    /// Edge ids containing `v`, ascending.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v as usize]
    }

    pub fn contains(&self, e: EdgeId, v: VertexId) -> bool {
        self.edge(e).binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, HypergraphError> {
        self.incidence.get(v as usize).map(Vec::len).ok_or(HypergraphError::VertexOutOfRange { vertex: v, n: self.n })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    /// Edge ids containing both `u` and `v`.
    pub fn edges_through_pair(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        let (a, b) = (self.incident(u), self.incident(v));
        let (mut i, mut j, mut out) = (0, 0, Vec::new());
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn shared(&self, e: EdgeId, f: EdgeId) -> Vec<VertexId> {
        let (a, b) = (self.edge(e), self.edge(f));
        a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect()
    }

    /// A pair of edges sharing two or more vertices, if any: the one whose
    /// later edge comes first, paired with the earliest partner.
    pub fn linearity_violation(&self) -> Option<(EdgeId, EdgeId)> {
        let mut seen: HashMap<(VertexId, VertexId), EdgeId> = HashMap::new();
        for (i, e) in self.edges().enumerate() {
            let mut hit: Option<EdgeId> = None;
            for a in 0..self.r {
                for b in a + 1..self.r {
                    match seen.get(&(e[a], e[b])) {
                        Some(&j) => hit = Some(hit.map_or(j, |h| h.min(j))),
                        None => {
                            seen.insert((e[a], e[b]), i);
                        }
                    }
                }
            }
            if let Some(j) = hit {
                return Some((j, i));
            }
        }
        None
    }

    pub fn is_linear(&self) -> bool {
        self.linearity_violation().is_none()
    }

    /// A new hypergraph with one more edge.
    pub fn with_edge(&self, edge: &[VertexId]) -> Result<Self, HypergraphError> {
        let mut edges: Vec<&[VertexId]> = self.edges().collect();
        edges.push(edge);
        Self::new(self.r, self.n, edges)
    }

    /// Line `r n m`, then one edge per line, LF terminated.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(self.flat.len() * 4 + 16);
        let _ = writeln!(out, "{} {} {}", self.r, self.n, self.num_edges());
        for e in self.edges() {
            for (i, v) in e.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{v}");
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Self, HypergraphError> {
        let perr = |line: usize, msg: String| HypergraphError::Parse { line, msg };
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (hl, header) = lines.next().ok_or_else(|| perr(1, "missing header".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| perr(hl + 1, format!("bad integer {t:?}"))))
            .collect::<Result<_, _>>()?;
        let [r, n, m] = nums[..] else {
            return Err(perr(hl + 1, "header must be \"r n m\"".into()));
        };
        let mut edges = Vec::with_capacity(m);
        for (ln, line) in lines {
            let e: Vec<VertexId> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| perr(ln + 1, format!("bad vertex id {t:?}"))))
                .collect::<Result<_, _>>()?;
            edges.push(e);
        }
        if edges.len() != m {
            return Err(perr(0, format!("header announces {m} edges, found {}", edges.len())));
        }
        Self::new(r, n, edges)
    }
}

/// An r-uniform hypergraph whose edges each meet every part exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedHypergraph {
    base: Hypergraph,
    parts: Vec<u32>,
}

impl PartitionedHypergraph {
    pub fn new(base: Hypergraph, parts: Vec<u32>) -> Result<Self, HypergraphError> {
        let r = base.r();
        if parts.len() != base.n_vertices() {
            return Err(HypergraphError::PartCount { got: parts.len(), n: base.n_vertices() });
        }
        if let Some((v, &part)) = parts.iter().enumerate().find(|(_, &p)| p as usize >= r) {
            return Err(HypergraphError::PartOutOfRange { vertex: v as VertexId, part, r });
        }
        let mut seen = vec![false; r];
        for (index, e) in base.edges().enumerate() {
            seen.iter_mut().for_each(|s| *s = false);
            for &v in e {
                let slot = &mut seen[parts[v as usize] as usize];
                if *slot {
                    return Err(HypergraphError::NotTransversal { index });
                }
                *slot = true;
            }
        }
        Ok(PartitionedHypergraph { base, parts })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.base
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.base
    }

    pub fn part_of(&self, v: VertexId) -> u32 {
        self.parts[v as usize]
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The vertex of edge `e` lying in `part`.
    pub fn vertex_in_part(&self, e: EdgeId, part: u32) -> VertexId {
        *self.base.edge(e).iter().find(|&&v| self.parts[v as usize] == part).expect("edges are transversal")
    }
}

/// Multiplicities of vertex pairs `{x, y}` over all cherries `x - v - y`
/// formed by two distinct edges through a common apex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodegreeProfile {
    /// `(x, y)` with `x < y`, ascending; zero entries omitted.
    pub counts: Vec<((VertexId, VertexId), u32)>,
    pub max_multiplicity: u32,
    /// Sum of all multiplicities.
    pub total: u64,
}

impl CodegreeProfile {
    pub fn get(&self, x: VertexId, y: VertexId) -> u32 {
        let key = (x.min(y), x.max(y));
        self.counts.binary_search_by(|(k, _)| k.cmp(&key)).map(|i| self.counts[i].1).unwrap_or(0)
    }
}

fn cherries_at(h: &Hypergraph, v: VertexId, acc: &mut HashMap<(VertexId, VertexId), u32>) {
    let inc = h.incident(v);
    for (i, &e) in inc.iter().enumerate() {
        for &f in &inc[i + 1..] {
            for &x in h.edge(e).iter().filter(|&&x| x != v) {
                for &y in h.edge(f).iter().filter(|&&y| y != v) {
                    *acc.entry((x.min(y), x.max(y))).or_insert(0) += 1;
                }
            }
        }
    }
}

/// Requires a linear hypergraph. Work is `sum_v C(d(v), 2) (r-1)^2`.
pub fn codegree_profile(h: &Hypergraph) -> Result<CodegreeProfile, HypergraphError> {
    if let Some((e, f)) = h.linearity_violation() {
        return Err(HypergraphError::NotLinear(e, f));
    }
    let n = h.n_vertices() as VertexId;

    #[cfg(feature = "parallel")]
    let merged = {
        use rayon::prelude::*;
        (0..n)
            .into_par_iter()
            .fold(HashMap::new, |mut acc, v| {
                cherries_at(h, v, &mut acc);
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                for (k, c) in b {
                    *a.entry(k).or_insert(0) += c;
                }
                a
            })
    };
    #[cfg(not(feature = "parallel"))]
    let merged = {
        let mut acc = HashMap::new();
        for v in 0..n {
            cherries_at(h, v, &mut acc);
        }
        acc
    };

    let mut counts: Vec<_> = merged.into_iter().collect();
    counts.sort_unstable();
    Ok(CodegreeProfile {
        max_multiplicity: counts.iter().map(|&(_, c)| c).max().unwrap_or(0),
        total: counts.iter().map(|&(_, c)| c as u64).sum(),
        counts,
    })
}
