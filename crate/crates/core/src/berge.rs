//! Exact detection of Berge copies of small multigraphs.
//!
//! A hypergraph contains a Berge-G when the edges of G can be sent
//! injectively to hyperedges, each graph edge landing inside its image,
//! with the graph's vertices mapped injectively as well. Every detector
//! returns the first witness in a fixed traversal order, so results do not
//! depend on thread count.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use web_time::{Duration, Instant};

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::matching::SlotMatcher;
use crate::par::scan_until_hit;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BergeError {
    #[error("K_{{2,t}} needs t >= 1")]
    InvalidT,
    #[error("pattern multigraph has no edges")]
    EmptyPattern,
    #[error("pattern edge {0} is a loop or refers to a missing vertex")]
    BadPatternEdge(usize),
    #[error("invalid pattern spec {0:?}")]
    ParsePattern(String),
    #[error("witness invalid: {0}")]
    InvalidWitness(String),
}

/// A loopless multigraph on vertices `0..n_vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n_vertices: usize,
    edges: Vec<(u32, u32)>,
}

impl Multigraph {
    pub fn new(n_vertices: usize, edges: Vec<(u32, u32)>) -> Result<Self, BergeError> {
        if let Some(i) = edges.iter().position(|&(u, v)| u == v || u as usize >= n_vertices || v as usize >= n_vertices)
        {
            return Err(BergeError::BadPatternEdge(i));
        }
        Ok(Multigraph { n_vertices, edges })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Two parallel edges.
    pub fn c2() -> Self {
        Multigraph { n_vertices: 2, edges: vec![(0, 1), (0, 1)] }
    }

    pub fn cycle(k: usize) -> Self {
        let edges = (0..k as u32).map(|i| (i, (i + 1) % k as u32)).collect();
        Multigraph { n_vertices: k, edges }
    }

    /// Centres 0 and 1, leaves `2..t+2`; edge `i` joins 0 to leaf i, edge
    /// `t + i` joins 1 to leaf i.
    pub fn k2t(t: usize) -> Self {
        let leaves = 2..(t as u32 + 2);
        let edges = leaves.clone().map(|w| (0, w)).chain(leaves.map(|w| (1, w))).collect();
        Multigraph { n_vertices: t + 2, edges }
    }

    /// Text form: first line `vertices edges`, then one `u v` pair per line.
    pub fn parse(text: &str) -> Result<Self, BergeError> {
        let bad = || BergeError::ParsePattern(text.lines().next().unwrap_or("").to_string());
        let mut nums = text.split_whitespace().map(|t| t.parse::<u32>().map_err(|_| bad()));
        let n = nums.next().ok_or_else(bad)?? as usize;
        let m = nums.next().ok_or_else(bad)?? as usize;
        let rest: Vec<u32> = nums.collect::<Result<_, _>>()?;
        if rest.len() != 2 * m {
            return Err(bad());
        }
        Self::new(n, rest.chunks(2).map(|c| (c[0], c[1])).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BergePattern {
    C2,
    C3,
    /// `K_{2,t}`, with `t` leaves.
    K2t(usize),
    Generic(Multigraph),
}

impl BergePattern {
    pub fn multigraph(&self) -> Multigraph {
        match self {
            BergePattern::C2 => Multigraph::c2(),
            BergePattern::C3 => Multigraph::cycle(3),
            BergePattern::K2t(t) => Multigraph::k2t(*t),
            BergePattern::Generic(g) => g.clone(),
        }
    }
}

impl fmt::Display for BergePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BergePattern::C2 => f.write_str("c2"),
            BergePattern::C3 => f.write_str("c3"),
            BergePattern::K2t(t) => write!(f, "k2t:{t}"),
            BergePattern::Generic(_) => f.write_str("generic"),
        }
    }
}

/// Parses `c2`, `c3` and `k2t:<t>`; generic patterns come from a file.
impl FromStr for BergePattern {
    type Err = BergeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.to_ascii_lowercase().as_str() {
            "c2" => Ok(BergePattern::C2),
            "c3" => Ok(BergePattern::C3),
            other => {
                let t = other
                    .strip_prefix("k2t:")
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| BergeError::ParsePattern(s.to_string()))?;
                if t == 0 {
                    return Err(BergeError::InvalidT);
                }
                Ok(BergePattern::K2t(t))
            }
        }
    }
}

/// An embedding certificate: `core_vertices[u]` is the image of pattern
/// vertex `u`, and `edge_assignment` pairs each pattern edge index with the
/// hyperedge id it lands in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub core_vertices: Vec<VertexId>,
    pub edge_assignment: Vec<(usize, EdgeId)>,
}

impl Witness {
    pub fn validate(&self, h: &Hypergraph, g: &Multigraph) -> Result<(), BergeError> {
        let bad = |m: String| Err(BergeError::InvalidWitness(m));
        if self.core_vertices.len() != g.n_vertices() {
            return bad(format!("{} core vertices for {} pattern vertices", self.core_vertices.len(), g.n_vertices()));
        }
        let mut seen = std::collections::HashSet::new();
        for &v in &self.core_vertices {
            if v as usize >= h.n_vertices() || !seen.insert(v) {
                return bad(format!("core vertex {v} out of range or repeated"));
            }
        }
        if self.edge_assignment.len() != g.edges().len() {
            return bad("edge assignment does not cover the pattern".into());
        }
        let mut pattern_seen = vec![false; g.edges().len()];
        let mut hyper_seen = std::collections::HashSet::new();
        for &(pe, he) in &self.edge_assignment {
            if pe >= g.edges().len() || std::mem::replace(&mut pattern_seen[pe], true) {
                return bad(format!("pattern edge {pe} missing or assigned twice"));
            }
            if he >= h.num_edges() || !hyper_seen.insert(he) {
                return bad(format!("hyperedge {he} out of range or reused"));
            }
            let (u, v) = g.edges()[pe];
            let (x, y) = (self.core_vertices[u as usize], self.core_vertices[v as usize]);
            if !h.contains(he, x) || !h.contains(he, y) {
                return bad(format!("hyperedge {he} does not contain {{{x}, {y}}}"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DetectionStats {
    /// Candidate configurations examined (vertex pairs, embeddings).
    pub pairs_checked: u64,
    /// Largest screening count seen: common-neighbour candidates for
    /// `K_{2,t}`, edges through one vertex pair for `C2`.
    pub max_codegree: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub pattern: BergePattern,
    pub found: bool,
    pub witness: Option<Witness>,
    pub stats: DetectionStats,
}

impl VerificationReport {
    fn new(pattern: BergePattern, witness: Option<Witness>, stats: DetectionStats) -> Self {
        VerificationReport { pattern, found: witness.is_some(), witness, stats }
    }

    /// The certificate document; timing is left out so output is
    /// reproducible.
    pub fn certificate(&self) -> serde_json::Value {
        json!({
            "pattern": self.pattern.to_string(),
            "found": self.found,
            "witness": self.witness,
            "stats": self.stats,
        })
    }
}

pub fn detect(h: &Hypergraph, pattern: &BergePattern) -> Result<VerificationReport, BergeError> {
    match pattern {
        BergePattern::C2 => Ok(detect_c2(h)),
        BergePattern::C3 => Ok(detect_c3(h)),
        BergePattern::K2t(t) => detect_k2t(h, *t),
        BergePattern::Generic(g) => detect_generic(h, g),
    }
}

pub fn detect_c2(h: &Hypergraph) -> VerificationReport {
    let start = Instant::now();
    let mut stats = DetectionStats::default();
    let mut first: HashMap<(VertexId, VertexId), EdgeId> = HashMap::new();
    let mut witness = None;
    'scan: for (i, e) in h.edges().enumerate() {
        for a in 0..e.len() {
            for b in a + 1..e.len() {
                stats.pairs_checked += 1;
                if let Some(&j) = first.get(&(e[a], e[b])) {
                    stats.max_codegree = 2;
                    witness = Some(Witness { core_vertices: vec![e[a], e[b]], edge_assignment: vec![(0, j), (1, i)] });
                    break 'scan;
                }
                first.insert((e[a], e[b]), i);
            }
        }
    }
    if witness.is_none() && !first.is_empty() {
        stats.max_codegree = 1;
    }
    stats.elapsed = start.elapsed();
    VerificationReport::new(BergePattern::C2, witness, stats)
}

/// A Berge triangle `v1 e1 v2 e2 v3 e3 v1` with three distinct vertices and
/// three distinct edges. Cycles are searched with `e1` the smallest edge id,
/// which every triangle admits after rotation.
pub fn detect_c3(h: &Hypergraph) -> VerificationReport {
    let start = Instant::now();
    let per_edge = scan_until_hit(h.num_edges(), |e1| {
        let mut checked = 0u64;
        let edge1 = h.edge(e1);
        for &v1 in edge1 {
            for &v2 in edge1.iter().filter(|&&v| v != v1) {
                for &e2 in h.incident(v2).iter().filter(|&&e| e > e1) {
                    for &v3 in h.edge(e2).iter().filter(|&&v| v != v1 && v != v2) {
                        checked += 1;
                        let closing = h.edges_through_pair(v3, v1).into_iter().find(|&e3| e3 > e1 && e3 != e2);
                        if let Some(e3) = closing {
                            let w = Witness {
                                core_vertices: vec![v1, v2, v3],
                                edge_assignment: vec![(0, e1), (1, e2), (2, e3)],
                            };
                            return (checked, Some(w));
                        }
                    }
                }
            }
        }
        (checked, None)
    });
    let mut stats = DetectionStats::default();
    let mut witness = None;
    for (checked, w) in per_edge {
        stats.pairs_checked += checked;
        witness = w.or(witness);
    }
    stats.elapsed = start.elapsed();
    VerificationReport::new(BergePattern::C3, witness, stats)
}

struct Candidate {
    w: VertexId,
    through_a: Vec<EdgeId>,
    through_b: Vec<EdgeId>,
}

/// Picks `t` candidates whose `2t` slots admit distinct representatives.
fn choose_leaves(cands: &[Candidate], t: usize) -> Option<(Vec<usize>, Vec<EdgeId>)> {
    fn go(cands: &[Candidate], t: usize, from: usize, chosen: &mut Vec<usize>, m: &mut SlotMatcher) -> bool {
        if chosen.len() == t {
            return true;
        }
        for i in from..cands.len() {
            if chosen.len() + (cands.len() - i) < t {
                break;
            }
            if !m.push(cands[i].through_a.clone()) {
                continue;
            }
            if m.push(cands[i].through_b.clone()) {
                chosen.push(i);
                if go(cands, t, i + 1, chosen, m) {
                    return true;
                }
                chosen.pop();
                m.pop();
            }
            m.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    let mut m = SlotMatcher::new();
    go(cands, t, 0, &mut chosen, &mut m).then(|| (chosen, m.assignment().to_vec()))
}

/// Berge-`K_{2,t}`: distinct `a, b, w_1..w_t` and `2t` distinct hyperedges
/// `e_i ⊇ {a, w_i}`, `f_i ⊇ {b, w_i}`.
///
/// For each centre pair `a < b` the screening pass collects the leaves `w`
/// that can be served by two different edges; pairs with fewer than `t`
/// such leaves are skipped. Surviving pairs go to a backtracking search over
/// leaf subsets that keeps a distinct-representative matching of all chosen
/// slots.
pub fn detect_k2t(h: &Hypergraph, t: usize) -> Result<VerificationReport, BergeError> {
    if t == 0 {
        return Err(BergeError::InvalidT);
    }
    let start = Instant::now();
    let pattern = BergePattern::K2t(t);
    if h.num_edges() < 2 * t {
        let stats = DetectionStats { elapsed: start.elapsed(), ..Default::default() };
        return Ok(VerificationReport::new(pattern, None, stats));
    }

    let per_a = scan_until_hit(h.n_vertices(), |a| {
        let a = a as VertexId;
        let mut checked = 0u64;
        let mut max_cands = 0u64;
        // w -> edges containing {a, w}
        let mut near_a: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
        for &e in h.incident(a) {
            for &w in h.edge(e).iter().filter(|&&w| w != a) {
                near_a.entry(w).or_default().push(e);
            }
        }
        // b -> leaves reachable from a through w
        let mut by_b: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &w in near_a.keys() {
            for &f in h.incident(w) {
                for &b in h.edge(f).iter().filter(|&&b| b > a && b != w) {
                    let ws = by_b.entry(b).or_default();
                    if ws.last() != Some(&w) {
                        ws.push(w);
                    }
                }
            }
        }
        for (b, ws) in by_b {
            let cands: Vec<Candidate> = ws
                .into_iter()
                .filter_map(|w| {
                    let through_a = near_a[&w].clone();
                    let through_b = h.edges_through_pair(b, w);
                    let usable = through_a.iter().any(|e| through_b.iter().any(|f| f != e));
                    usable.then_some(Candidate { w, through_a, through_b })
                })
                .collect();
            checked += 1;
            max_cands = max_cands.max(cands.len() as u64);
            if cands.len() < t {
                continue;
            }
            if let Some((chosen, edges)) = choose_leaves(&cands, t) {
                let mut core = vec![a, b];
                core.extend(chosen.iter().map(|&i| cands[i].w));
                let mut assignment = Vec::with_capacity(2 * t);
                for slot in 0..t {
                    assignment.push((slot, edges[2 * slot]));
                    assignment.push((t + slot, edges[2 * slot + 1]));
                }
                assignment.sort_unstable();
                let w = Witness { core_vertices: core, edge_assignment: assignment };
                return ((checked, max_cands), Some(w));
            }
        }
        ((checked, max_cands), None)
    });

    let mut stats = DetectionStats::default();
    let mut witness = None;
    for ((checked, max_cands), w) in per_a {
        stats.pairs_checked += checked;
        stats.max_codegree = stats.max_codegree.max(max_cands);
        witness = w.or(witness);
    }
    stats.elapsed = start.elapsed();
    Ok(VerificationReport::new(pattern, witness, stats))
}

/// Reference detector for any multigraph: enumerate injective vertex maps
/// (pattern vertices by descending degree), extending a matching of pattern
/// edges to hyperedges as soon as both endpoints are placed.
pub fn detect_generic(h: &Hypergraph, g: &Multigraph) -> Result<VerificationReport, BergeError> {
    if g.edges().is_empty() {
        return Err(BergeError::EmptyPattern);
    }
    let start = Instant::now();
    let pattern = BergePattern::Generic(g.clone());
    let mut stats = DetectionStats::default();
    if g.n_vertices() > h.n_vertices() || g.edges().len() > h.num_edges() {
        stats.elapsed = start.elapsed();
        return Ok(VerificationReport::new(pattern, None, stats));
    }

    let mut order: Vec<u32> = (0..g.n_vertices() as u32).collect();
    order.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));
    let pattern_deg: Vec<usize> = (0..g.n_vertices() as u32).map(|u| g.degree(u)).collect();

    // vertices sharing an edge with v
    let shadow: Vec<Vec<VertexId>> = (0..h.n_vertices() as VertexId)
        .map(|v| {
            let mut nb: Vec<VertexId> =
                h.incident(v).iter().flat_map(|&e| h.edge(e).iter().copied()).filter(|&x| x != v).collect();
            nb.sort_unstable();
            nb.dedup();
            nb
        })
        .collect();

    struct Search<'a> {
        h: &'a Hypergraph,
        g: &'a Multigraph,
        order: &'a [u32],
        pattern_deg: &'a [usize],
        shadow: &'a [Vec<VertexId>],
        image: Vec<Option<VertexId>>,
        used: Vec<bool>,
        matcher: SlotMatcher,
        slot_edges: Vec<usize>,
        nodes: u64,
    }

    impl Search<'_> {
        fn go(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let u = self.order[depth];
            let placed_nbrs: Vec<VertexId> = self
                .g
                .edges()
                .iter()
                .filter_map(|&(x, y)| {
                    if x == u {
                        self.image[y as usize]
                    } else if y == u {
                        self.image[x as usize]
                    } else {
                        None
                    }
                })
                .collect();
            let candidates: Vec<VertexId> = match placed_nbrs.first() {
                Some(&p) => self.shadow[p as usize].clone(),
                None => (0..self.h.n_vertices() as VertexId).collect(),
            };
            for x in candidates {
                if self.used[x as usize] || self.h.incident(x).len() < self.pattern_deg[u as usize] {
                    continue;
                }
                self.nodes += 1;
                self.image[u as usize] = Some(x);
                self.used[x as usize] = true;
                let mut pushed = 0;
                let mut ok = true;
                for (pe, &(a, b)) in self.g.edges().iter().enumerate() {
                    let other = if a == u {
                        b
                    } else if b == u {
                        a
                    } else {
                        continue;
                    };
                    let Some(y) = self.image[other as usize] else { continue };
                    if self.matcher.push(self.h.edges_through_pair(x, y)) {
                        self.slot_edges.push(pe);
                        pushed += 1;
                    } else {
                        ok = false;
                        break;
                    }
                }
                if ok && self.go(depth + 1) {
                    return true;
                }
                for _ in 0..pushed {
                    self.matcher.pop();
                    self.slot_edges.pop();
                }
                self.used[x as usize] = false;
                self.image[u as usize] = None;
            }
            false
        }
    }

    let mut s = Search {
        h,
        g,
        order: &order,
        pattern_deg: &pattern_deg,
        shadow: &shadow,
        image: vec![None; g.n_vertices()],
        used: vec![false; h.n_vertices()],
        matcher: SlotMatcher::new(),
        slot_edges: Vec::new(),
        nodes: 0,
    };
    let found = s.go(0);
    stats.pairs_checked = s.nodes;
    let witness = found.then(|| {
        let mut assignment: Vec<(usize, EdgeId)> =
            s.slot_edges.iter().copied().zip(s.matcher.assignment().iter().copied()).collect();
        assignment.sort_unstable();
        Witness { core_vertices: s.image.iter().map(|v| v.expect("all placed")).collect(), edge_assignment: assignment }
    });
    stats.elapsed = start.elapsed();
    Ok(VerificationReport::new(pattern, witness, stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(r: usize, n: usize, edges: &[&[VertexId]]) -> Hypergraph {
        Hypergraph::new(r, n, edges.iter().copied()).unwrap()
    }

    fn check(h: &Hypergraph, rep: &VerificationReport) {
        assert_eq!(rep.found, rep.witness.is_some());
        if let Some(w) = &rep.witness {
            w.validate(h, &rep.pattern.multigraph()).unwrap();
        }
    }

    #[test]
    fn c2_cases() {
        let h = hg(3, 4, &[&[0, 1, 2], &[0, 1, 3]]);
        let rep = detect_c2(&h);
        assert!(rep.found);
        check(&h, &rep);
        assert_eq!(rep.witness.unwrap().core_vertices, vec![0, 1]);
        let single = hg(3, 3, &[&[0, 1, 2]]);
        assert!(!detect_c2(&single).found);
    }

    #[test]
    fn c3_cases() {
        let h = hg(3, 6, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0]]);
        let rep = detect_c3(&h);
        assert!(rep.found);
        check(&h, &rep);
        let mut core = rep.witness.unwrap().core_vertices;
        core.sort();
        assert_eq!(core, vec![0, 2, 4]);
        let two = hg(3, 5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert!(!detect_c3(&two).found);
    }

    #[test]
    fn c3_needs_three_distinct_edges() {
        // a single edge holds all three pairs of {0,1,2}
        let h = hg(3, 5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert!(!detect_c3(&h).found);
        // two edges sharing a pair plus a third edge through the remaining pair
        let h = hg(3, 5, &[&[0, 1, 2], &[0, 1, 3], &[2, 3, 4]]);
        let rep = detect_c3(&h);
        assert!(rep.found);
        check(&h, &rep);
    }

    #[test]
    fn k2t_on_complete_3_graph() {
        let mut edges = Vec::new();
        for a in 0..6u32 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    edges.push(vec![a, b, c]);
                }
            }
        }
        let h = Hypergraph::new(3, 6, edges).unwrap();
        let rep = detect_k2t(&h, 3).unwrap();
        assert!(rep.found);
        check(&h, &rep);
        assert!(detect_generic(&h, &Multigraph::k2t(3)).unwrap().found);
    }

    #[test]
    fn k2t_rejects_zero_and_short_inputs() {
        let h = hg(3, 6, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0]]);
        assert_eq!(detect_k2t(&h, 0), Err(BergeError::InvalidT));
        assert!(!detect_k2t(&h, 2).unwrap().found);
    }

    #[test]
    fn k2t_graph_case() {
        // C4 as a 2-graph is K_{2,2}
        let h = hg(2, 4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        let rep = detect_k2t(&h, 2).unwrap();
        assert!(rep.found);
        check(&h, &rep);
        assert_eq!(rep.witness.unwrap().core_vertices, vec![0, 2, 1, 3]);
        assert!(!detect_k2t(&h, 3).unwrap().found);
    }

    #[test]
    fn generic_agrees_on_named_patterns() {
        let h = hg(3, 6, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0]]);
        let rep = detect_generic(&h, &Multigraph::cycle(3)).unwrap();
        assert!(rep.found);
        check(&h, &rep);
        let h2 = hg(3, 4, &[&[0, 1, 2], &[0, 1, 3]]);
        assert!(detect_generic(&h2, &Multigraph::c2()).unwrap().found);
        assert!(!detect_generic(&h, &Multigraph::c2()).unwrap().found);
    }

    #[test]
    fn generic_rejects_empty_pattern() {
        let h = hg(3, 3, &[&[0, 1, 2]]);
        let g = Multigraph::new(2, vec![]).unwrap();
        assert_eq!(detect_generic(&h, &g), Err(BergeError::EmptyPattern));
        assert!(Multigraph::new(2, vec![(0, 0)]).is_err());
    }

    #[test]
    fn pattern_specs() {
        assert_eq!("c2".parse::<BergePattern>().unwrap(), BergePattern::C2);
        assert_eq!("C3".parse::<BergePattern>().unwrap(), BergePattern::C3);
        assert_eq!("k2t:4".parse::<BergePattern>().unwrap(), BergePattern::K2t(4));
        assert!("k2t:0".parse::<BergePattern>().is_err());
        assert!("k2t".parse::<BergePattern>().is_err());
        assert_eq!(BergePattern::K2t(3).to_string(), "k2t:3");
        let g = Multigraph::parse("3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g, Multigraph::cycle(3));
        assert!(Multigraph::parse("3 2\n0 1\n").is_err());
    }

    #[test]
    fn witness_validation_catches_tampering() {
        let h = hg(3, 6, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0]]);
        let rep = detect_c3(&h);
        let mut w = rep.witness.unwrap();
        let g = Multigraph::cycle(3);
        w.validate(&h, &g).unwrap();
        w.edge_assignment[1].1 = w.edge_assignment[0].1;
        assert!(w.validate(&h, &g).is_err());
    }

    #[test]
    fn certificate_shape() {
        let h = hg(3, 4, &[&[0, 1, 2], &[0, 1, 3]]);
        let cert = detect_c2(&h).certificate();
        assert_eq!(cert["pattern"], "c2");
        assert_eq!(cert["found"], true);
        assert_eq!(cert["witness"]["edge_assignment"][1], json!([1, 1]));
        assert!(cert["stats"].get("elapsed").is_none());
        let none = detect_c2(&hg(3, 3, &[&[0, 1, 2]])).certificate();
        assert!(none["witness"].is_null());
    }
}
