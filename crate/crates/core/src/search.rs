//! Exact Turán numbers of tiny instances by exhaustive search.
//!
//! [`extremal`] and [`extremal_rpartite`] run a depth-first branch and
//! bound over candidate edges in lexicographic order, always including the
//! first candidate (every nonempty hypergraph can be relabelled to contain
//! it). [`naive_extremal`] enumerates every edge subset and only uses the
//! generic detector; it exists to cross-check the former.

use web_time::{Duration, Instant};

use serde_json::json;
use thiserror::Error;

use crate::berge::{detect, detect_generic, BergeError, BergePattern, Multigraph};
use crate::bounds::{ub_general, ub_palmer, ub_rpartite};
use crate::hypergraph::{Hypergraph, HypergraphError, VertexId};

/// Upper limit on `C(n, r)` for [`naive_extremal`].
pub const NAIVE_MAX_CANDIDATES: usize = 20;
/// Upper limit on the candidate edge list of the branch and bound.
pub const MAX_CANDIDATES: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("r must be at least 2, got {0}")]
    InvalidR(usize),
    #[error("need at least r = {r} vertices, got {n}")]
    TooFewVertices { r: usize, n: usize },
    #[error("forbidden family must be nonempty")]
    EmptyForbidden,
    #[error("{candidates} candidate edges exceed the limit of {limit}")]
    TooLarge { candidates: usize, limit: usize },
    #[error(transparent)]
    Berge(#[from] BergeError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    General,
    Rpartite,
}

impl SearchMode {
    fn name(self) -> &'static str {
        match self {
            SearchMode::General => "general",
            SearchMode::Rpartite => "rpartite",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Complete,
    /// A budget ran out; `value` is the best found so far.
    Incomplete,
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub mode: SearchMode,
    pub r: usize,
    /// Vertex count, or part size in r-partite mode.
    pub n: usize,
    pub forbidden: Vec<BergePattern>,
    pub value: usize,
    pub witness: Hypergraph,
    pub status: SearchStatus,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl SearchResult {
    /// JSON form; timing is left out so equal runs print equal bytes.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "mode": self.mode.name(),
            "r": self.r,
            "n": self.n,
            "forbidden": self.forbidden.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "value": self.value,
            "status": match self.status {
                SearchStatus::Complete => "complete",
                SearchStatus::Incomplete => "incomplete",
            },
            "nodes_explored": self.nodes_explored,
            "witness": self.witness.to_edge_list(),
        })
    }
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// All `r`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, r: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut cur: Vec<VertexId> = (0..r as VertexId).collect();
    if r > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..r).rev().find(|&i| (cur[i] as usize) < n - r + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// All transversals of `r` consecutive blocks of `n` vertices, lexicographic.
fn transversals(n: usize, r: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut digits = vec![0usize; r];
    loop {
        out.push(digits.iter().enumerate().map(|(p, &d)| (p * n + d) as VertexId).collect());
        let Some(i) = (0..r).rev().find(|&i| digits[i] + 1 < n) else {
            return out;
        };
        digits[i] += 1;
        for d in &mut digits[i + 1..] {
            *d = 0;
        }
    }
}

/// Smallest closed-form upper bound applying to the family, floored.
fn bound_cap(r: usize, n_total: usize, part_size: Option<usize>, forbidden: &[BergePattern]) -> Option<usize> {
    if r < 3 {
        return None;
    }
    let has = |p: &BergePattern| forbidden.contains(p);
    let k2t = forbidden
        .iter()
        .filter_map(|p| match p {
            BergePattern::K2t(s) if *s >= 2 => Some(*s as u64),
            _ => None,
        })
        .min();
    let mut caps = Vec::new();
    if let (true, Some(s)) = (has(&BergePattern::C2), k2t) {
        let n = n_total as u64;
        if has(&BergePattern::C3) {
            caps.extend(ub_general(r, s - 1, n).ok());
        }
        caps.extend(ub_palmer(r, s - 1, n).ok());
        if let (true, true, Some(m)) = (has(&BergePattern::C3), s <= 3, part_size) {
            caps.extend(ub_rpartite(r, m as u64).ok());
        }
    }
    caps.into_iter().map(|b| (b + 1e-9).floor() as usize).min()
}

fn validate_family(forbidden: &[BergePattern]) -> Result<(), SearchError> {
    if forbidden.is_empty() {
        return Err(SearchError::EmptyForbidden);
    }
    for p in forbidden {
        match p {
            BergePattern::K2t(0) => return Err(BergeError::InvalidT.into()),
            BergePattern::Generic(g) if g.edges().is_empty() => return Err(BergeError::EmptyPattern.into()),
            _ => {}
        }
    }
    Ok(())
}

struct Search<'a> {
    r: usize,
    n_total: usize,
    candidates: Vec<Vec<VertexId>>,
    forbidden: &'a [BergePattern],
    linear: bool,
    pair_used: Vec<bool>,
    free_pairs: usize,
    current: Vec<usize>,
    best: Vec<usize>,
    cap: Option<usize>,
    budget: Budget,
    start: Instant,
    nodes: u64,
    stopped: bool,
    done: bool,
    error: Option<SearchError>,
}

impl Search<'_> {
    fn pairs(edge: &[VertexId]) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        edge.iter().enumerate().flat_map(move |(i, &a)| edge[i + 1..].iter().map(move |&b| (a, b)))
    }

    fn pair_index(&self, (a, b): (VertexId, VertexId)) -> usize {
        a as usize * self.n_total + b as usize
    }

    fn admissible(&mut self, idx: usize) -> bool {
        let edge = &self.candidates[idx];
        if self.linear && Self::pairs(edge).any(|p| self.pair_used[self.pair_index(p)]) {
            return false;
        }
        let others: Vec<&BergePattern> =
            self.forbidden.iter().filter(|p| !(self.linear && **p == BergePattern::C2)).collect();
        if others.is_empty() {
            return true;
        }
        let edges = self.current.iter().chain(std::iter::once(&idx)).map(|&i| &self.candidates[i]);
        let h = match Hypergraph::new(self.r, self.n_total, edges) {
            Ok(h) => h,
            Err(e) => {
                self.error = Some(e.into());
                return false;
            }
        };
        for p in others {
            match detect(&h, p) {
                Ok(rep) if rep.found => return false,
                Ok(_) => {}
                Err(e) => {
                    self.error = Some(e.into());
                    return false;
                }
            }
        }
        true
    }

    fn set_pairs(&mut self, idx: usize, used: bool) {
        if !self.linear {
            return;
        }
        let pairs: Vec<_> = Self::pairs(&self.candidates[idx]).collect();
        for p in pairs {
            let k = self.pair_index(p);
            self.pair_used[k] = used;
        }
        let per_edge = pairs_per_edge(self.r);
        if used {
            self.free_pairs -= per_edge;
        } else {
            self.free_pairs += per_edge;
        }
    }

    fn out_of_budget(&self) -> bool {
        if self.budget.max_nodes.is_some_and(|m| self.nodes > m) {
            return true;
        }
        match self.budget.max_seconds {
            Some(s) if self.nodes.is_multiple_of(256) => self.start.elapsed().as_secs_f64() > s,
            _ => false,
        }
    }

    fn dfs(&mut self, idx: usize) {
        if self.done || self.stopped || self.error.is_some() {
            return;
        }
        self.nodes += 1;
        if self.out_of_budget() {
            self.stopped = true;
            return;
        }
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
            if self.cap == Some(self.best.len()) {
                self.done = true;
                return;
            }
        }
        if idx == self.candidates.len() {
            return;
        }
        let mut upper = self.current.len() + (self.candidates.len() - idx);
        if self.linear {
            upper = upper.min(self.current.len() + self.free_pairs / pairs_per_edge(self.r));
        }
        if let Some(c) = self.cap {
            upper = upper.min(c);
        }
        if upper <= self.best.len() {
            return;
        }
        if self.admissible(idx) {
            self.current.push(idx);
            self.set_pairs(idx, true);
            self.dfs(idx + 1);
            self.set_pairs(idx, false);
            self.current.pop();
        }
        if idx > 0 {
            self.dfs(idx + 1);
        }
    }
}

fn pairs_per_edge(r: usize) -> usize {
    r * (r - 1) / 2
}

fn run(
    mode: SearchMode,
    r: usize,
    n: usize,
    forbidden: &[BergePattern],
    budget: Budget,
) -> Result<SearchResult, SearchError> {
    let start = Instant::now();
    if r < 2 {
        return Err(SearchError::InvalidR(r));
    }
    validate_family(forbidden)?;
    let (n_total, count, part_size) = match mode {
        SearchMode::General => {
            if n < r {
                return Err(SearchError::TooFewVertices { r, n });
            }
            (n, binomial(n, r), None)
        }
        SearchMode::Rpartite => {
            if n < 1 {
                return Err(SearchError::TooFewVertices { r, n });
            }
            (r * n, n.checked_pow(r as u32), Some(n))
        }
    };
    let count = count.unwrap_or(usize::MAX);
    if count > MAX_CANDIDATES {
        return Err(SearchError::TooLarge { candidates: count, limit: MAX_CANDIDATES });
    }
    let candidates = match mode {
        SearchMode::General => subsets(n, r),
        SearchMode::Rpartite => transversals(n, r),
    };
    let linear = forbidden.contains(&BergePattern::C2);
    let mut s = Search {
        r,
        n_total,
        candidates,
        forbidden,
        linear,
        pair_used: vec![false; n_total * n_total],
        free_pairs: match mode {
            SearchMode::General => pairs_per_edge(n),
            // only pairs across parts can be covered
            SearchMode::Rpartite => pairs_per_edge(r) * n * n,
        },
        current: Vec::new(),
        best: Vec::new(),
        cap: bound_cap(r, n_total, part_size, forbidden),
        budget,
        start,
        nodes: 0,
        stopped: false,
        done: false,
        error: None,
    };
    s.dfs(0);
    if let Some(e) = s.error {
        return Err(e);
    }
    let witness = Hypergraph::new(r, n_total, s.best.iter().map(|&i| &s.candidates[i]))?;
    Ok(SearchResult {
        mode,
        r,
        n,
        forbidden: forbidden.to_vec(),
        value: s.best.len(),
        witness,
        status: if s.stopped { SearchStatus::Incomplete } else { SearchStatus::Complete },
        nodes_explored: s.nodes,
        elapsed: start.elapsed(),
    })
}

/// Largest `r`-uniform hypergraph on `n` labelled vertices containing no
/// Berge copy of any forbidden pattern.
pub fn extremal(r: usize, n: usize, forbidden: &[BergePattern], budget: Budget) -> Result<SearchResult, SearchError> {
    run(SearchMode::General, r, n, forbidden, budget)
}

/// As [`extremal`], restricted to `r`-partite hypergraphs with parts
/// `{p n, .., p n + n − 1}`.
pub fn extremal_rpartite(
    r: usize,
    n_per_part: usize,
    forbidden: &[BergePattern],
    budget: Budget,
) -> Result<SearchResult, SearchError> {
    run(SearchMode::Rpartite, r, n_per_part, forbidden, budget)
}

/// Brute force over all `2^C(n,r)` edge sets, checked with the generic
/// detector alone. Requires `C(n, r) ≤ 20`.
pub fn naive_extremal(r: usize, n: usize, forbidden: &[BergePattern]) -> Result<usize, SearchError> {
    if r < 2 {
        return Err(SearchError::InvalidR(r));
    }
    if n < r {
        return Err(SearchError::TooFewVertices { r, n });
    }
    validate_family(forbidden)?;
    let count = binomial(n, r).unwrap_or(usize::MAX);
    if count > NAIVE_MAX_CANDIDATES {
        return Err(SearchError::TooLarge { candidates: count, limit: NAIVE_MAX_CANDIDATES });
    }
    let patterns: Vec<Multigraph> = forbidden.iter().map(BergePattern::multigraph).collect();
    let all = subsets(n, r);
    let mut best = 0;
    for mask in 0u32..(1u32 << count) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let edges = (0..count).filter(|i| mask >> i & 1 == 1).map(|i| &all[i]);
        let h = Hypergraph::new(r, n, edges)?;
        let mut free = true;
        for g in &patterns {
            if detect_generic(&h, g)?.found {
                free = false;
                break;
            }
        }
        if free {
            best = size;
        }
    }
    Ok(best)
}
