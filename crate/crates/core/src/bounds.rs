//! Closed-form edge bounds for Berge-free uniform hypergraphs, and reports
//! sandwiching a construction between them.
//!
//! Real-valued bounds are plain `f64`. Exact statements (edge counts and
//! the construction closed form) are evaluated in integers.

use serde::Serialize;
use thiserror::Error;

use crate::gf::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("r must be at least 3, got {0}")]
    RTooSmall(usize),
    #[error("t must be at least 1")]
    TZero,
    #[error("l must be at least 1")]
    LZero,
    #[error("q must be a power of an odd prime, got {0}")]
    NotOddPrimePower(u64),
    #[error("value overflows 128-bit arithmetic")]
    Overflow,
}

fn check_rt(r: usize, t: u64) -> Result<(), BoundsError> {
    if r < 3 {
        return Err(BoundsError::RTooSmall(r));
    }
    if t < 1 {
        return Err(BoundsError::TZero);
    }
    Ok(())
}

/// `√t / (r(r−1)) · n^{3/2} + n/r`, valid for `{C2, C3, K_{2,t+1}}`-free
/// `r`-uniform hypergraphs on `n` vertices.
pub fn ub_general(r: usize, t: u64, n: u64) -> Result<f64, BoundsError> {
    check_rt(r, t)?;
    let (r, t, n) = (r as f64, t as f64, n as f64);
    Ok(t.sqrt() / (r * (r - 1.0)) * n.powf(1.5) + n / r)
}

/// `√(2/(r−1)) · n^{3/2} + n` for `{C2, C3, K_{2,3}}`-free `r`-partite
/// hypergraphs with `n` vertices per part.
pub fn ub_rpartite(r: usize, n_per_part: u64) -> Result<f64, BoundsError> {
    check_rt(r, 1)?;
    let (r, n) = (r as f64, n_per_part as f64);
    Ok((2.0 / (r - 1.0)).sqrt() * n.powf(1.5) + n)
}

/// `√(2(t+1)) / r · n^{3/2} + n/r` for `{C2, K_{2,t+1}}`-free hypergraphs.
pub fn ub_palmer(r: usize, t: u64, n: u64) -> Result<f64, BoundsError> {
    check_rt(r, t)?;
    let (r, t, n) = (r as f64, t as f64, n as f64);
    Ok((2.0 * (t + 1.0)).sqrt() / r * n.powf(1.5) + n / r)
}

/// Largest `t` with the construction known to be `K_{2,t+1}`-free:
/// `2r − 4` when `l = 1`, `(r−1)(2l²−l)` when `2l + 1 ≥ r`, and
/// `2l²(r−2)` beyond that range.
pub fn t_eff(r: usize, l: usize) -> Result<u64, BoundsError> {
    if r < 3 {
        return Err(BoundsError::RTooSmall(r));
    }
    if l < 1 {
        return Err(BoundsError::LZero);
    }
    let (r, l) = (r as u64, l as u64);
    Ok(((r - 1) * (2 * l * l - l)).max(2 * l * l * (r - 2)))
}

fn odd_prime_power(q: u64) -> bool {
    if q < 3 || q.is_multiple_of(2) {
        return false;
    }
    let p = (3..=q).step_by(2).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let mut m = q;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1 && is_prime(p)
}

fn isqrt_exact(v: u128) -> Option<u128> {
    let mut s = (v as f64).sqrt() as u128;
    while s * s > v {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= v {
        s += 1;
    }
    (s * s == v).then_some(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstructionCount {
    pub r: usize,
    pub l: usize,
    pub q: u64,
    /// `r q^2`
    pub n: u64,
    /// `l q^2 (q − 1)`
    pub edges: u64,
    /// `l / r^{3/2} · n^{3/2} − (l/r) · n`, evaluated in integers.
    pub closed_form_exact: i128,
    /// The same expression in floating point.
    pub closed_form: f64,
}

/// Edge count of the construction together with its closed form in `n`.
/// The closed form is evaluated exactly: `n/r = q^2`, so
/// `n^{3/2} / r^{3/2} = √((n/r)^3)` is an integer.
pub fn lb_construction(r: usize, l: usize, q: u64) -> Result<ConstructionCount, BoundsError> {
    if r < 2 {
        return Err(BoundsError::RTooSmall(r));
    }
    if l < 1 {
        return Err(BoundsError::LZero);
    }
    if !odd_prime_power(q) {
        return Err(BoundsError::NotOddPrimePower(q));
    }
    let (r128, l128, q128) = (r as u128, l as u128, q as u128);
    let n = r128.checked_mul(q128 * q128).ok_or(BoundsError::Overflow)?;
    let edges = l128 * q128 * q128 * (q128 - 1);
    let per_part = n / r128;
    let cube = per_part.checked_pow(3).ok_or(BoundsError::Overflow)?;
    let root = isqrt_exact(cube).ok_or(BoundsError::Overflow)?;
    let closed_form_exact = (l128 * root) as i128 - (l128 * n / r128) as i128;
    let (rf, lf, nf) = (r as f64, l as f64, n as f64);
    let closed_form = lf / rf.powf(1.5) * nf.powf(1.5) - lf / rf * nf;
    Ok(ConstructionCount {
        r,
        l,
        q,
        n: u64::try_from(n).map_err(|_| BoundsError::Overflow)?,
        edges: u64::try_from(edges).map_err(|_| BoundsError::Overflow)?,
        closed_form_exact,
        closed_form,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Upper,
    Lower,
    Exact,
    Reference,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub name: String,
    pub value: f64,
    pub kind: BoundKind,
    pub locus: String,
}

fn entry(name: impl Into<String>, value: f64, kind: BoundKind, locus: &str) -> BoundEntry {
    BoundEntry { name: name.into(), value, kind, locus: locus.to_string() }
}

/// Known constants of related extremal problems, for context only.
pub fn reference_constants(t: u64) -> Vec<BoundEntry> {
    use BoundKind::Reference;
    vec![
        entry("c2_c3_c4_free_3graph", 1.0 / 6.0, Reference, "ex_3(n,{C2,C3,C4}) ~ c n^{3/2}"),
        entry("girth5_graph_lower", 1.0 / (2.0 * 2f64.sqrt()), Reference, "ex_2(n,{C3,C4}) >= c n^{3/2}"),
        entry("girth5_graph_upper", 0.5, Reference, "ex_2(n,{C3,C4}) <= c n^{3/2}"),
        entry(format!("k2t_graph(t={t})"), 0.5 * (t as f64).sqrt(), Reference, "ex_2(n,K_{2,t+1}) ~ c n^{3/2}"),
        entry("c3_k23_free_graph_lower", 1.0 / 3f64.sqrt(), Reference, "ex_2(n,{C3,K_{2,3}}) >= c n^{3/2}"),
    ]
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BoundsInputs {
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub inputs: BoundsInputs,
    pub entries: Vec<BoundEntry>,
}

const LOCUS_GENERAL: &str = "ex_r(n,{C2,C3,K_{2,t+1}}) upper bound";
const LOCUS_PALMER: &str = "ex_r(n,{C2,K_{2,t+1}}) upper bound";
const LOCUS_RPARTITE: &str = "z_r(n,{C2,C3,K_{2,3}}) upper bound, n per part";

impl BoundsReport {
    /// Bounds at `(r, t, n)`; the r-partite entry reads `n` as the part size.
    pub fn general(r: usize, t: u64, n: u64) -> Result<Self, BoundsError> {
        let mut entries = vec![
            entry("ub_general", ub_general(r, t, n)?, BoundKind::Upper, LOCUS_GENERAL),
            entry("ub_palmer", ub_palmer(r, t, n)?, BoundKind::Upper, LOCUS_PALMER),
            entry("ub_rpartite", ub_rpartite(r, n)?, BoundKind::Upper, LOCUS_RPARTITE),
        ];
        entries.extend(reference_constants(t));
        Ok(BoundsReport { inputs: BoundsInputs { r, t: Some(t), n: Some(n), ..Default::default() }, entries })
    }

    /// The construction at `(r, l, q)` between the upper bounds at
    /// `n = r q^2` and `t = t_eff(r, l)`.
    pub fn construction(r: usize, l: usize, q: u64) -> Result<Self, BoundsError> {
        let c = lb_construction(r, l, q)?;
        let t = t_eff(r, l)?;
        let mut entries = vec![
            entry("construction_edges", c.edges as f64, BoundKind::Exact, "l q^2 (q-1) edges on r q^2 vertices"),
            entry("construction_closed_form", c.closed_form, BoundKind::Lower, "l/r^{3/2} n^{3/2} - (l/r) n"),
            entry("ub_general", ub_general(r, t, c.n)?, BoundKind::Upper, LOCUS_GENERAL),
            entry("ub_palmer", ub_palmer(r, t, c.n)?, BoundKind::Upper, LOCUS_PALMER),
            entry("ub_rpartite", ub_rpartite(r, q * q)?, BoundKind::Upper, LOCUS_RPARTITE),
        ];
        entries.extend(reference_constants(t));
        Ok(BoundsReport { inputs: BoundsInputs { r, t: Some(t), l: Some(l), q: Some(q), n: Some(c.n) }, entries })
    }

    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn to_table(&self) -> String {
        let rows: Vec<[String; 4]> = self
            .entries
            .iter()
            .map(|e| {
                let kind = serde_json::to_value(e.kind).ok().and_then(|v| v.as_str().map(String::from));
                [e.name.clone(), kind.unwrap_or_default(), format_sig(e.value, 6), e.locus.clone()]
            })
            .collect();
        let header = ["name", "kind", "value", "locus"].map(String::from);
        let mut widths = [0usize; 4];
        for row in std::iter::once(&header).chain(&rows) {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let i = &self.inputs;
        let mut params = vec![format!("r={}", i.r)];
        params.extend(i.t.map(|v| format!("t={v}")));
        params.extend(i.l.map(|v| format!("l={v}")));
        params.extend(i.q.map(|v| format!("q={v}")));
        params.extend(i.n.map(|v| format!("n={v}")));
        out.push_str(&params.join(" "));
        out.push('\n');
        for row in std::iter::once(&header).chain(&rows) {
            let line = format!(
                "{:<w0$}  {:<w1$}  {:>w2$}  {}",
                row[0],
                row[1],
                row[2],
                row[3],
                w0 = widths[0],
                w1 = widths[1],
                w2 = widths[2]
            );
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// `v` rounded to `digits` significant digits, trailing zeros dropped.
pub fn format_sig(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let mag = v.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - mag).max(0) as usize;
    let s = format!("{v:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn general_values() {
        assert!(close(ub_general(3, 2, 75).unwrap(), 178.09, 0.01));
        assert_eq!(ub_general(3, 2, 0).unwrap(), 0.0);
        assert!(close(ub_general(3, 2, 5).unwrap(), 4.302, 0.001));
        assert_eq!(ub_general(2, 2, 5), Err(BoundsError::RTooSmall(2)));
        assert_eq!(ub_general(3, 0, 5), Err(BoundsError::TZero));
    }

    #[test]
    fn rpartite_values() {
        assert!(close(ub_rpartite(3, 25).unwrap(), 150.0, 1e-9));
        assert_eq!(ub_rpartite(3, 0).unwrap(), 0.0);
        assert!(close(ub_rpartite(5, 16).unwrap(), 61.2548, 1e-3));
    }

    #[test]
    fn palmer_values() {
        let expect = 26f64.sqrt() / 3.0 * 507f64 * 507f64.sqrt() + 169.0;
        assert!(close(ub_palmer(3, 12, 507).unwrap(), expect, 1e-6));
        assert!(close(ub_palmer(3, 12, 507).unwrap(), 19572.4, 0.1));
        assert_eq!(ub_palmer(3, 1, 0).unwrap(), 0.0);
        assert!(close(ub_palmer(3, 2, 75).unwrap(), 555.3, 0.05));
    }

    #[test]
    fn construction_counts() {
        let c = lb_construction(3, 1, 5).unwrap();
        assert_eq!((c.n, c.edges, c.closed_form_exact), (75, 100, 100));
        let c = lb_construction(3, 2, 13).unwrap();
        assert_eq!((c.edges, c.closed_form_exact), (4056, 4056));
        assert!(close(c.closed_form, 4056.0, 1e-6));
        let c = lb_construction(3, 1, 3).unwrap();
        assert_eq!(c.edges, 27 - 9);
        assert!(lb_construction(3, 1, 4).is_err());
        assert!(lb_construction(3, 1, 15).is_err());
        assert!(lb_construction(3, 1, 9).is_ok());
    }

    #[test]
    fn t_eff_cases() {
        assert_eq!(t_eff(3, 1).unwrap(), 2);
        assert_eq!(t_eff(4, 1).unwrap(), 4);
        assert_eq!(t_eff(3, 2).unwrap(), 12);
        assert_eq!(t_eff(5, 2).unwrap(), 24);
        assert!(t_eff(2, 1).is_err());
    }

    #[test]
    fn reference_entries() {
        let refs = reference_constants(1);
        assert_eq!(refs[0].value, 1.0 / 6.0);
        assert!(close(refs[1].value, 0.353553, 1e-6));
        assert_eq!(refs[3].value, 0.5);
        assert!(refs.iter().all(|e| e.kind == BoundKind::Reference));
    }

    #[test]
    fn three_part_constant_beats_c4_constant() {
        // compare squares: 1/3^3 against 1/6^2
        let (three_part_den, c4_den) = (3u64.pow(3), 6u64.pow(2));
        assert!(three_part_den < c4_den);
        assert!(1.0 / 27f64.sqrt() > 1.0 / 6.0);
    }

    #[test]
    fn report_table() {
        let rep = BoundsReport::construction(3, 1, 5).unwrap();
        assert_eq!(rep.get("construction_edges").unwrap().value, 100.0);
        let table = rep.to_table();
        assert!(table.starts_with("r=3 t=2 l=1 q=5 n=75\n"));
        assert!(table.contains("178.093"));
        let rep = BoundsReport::general(3, 2, 75).unwrap();
        assert!(rep.to_table().contains("178.093"));
        assert!(BoundsReport::general(2, 1, 10).is_err());
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(19572.43, 6), "19572.4");
        assert_eq!(format_sig(0.16666666, 6), "0.166667");
        assert_eq!(format_sig(100.0, 6), "100");
        assert_eq!(format_sig(1234567.0, 6), "1234567");
    }
}
