use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use bergekit::berge::{self, BergePattern, Multigraph};
use bergekit::bounds::{t_eff, BoundsReport};
use bergekit::construction::{
    build_hypergraph, select_multipliers, select_parameters, verify_pairwise_freeness, ConstructionParams,
};
use bergekit::gf::{lemmas, FieldContext, FieldDescriptor};
use bergekit::search::{extremal, extremal_rpartite, Budget, SearchStatus};
use bergekit::Hypergraph;

use crate::{BoundsArgs, Cli, Command, ConstructArgs, ExtremalArgs, LemmasArgs, VerifyArgs};

const FOUND: u8 = 2;

pub fn run(cli: Cli) -> Result<u8> {
    if cli.threads == 0 {
        bail!("--threads must be at least 1");
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build().context("building thread pool")?;
    let seed = cli.seed;
    pool.install(|| match cli.command {
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Bounds(a) => bounds(a),
        Command::Extremal(a) => extremal_cmd(a),
        Command::Lemmas(a) => lemmas_cmd(a, seed),
    })
}

/// `p^k`, or a plain integer that is a prime power.
fn parse_field(s: &str) -> Result<FieldContext> {
    if s.contains('^') {
        let d: FieldDescriptor = s.parse()?;
        return Ok(FieldContext::from_descriptor(d)?);
    }
    let q: u32 = s.trim().parse().with_context(|| format!("invalid field order {s:?}"))?;
    let p = (2..=q.max(2)).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let (mut m, mut k) = (q, 0);
    while m > 1 && m % p == 0 {
        m /= p;
        k += 1;
    }
    if m != 1 || k == 0 {
        bail!("field order {q} is not a prime power");
    }
    Ok(FieldContext::new(p, k)?)
}

fn check_output(path: &Path) -> Result<()> {
    let parent = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    if !parent.is_dir() {
        bail!("output directory {} does not exist", parent.display());
    }
    Ok(())
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn parse_pattern(spec: &str) -> Result<BergePattern> {
    if let Some(file) = spec.trim().strip_prefix("generic:") {
        let text = fs::read_to_string(file).with_context(|| format!("reading pattern file {file}"))?;
        return Ok(BergePattern::Generic(Multigraph::parse(&text)?));
    }
    Ok(spec.parse()?)
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Hypergraph::parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn construct(a: ConstructArgs) -> Result<u8> {
    let labels_path = a.labels.clone().unwrap_or_else(|| a.out.with_extension("labels.json"));
    let params_path = a.params.clone().unwrap_or_else(|| a.out.with_extension("params.json"));
    for p in [&a.out, &labels_path, &params_path] {
        check_output(p)?;
    }
    let field = parse_field(&a.q)?;
    let parse_all =
        |xs: &[String]| -> Result<Vec<_>> { xs.iter().map(|s| field.parse(s).map_err(Into::into)).collect() };
    let params = match (a.alphas.is_empty(), a.ms.is_empty()) {
        (true, true) => select_parameters(a.r, a.l, &field)?,
        (false, true) => select_multipliers(&field, parse_all(&a.alphas)?, a.l)?,
        (alphas_empty, false) => {
            let alphas = if alphas_empty { field.elements().take(a.r).collect() } else { parse_all(&a.alphas)? };
            if alphas.len() != a.r {
                bail!("--r {} does not match {} alphas", a.r, alphas.len());
            }
            if a.ms.len() != a.l {
                bail!("--l {} does not match {} multipliers", a.l, a.ms.len());
            }
            ConstructionParams::new(field.clone(), alphas, parse_all(&a.ms)?)?
        }
    };
    if params.r() != a.r {
        bail!("--r {} does not match {} alphas", a.r, params.r());
    }
    let c = build_hypergraph(&params)?;
    let h = c.hypergraph();
    write_text(&a.out, &h.to_edge_list())?;
    write_text(&labels_path, &pretty(&c.labels_json()))?;
    write_text(&params_path, &pretty(&params.to_json()))?;

    let f = params.field();
    let list = |xs: &[bergekit::FieldElement]| xs.iter().map(|&x| f.format(x)).collect::<Vec<_>>().join(" ");
    let degrees = h.degree_sequence();
    let (lo, hi) = (degrees.iter().min().copied().unwrap_or(0), degrees.iter().max().copied().unwrap_or(0));
    println!("field GF({})", f.descriptor());
    println!("r {} l {}", params.r(), params.l());
    println!("alphas {}", list(params.alphas()));
    println!("ms {}", list(params.ms()));
    println!("vertices {}", h.n_vertices());
    println!("edges {}", h.num_edges());
    if lo == hi {
        println!("regular degree {lo}");
    } else {
        println!("degrees {lo}..{hi}");
    }
    if a.check {
        let mut patterns = vec![BergePattern::C2, BergePattern::C3];
        if params.r() >= 3 {
            patterns.push(BergePattern::K2t(t_eff(params.r(), params.l())? as usize + 1));
        } else if params.l() == 1 {
            patterns.push(BergePattern::K2t(2));
        }
        for p in &patterns {
            let rep = berge::detect(h, p)?;
            println!("{p} {}", if rep.found { "found" } else { "free" });
        }
        let rep = verify_pairwise_freeness(&c)?;
        let two = rep.pairs.iter().map(|s| s.max_common).max().unwrap_or(0);
        let one = rep.pairs.iter().map(|s| s.max_common_one_color).max().unwrap_or(0);
        let three = rep.triples.iter().map(|s| s.max_common).max().unwrap_or(0);
        let proj = rep.pairs.iter().all(|s| s.projection_matches);
        println!("two-part max common {two} (bound {})", rep.two_part_bound);
        println!("one-colour max common {one} (bound 1)");
        if !rep.triples.is_empty() {
            println!("three-part max common {three} (bound {})", rep.three_part_bound);
        }
        println!("projection {}", if proj { "matches" } else { "differs" });
    }
    Ok(0)
}

fn verify(a: VerifyArgs) -> Result<u8> {
    if let Some(out) = &a.out {
        check_output(out)?;
    }
    let pattern = parse_pattern(&a.pattern)?;
    let h = read_hypergraph(&a.input)?;
    let start = Instant::now();
    let rep = berge::detect(&h, &pattern)?;
    eprintln!(
        "{} vertices, {} edges; {pattern} {} in {:.3}s",
        h.n_vertices(),
        h.num_edges(),
        if rep.found { "found" } else { "free" },
        start.elapsed().as_secs_f64()
    );
    let text = pretty(&rep.certificate());
    match &a.out {
        Some(out) => write_text(out, &text)?,
        None => print!("{text}"),
    }
    Ok(if rep.found { FOUND } else { 0 })
}

fn field_order(s: &str) -> Result<u64> {
    if s.contains('^') {
        let d: FieldDescriptor = s.parse()?;
        return (d.p as u64).checked_pow(d.k).with_context(|| format!("field order {s} overflows"));
    }
    s.trim().parse().with_context(|| format!("invalid field order {s:?}"))
}

fn bounds(a: BoundsArgs) -> Result<u8> {
    let report = match (a.t, a.n, a.l, &a.q) {
        (Some(t), Some(n), None, None) => BoundsReport::general(a.r, t, n)?,
        (None, None, Some(l), Some(q)) => BoundsReport::construction(a.r, l, field_order(q)?)?,
        _ => bail!("give either --t and --n, or --l and --q"),
    };
    if a.json {
        print!("{}", pretty(&serde_json::to_value(&report)?));
    } else {
        print!("{}", report.to_table());
    }
    Ok(0)
}

fn extremal_cmd(a: ExtremalArgs) -> Result<u8> {
    if let Some(out) = &a.out {
        check_output(out)?;
    }
    let forbidden = a.forbid.iter().map(|s| parse_pattern(s)).collect::<Result<Vec<_>>>()?;
    let budget = Budget { max_nodes: a.budget_nodes, max_seconds: a.budget_seconds };
    let res = if a.rpartite {
        extremal_rpartite(a.r, a.n, &forbidden, budget)?
    } else {
        extremal(a.r, a.n, &forbidden, budget)?
    };
    eprintln!(
        "value {} ({}), {} nodes in {:.3}s",
        res.value,
        if res.status == SearchStatus::Complete { "complete" } else { "incomplete" },
        res.nodes_explored,
        res.elapsed.as_secs_f64()
    );
    let text = pretty(&res.to_json());
    match &a.out {
        Some(out) => write_text(out, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn lemmas_cmd(a: LemmasArgs, seed: u64) -> Result<u8> {
    let f = parse_field(&a.q)?;
    let runs = [
        lemmas::oracle_lemma_ruzsa(&f, a.samples, seed),
        lemmas::oracle_lemma_sidon(&f, a.samples, seed),
        lemmas::oracle_lemma_triangle(&f, a.samples, seed),
        lemmas::oracle_lemma_threepairs(&f, a.samples, seed),
    ];
    print!("{}", pretty(&serde_json::to_value(&runs)?));
    Ok(if runs.iter().any(|r| r.counterexample.is_some()) { FOUND } else { 0 })
}
