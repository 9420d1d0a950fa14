use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Duration;

use rayon::prelude::*;

use spanmu::construct::{build_spanning_tree, verify_certificate, BuildOptions, Starts};
use spanmu::format::{parse_graph, write_graph, CertificateDoc};
use spanmu::formulas::{bound_of, BoundSource};
use spanmu::graph::Graph;
use spanmu::mis::max_independent_set_within;
use spanmu::oracle::{generate, mrct, FamilySpec, GNP_RETRIES};
use spanmu::rational::{int, to_decimal, Rational};

use crate::error::{CliError, MISMATCH, PARSE, VERIFY_FAILED};

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::new(PARSE, format!("error: {}: {e}", path.display())))
}

fn family(text: &str) -> Result<FamilySpec, CliError> {
    Ok(text.parse::<FamilySpec>()?)
}

/// Reads a graph file or generates from a family spec.
pub fn load(file: Option<&Path>, spec: Option<&str>) -> Result<Graph, CliError> {
    match (file, spec) {
        (Some(path), _) => Ok(parse_graph(&read(path)?)?),
        (None, Some(s)) => Ok(generate(&family(s)?)?),
        (None, None) => Err(CliError::new(PARSE, "error: no graph given")),
    }
}

fn alpha_within(g: &Graph, budget_ms: u64) -> Option<usize> {
    max_independent_set_within(g, Some(Duration::from_millis(budget_ms))).alpha()
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn show(r: &Rational) -> String {
    format!("{r} ({})", to_decimal(r, 10))
}

pub fn construct(
    g: &Graph,
    start: Option<usize>,
    refine: bool,
    alpha_budget_ms: Option<u64>,
    table: bool,
) -> Result<(), CliError> {
    let starts = start.map_or(Starts::All, Starts::One);
    let out = build_spanning_tree(g, BuildOptions { starts, refine })?;
    let alpha = alpha_budget_ms.and_then(|ms| alpha_within(g, ms));
    let doc = CertificateDoc::new(&out.certificate, &out.tree, alpha);
    if !table {
        println!("{}", doc.to_json());
        return Ok(());
    }
    let c = &out.certificate;
    let edges: Vec<String> = out.tree.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
    println!("case    {}", c.case);
    println!("n, m    {}, {}", c.n, c.m);
    println!("k, t    {}, {}", c.k, c.t);
    println!("start   {}", out.trace.start);
    println!("mu      {}", show(&c.mu));
    println!("bound   {}", show(&c.bound));
    match alpha {
        Some(a) => println!("alpha   {a}"),
        None if alpha_budget_ms.is_some() => println!("alpha   unknown (budget exhausted)"),
        None => {}
    }
    println!("tree    {}", edges.join(" "));
    println!("digest  {}", c.trace_digest);
    Ok(())
}

pub fn verify(file: &Path, certificate: &Path, alpha_budget_ms: u64) -> Result<(), CliError> {
    let g = parse_graph(&read(file)?)?;
    let doc = CertificateDoc::from_json(&read(certificate)?)?;
    if doc.n != g.n() || doc.m != g.m() {
        return Err(CliError::new(
            MISMATCH,
            format!("error: certificate is for n={}, m={} but the graph has n={}, m={}", doc.n, doc.m, g.n(), g.m()),
        ));
    }
    let cert = doc.certificate()?;
    let reject = |code: &str, msg: String| CliError::new(VERIFY_FAILED, format!("rejected: {code}: {msg}"));
    let tree = doc.tree().map_err(|e| reject("not-spanning-tree", e.to_string()))?;
    let alpha = alpha_within(&g, alpha_budget_ms);
    if let (Some(claimed), Some(actual)) = (doc.alpha, alpha) {
        if claimed != actual {
            return Err(reject("alpha-mismatch", format!("certificate says {claimed}, exact value is {actual}")));
        }
    }
    verify_certificate(&g, &tree, &cert, alpha).map_err(|r| reject(r.code(), r.to_string()))?;
    match alpha {
        Some(a) => println!("ok: {} certifies mu = {} < {} (alpha = {a})", cert.case, cert.mu, cert.bound),
        None => println!("ok: {} certifies mu = {} < {} (alpha unknown)", cert.case, cert.mu, cert.bound),
    }
    Ok(())
}

pub fn oracle(g: &Graph, cap: u64) -> Result<(), CliError> {
    let (_, best) = mrct(g, cap)?;
    let built = build_spanning_tree(g, BuildOptions::default())?;
    let c = &built.certificate;
    let alpha = alpha_within(g, 60_000).ok_or_else(|| CliError::new(PARSE, "error: independence number timed out"))?;
    let plus_one = int(alpha as i64 + 1);
    let refined = bound_of(BoundSource::Th1, alpha).expect("alpha >= 1").value;
    println!("n, m               {}, {}", g.n(), g.m());
    println!("alpha              {alpha}");
    println!("optimum mu         {}", show(&best));
    println!("constructed mu     {}  [{}]", show(&c.mu), c.case);
    println!("certificate bound  {}", show(&c.bound));
    println!("alpha + 1          {}", show(&plus_one));
    println!("refined bound      {}", show(&refined));
    println!("constructed - opt  {}", show(&(&c.mu - &best)));
    println!("alpha + 1 - mu     {}", show(&(&plus_one - &c.mu)));
    println!("refined - mu       {}", show(&(&refined - &c.mu)));
    Ok(())
}

const BENCH_HEADER: [&str; 12] = [
    "name", "n", "m", "alpha", "k", "t", "case", "mu_num", "mu_den", "bound_num", "bound_den", "gap_decimal",
];

/// Seed of instance `i`. Connected samples retry with incremented seeds, so
/// instances are spaced far enough apart that their retries never overlap.
pub fn instance_seed(base: u64, i: u64) -> u64 {
    base.wrapping_add(i.wrapping_mul(GNP_RETRIES))
}

pub fn bench(families: &[String], reps: u64, seed: u64, out: Option<&Path>, alpha_budget_ms: u64) -> Result<(), CliError> {
    let specs = families.iter().map(|f| family(f)).collect::<Result<Vec<_>, _>>()?;
    let jobs: Vec<FamilySpec> = specs
        .iter()
        .flat_map(|s| (0..reps).map(move |i| s.with_seed(instance_seed(seed, i))))
        .collect();
    let mut rows = jobs
        .par_iter()
        .map(|spec| -> Result<(String, u64, Vec<String>), CliError> {
            let g = generate(spec)?;
            let c = build_spanning_tree(&g, BuildOptions::default())?.certificate;
            let alpha = alpha_within(&g, alpha_budget_ms);
            let row = vec![
                spec.name(),
                g.n().to_string(),
                g.m().to_string(),
                alpha.map(|a| a.to_string()).unwrap_or_default(),
                c.k.to_string(),
                c.t.to_string(),
                c.case.to_string(),
                c.mu.numer().to_string(),
                c.mu.denom().to_string(),
                c.bound.numer().to_string(),
                c.bound.denom().to_string(),
                to_decimal(&(&c.bound - &c.mu), 10),
            ];
            Ok((spec.name(), spec.seed.unwrap_or(0), row))
        })
        .collect::<Result<Vec<_>, _>>()?;
    rows.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));

    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::new(PARSE, format!("error: {e}"));
    w.write_record(BENCH_HEADER).map_err(csv_err)?;
    for (_, _, row) in &rows {
        w.write_record(row).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::new(PARSE, format!("error: {e}")))?;
    emit(out, &String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn gen(spec: &str, out: Option<&Path>) -> Result<(), CliError> {
    let g = generate(&family(spec)?)?;
    emit(out, &write_graph(&g))
}
