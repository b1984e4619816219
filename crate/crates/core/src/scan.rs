//! Randomized certification scans and random graph helpers.
//!
//! Graphs are drawn from `G(n, m)` with a ChaCha8 stream seeded by
//! `seed_from_u64(seed)`, rejecting samples that are disconnected or have
//! `δ < k + 1`. Sampling is sequential so the graph sequence depends only on
//! the config; checks then fan out over a rayon pool and are reassembled by
//! sample index.

use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::conditions::{evaluate, threshold_edges, EvaluateOptions, FamilyId, Theorem};
use crate::decider::{Outcome, DEFAULT_BUDGET};
use crate::error::{param, Error, Result};
use crate::graph::Graph;
use crate::graph6;

pub const SCHEMA: &str = "leafcon/1";

/// Rejection attempts allowed per sample before the config is declared
/// infeasible.
pub const MAX_ATTEMPTS_PER_SAMPLE: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanConfig {
    pub n: usize,
    pub k: usize,
    pub sample_count: usize,
    pub seed: u64,
    /// Defaults to the `C(n-3, 2) + 3k + 5` threshold.
    pub edge_min: Option<usize>,
    pub budget: u64,
    /// Worker threads; `0` lets rayon decide.
    pub parallelism: usize,
    /// Draw `m` uniformly from `edge_min..=C(n, 2)` instead of fixing it.
    pub edges_free: bool,
    /// Record wall-clock time per sample. Off by default since it breaks
    /// byte-identical reports.
    pub timings: bool,
}

impl ScanConfig {
    pub fn new(n: usize, k: usize, sample_count: usize, seed: u64) -> Self {
        ScanConfig {
            n,
            k,
            sample_count,
            seed,
            edge_min: None,
            budget: DEFAULT_BUDGET,
            parallelism: 0,
            edges_free: false,
            timings: false,
        }
    }

    pub fn resolved_edge_min(&self) -> Result<usize> {
        match self.edge_min {
            Some(m) => Ok(m),
            None => threshold_edges(Theorem::Thm14, self.n, self.k),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SampleClass {
    /// The decider confirmed k-leaf-connectivity.
    Confirmed,
    /// Not k-leaf-connected, and the closure is a recognized exception.
    Exception,
    BudgetExhausted,
    /// Anything else: a refuted graph with an unrecognized closure, or a
    /// confirmed one whose closure is a known exception.
    Anomaly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScanFlags {
    pub min_degree_ok: bool,
    pub connectivity_ok: bool,
    pub thm11: bool,
    pub thm12: bool,
    pub thm14: bool,
    pub lemma21: bool,
    pub thm45_i: bool,
    pub thm45_ii: bool,
    pub thm45_iii: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRecord {
    pub index: usize,
    pub graph6: String,
    pub e: usize,
    pub min_degree: usize,
    pub vertex_connectivity: usize,
    pub flags: ScanFlags,
    pub decider: Outcome,
    pub exception: Option<FamilyId>,
    pub class: SampleClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub sample_count: usize,
    pub confirmed: usize,
    pub exceptions: usize,
    pub budget_exhausted: usize,
    pub anomalies: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub schema: &'static str,
    pub config: ScanConfig,
    pub edge_min: usize,
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

impl ScanReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scan reports always serialize")
    }
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Uniform `m`-edge graph on `n` vertices.
pub fn random_gnm<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let chosen: Vec<(usize, usize)> = sample(rng, pairs.len(), m).into_iter().map(|i| pairs[i]).collect();
    Graph::build(n, &chosen).expect("pairs are in range")
}

/// A connected `G(n, p)` sample, redrawn until connected.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if rng.random_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::build(n, &edges).expect("pairs are in range");
        if g.is_connected() {
            return g;
        }
    }
}

/// Draws the scan's graph sequence.
pub fn sample_graphs(config: &ScanConfig) -> Result<Vec<Graph>> {
    let n = config.n;
    let edge_min = config.resolved_edge_min()?;
    if edge_min > binom2(n) {
        return Err(param(format!("edge_min = {edge_min} exceeds C({n}, 2) = {}", binom2(n))));
    }
    if config.sample_count == 0 {
        return Err(param("sample_count must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = Vec::with_capacity(config.sample_count);
    for index in 0..config.sample_count {
        let mut attempts = 0;
        let g = loop {
            attempts += 1;
            if attempts > MAX_ATTEMPTS_PER_SAMPLE {
                return Err(Error::Precondition(format!(
                    "sample {index}: no connected graph with min degree >= {} in {MAX_ATTEMPTS_PER_SAMPLE} draws",
                    config.k + 1
                )));
            }
            let m = if config.edges_free {
                rng.random_range(edge_min..=binom2(n))
            } else {
                edge_min
            };
            let g = random_gnm(&mut rng, n, m);
            if g.min_degree() > config.k && g.is_connected() {
                break g;
            }
        };
        out.push(g);
    }
    Ok(out)
}

fn check(index: usize, g: &Graph, config: &ScanConfig) -> Result<ScanRecord> {
    let start = Instant::now();
    let opts = EvaluateOptions {
        decide: true,
        budget: config.budget,
        ..Default::default()
    };
    let r = evaluate(g, config.k, opts)?;
    let decider = r.verdict_if_decided.expect("decide was requested");
    let class = match (decider, r.exception_match) {
        (Outcome::Holds, None) => SampleClass::Confirmed,
        (Outcome::Fails, Some(_)) => SampleClass::Exception,
        (Outcome::BudgetExhausted, _) => SampleClass::BudgetExhausted,
        _ => SampleClass::Anomaly,
    };
    let s = &r.sufficient;
    Ok(ScanRecord {
        index,
        graph6: graph6::encode(g),
        e: r.edge_count,
        min_degree: r.min_degree,
        vertex_connectivity: r.vertex_connectivity,
        flags: ScanFlags {
            min_degree_ok: r.necessary.min_degree_ok,
            connectivity_ok: r.necessary.connectivity_ok,
            thm11: s.thm11.holds,
            thm12: s.thm12.holds,
            thm14: s.thm14.holds,
            lemma21: s.lemma21.holds,
            thm45_i: s.thm45_i.holds,
            thm45_ii: s.thm45_ii.holds,
            thm45_iii: s.thm45_iii.holds,
        },
        decider,
        exception: r.exception_match,
        class,
        elapsed_ms: config.timings.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}

/// Samples and checks every graph of the scan.
pub fn run_scan(config: &ScanConfig) -> Result<ScanReport> {
    let graphs = sample_graphs(config)?;
    let edge_min = config.resolved_edge_min()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let records: Vec<ScanRecord> = pool.install(|| {
        graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| check(i, g, config))
            .collect::<Result<_>>()
    })?;
    let mut summary = ScanSummary {
        sample_count: records.len(),
        ..Default::default()
    };
    for r in &records {
        match r.class {
            SampleClass::Confirmed => summary.confirmed += 1,
            SampleClass::Exception => summary.exceptions += 1,
            SampleClass::BudgetExhausted => summary.budget_exhausted += 1,
            SampleClass::Anomaly => summary.anomalies += 1,
        }
    }
    Ok(ScanReport {
        schema: SCHEMA,
        config: config.clone(),
        edge_min,
        records,
        summary,
    })
}
