//! Named acceptance suites. Each one runs a fixed, seeded workload and
//! reports pass/fail with enough detail to audit a failure.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::closure::{l_closure, nk_closure};
use crate::conditions::{build_family, degree_condition, threshold_edges, FamilyId, Theorem, Thm12Exception};
use crate::decider::{
    is_k_leaf_connected, oracle_leaf_sets, spanning_tree_with_leaf_set, Decision, Outcome, DEFAULT_BUDGET,
};
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6;
use crate::scan::{random_connected, run_scan, ScanConfig};
use crate::spectral::inequalities::scan_inequalities;
use crate::spectral::{
    adjacency_radius, dominant_eigenvalue, feng_yu_bound, hong_bound, hong_f, quotient_matrix,
    signless_laplacian_radius, MatrixKind, SymmetricMatrix,
};

const TOL: f64 = 1e-10;
const SLACK: f64 = 1e-9;
/// Seed of the `n = 19`, `k = 2` certification scan.
pub const SCAN_SEED: u64 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Exceptions,
    Families,
    ClosureInvariance,
    DegreeSoundness,
    OracleEquivalence,
    SpectralClosedForms,
    Bounds,
    Inequalities,
    Scan,
    Remark,
    RoundTrip,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Exceptions,
        Suite::Families,
        Suite::ClosureInvariance,
        Suite::DegreeSoundness,
        Suite::OracleEquivalence,
        Suite::SpectralClosedForms,
        Suite::Bounds,
        Suite::Inequalities,
        Suite::Scan,
        Suite::Remark,
        Suite::RoundTrip,
    ];

    /// 1-based criterion number.
    pub fn number(self) -> usize {
        Suite::ALL.iter().position(|&s| s == self).unwrap() + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Exceptions => "exceptions",
            Suite::Families => "families",
            Suite::ClosureInvariance => "closure-invariance",
            Suite::DegreeSoundness => "degree-soundness",
            Suite::OracleEquivalence => "oracle-equivalence",
            Suite::SpectralClosedForms => "spectral-closed-forms",
            Suite::Bounds => "bounds",
            Suite::Inequalities => "inequalities",
            Suite::Scan => "scan",
            Suite::Remark => "remark",
            Suite::RoundTrip => "round-trip",
        }
    }

    /// Accepts a suite name or its criterion number.
    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s || suite.number().to_string() == s)
    }

    pub fn time_limit(self) -> Option<Duration> {
        let mins = match self {
            Suite::Exceptions => 5,
            Suite::Families => 10,
            Suite::Inequalities => 2,
            Suite::Scan => 15,
            _ => return None,
        };
        Some(Duration::from_secs(mins * 60))
    }

    pub fn run(self) -> Result<SuiteReport> {
        let start = Instant::now();
        let mut log = Log::default();
        match self {
            Suite::Exceptions => exceptions(&mut log)?,
            Suite::Families => families(&mut log)?,
            Suite::ClosureInvariance => closure_invariance(&mut log)?,
            Suite::DegreeSoundness => degree_soundness(&mut log)?,
            Suite::OracleEquivalence => oracle_equivalence(&mut log)?,
            Suite::SpectralClosedForms => spectral_closed_forms(&mut log)?,
            Suite::Bounds => bounds(&mut log)?,
            Suite::Inequalities => inequalities(&mut log)?,
            Suite::Scan => scan(&mut log)?,
            Suite::Remark => remark(&mut log)?,
            Suite::RoundTrip => round_trip(&mut log)?,
        }
        let elapsed = start.elapsed();
        if let Some(limit) = self.time_limit().filter(|&l| elapsed > l) {
            log.fail(format!("took {:.1}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs()));
        }
        Ok(SuiteReport {
            suite: self,
            number: self.number(),
            passed: log.failures == 0,
            checks: log.checks,
            failures: log.failures,
            messages: log.messages,
            summary: log.summary,
            elapsed_secs: elapsed.as_secs_f64(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub number: usize,
    pub passed: bool,
    pub checks: usize,
    pub failures: usize,
    /// The first few failure messages.
    pub messages: Vec<String>,
    pub summary: String,
    pub elapsed_secs: f64,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {:<22} {}  {} checks, {} failures, {:.2}s  {}",
            self.number,
            self.suite.name(),
            if self.passed { "PASS" } else { "FAIL" },
            self.checks,
            self.failures,
            self.elapsed_secs,
            self.summary
        )?;
        for m in &self.messages {
            write!(f, "\n    {m}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Log {
    checks: usize,
    failures: usize,
    messages: Vec<String>,
    summary: String,
}

impl Log {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failures += 1;
        if self.messages.len() < 10 {
            self.messages.push(msg);
        }
    }
}

fn binom2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

fn outcome(g: &Graph, k: usize) -> Result<Outcome> {
    Ok(is_k_leaf_connected(g, k, DEFAULT_BUDGET)?.outcome)
}

fn exceptions(log: &mut Log) -> Result<()> {
    let mut members: Vec<Thm12Exception> = vec![
        Thm12Exception::K3JoinKn5Plus2K1 { n: 9 },
        Thm12Exception::K3JoinKn5Plus2K1 { n: 10 },
    ];
    members.extend(Thm12Exception::FIXED);
    for e in &members {
        let id = FamilyId::Exception12(*e);
        let g = build_family(id)?;
        let n = g.order();
        log.check(g.min_degree() >= 3, || format!("{id}: δ = {}", g.min_degree()));
        log.check(g.edge_count() >= binom2(n - 2) + 6, || format!("{id}: e = {}", g.edge_count()));
        let o = outcome(&g, 2)?;
        log.check(o == Outcome::Fails, || format!("{id}: decider says {o:?}"));
    }
    log.summary = format!("{} graphs refuted at k = 2", members.len());
    Ok(())
}

fn families(log: &mut Log) -> Result<()> {
    let cases = [
        (FamilyId::KkJoinKnk2PlusK2 { n: 12, k: 2 }, 2, Outcome::Fails),
        (FamilyId::K3JoinKn5Plus2K1 { n: 12 }, 2, Outcome::Fails),
        (FamilyId::K4JoinKn7Plus3K1 { n: 12 }, 2, Outcome::Fails),
        (FamilyId::Kk1Join2K1 { n: 12, k: 3 }, 3, Outcome::Holds),
        (FamilyId::Kk2Join3K1 { n: 12, k: 3 }, 3, Outcome::Holds),
    ];
    for (id, k, want) in cases {
        let got = outcome(&build_family(id)?, k)?;
        log.check(got == want, || format!("{id} at k = {k}: {got:?}, expected {want:?}"));
    }
    log.summary = "3 refuted at k = 2, 2 confirmed at k = 3".into();
    Ok(())
}

fn closure_invariance(log: &mut Log) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut changed = 0;
    for i in 0..200 {
        let n = rng.random_range(5..=9);
        let k = 2 + i % 2;
        let p = rng.random_range(0.35..0.9);
        let g = random_connected(&mut rng, n, p);
        let closure = nk_closure(&g, k)?;
        if !closure.is_unchanged() {
            changed += 1;
        }
        let a = outcome(&g, k)?;
        let b = outcome(&closure.closed_graph, k)?;
        log.check(a == b && a != Outcome::BudgetExhausted, || {
            format!("{} k = {k}: {a:?} vs closure {b:?}", graph6::encode(&g))
        });
    }
    log.summary = format!("200 graphs, {changed} with a nontrivial closure");
    Ok(())
}

fn degree_soundness(log: &mut Log) -> Result<()> {
    let n = 6;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let (mut connected, mut triggered) = (0, 0);
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = (0..pairs.len()).filter(|b| mask >> b & 1 == 1).map(|b| pairs[b]).collect();
        let g = Graph::build(n, &edges)?;
        if !g.is_connected() {
            continue;
        }
        connected += 1;
        for k in 2..=n - 3 {
            if degree_condition(&g.degree_profile(), k)?.is_none() {
                triggered += 1;
                let o = outcome(&g, k)?;
                log.check(o == Outcome::Holds, || format!("{} k = {k}: {o:?}", graph6::encode(&g)));
            }
        }
    }
    log.summary = format!("{connected} labelled connected graphs, condition held {triggered} times");
    Ok(())
}

fn oracle_equivalence(log: &mut Log) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut sets = 0;
    for _ in 0..200 {
        let n = rng.random_range(3..=7);
        let p = rng.random_range(0.3..0.95);
        let g = random_connected(&mut rng, n, p);
        let oracle = oracle_leaf_sets(&g)?;
        for mask in 0u32..(1 << n) {
            let s: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            if s.len() < 2 || s.len() > n - 1 {
                continue;
            }
            sets += 1;
            let v = spanning_tree_with_leaf_set(&g, &s, DEFAULT_BUDGET)?;
            let want = oracle.contains(&s);
            log.check(
                (v.decision == Decision::Yes) == want && v.decision != Decision::BudgetExhausted,
                || format!("{} S = {s:?}: {:?}, oracle {want}", graph6::encode(&g), v.decision),
            );
        }
    }
    log.summary = format!("200 graphs, {sets} leaf sets");
    Ok(())
}

fn spectral_closed_forms(log: &mut Log) -> Result<()> {
    let h = build_family(FamilyId::K4JoinKn7Plus3K1 { n: 12 })?;
    let r = adjacency_radius(&h.complement(), TOL)?;
    log.check((r - 5.0).abs() <= 1e-9, || format!("ρ(complement of K4 ∨ (K5 + 3K1)) = {r}"));
    let r = dominant_eigenvalue(&SymmetricMatrix::adjacency(&Graph::complete_bipartite(2, 6)), TOL)?;
    log.check((r - 12f64.sqrt()).abs() <= 1e-9, || format!("ρ(K_2,6) = {r}"));

    let mut worst: f64 = 0.0;
    for n in 9..=16 {
        for id in [
            FamilyId::KkJoinKnk2PlusK2 { n, k: 2 },
            FamilyId::K3JoinKn5Plus2K1 { n },
            FamilyId::K4JoinKn7Plus3K1 { n },
        ] {
            let g = build_family(id)?;
            for kind in [MatrixKind::Adjacency, MatrixKind::SignlessLaplacian] {
                let q = quotient_matrix(&g, kind, &id.shape().partition())?;
                let dense = match kind {
                    MatrixKind::Adjacency => adjacency_radius(&g, TOL)?,
                    _ => signless_laplacian_radius(&g, TOL)?,
                };
                let diff = (q.largest_eigenvalue(TOL)? - dense).abs();
                worst = worst.max(diff);
                log.check(q.equitable && diff < 1e-8, || format!("{id} {kind:?}: |quotient - dense| = {diff:e}"));
            }
        }
    }
    log.summary = format!("worst quotient/dense gap {worst:.2e}");
    Ok(())
}

fn bounds(log: &mut Log) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst: f64 = f64::NEG_INFINITY;
    for _ in 0..500 {
        let n = rng.random_range(4..=12);
        let p = rng.random_range(0.2..0.95);
        let g = random_connected(&mut rng, n, p);
        let rho = adjacency_radius(&g, TOL)?;
        let q = signless_laplacian_radius(&g, TOL)?;
        let hb = hong_bound::<f64>(&g)?;
        let fy = feng_yu_bound::<f64>(&g)?;
        worst = worst.max(rho - hb).max(q - fy);
        let g6 = graph6::encode(&g);
        log.check(rho <= hb + SLACK, || format!("{g6}: ρ = {rho} > {hb}"));
        log.check(q <= fy + SLACK, || format!("{g6}: q = {q} > {fy}"));

        // f is nonincreasing wherever it is real.
        let e = g.edge_count();
        let mut prev = f64::INFINITY;
        for step in 0..=4 * (n - 1) {
            let Ok(fx) = hong_f(step as f64 / 4.0, n, e) else { break };
            log.check(fx <= prev + 1e-12, || format!("{g6}: f increases at x = {}", step as f64 / 4.0));
            prev = fx;
        }
    }
    for n in 3..=12 {
        let g = Graph::complete(n);
        let hb = hong_bound::<f64>(&g)?;
        let fy = feng_yu_bound::<f64>(&g)?;
        log.check((hb - (n - 1) as f64).abs() <= SLACK, || format!("K{n}: hong bound {hb}"));
        log.check((fy - (2 * n - 2) as f64).abs() <= SLACK, || format!("K{n}: Feng–Yu bound {fy}"));
        log.check((adjacency_radius(&g, TOL)? - hb).abs() <= SLACK, || format!("K{n}: ρ ≠ bound"));
        log.check((signless_laplacian_radius(&g, TOL)? - fy).abs() <= SLACK, || format!("K{n}: q ≠ bound"));
    }
    log.summary = format!("500 graphs, largest radius minus bound {worst:.2e}");
    Ok(())
}

fn inequalities(log: &mut Log) -> Result<()> {
    let checks = scan_inequalities(2, 60, 1e-12)?;
    let mut tightest = f64::INFINITY;
    for c in &checks {
        tightest = tightest.min(c.margin);
        log.check(c.margin > SLACK, || format!("{:?} at n = {}: margin {:e}", c.inequality, c.n, c.margin));
    }
    log.summary = format!("{} instances, smallest margin {tightest:.4}", checks.len());
    Ok(())
}

fn scan(log: &mut Log) -> Result<()> {
    let config = ScanConfig::new(19, 2, 100, SCAN_SEED);
    let report = run_scan(&config)?;
    let threshold = threshold_edges(Theorem::Thm14, 19, 2)?;
    for r in &report.records {
        log.check(r.e >= threshold && r.min_degree >= 3, || format!("sample {}: e = {}, δ = {}", r.index, r.e, r.min_degree));
    }
    let s = &report.summary;
    log.check(s.anomalies == 0, || format!("{} anomalies", s.anomalies));
    log.check(s.budget_exhausted == 0, || format!("{} budget exhaustions", s.budget_exhausted));
    log.check(s.sample_count == 100, || format!("{} samples", s.sample_count));
    log.summary = format!(
        "{} confirmed, {} exceptions, {} budget-exhausted, {} anomalies",
        s.confirmed, s.exceptions, s.budget_exhausted, s.anomalies
    );
    Ok(())
}

fn remark(log: &mut Log) -> Result<()> {
    let n = 12;
    let g = build_family(FamilyId::RemarkGraph { n })?;
    log.check(g.edge_count() == binom2(n - 3) + 10 && g.edge_count() == 46, || {
        format!("e = {}", g.edge_count())
    });
    log.check(l_closure(&g, n + 1).is_unchanged(), || "not a fixed point of the (n+1)-closure".into());
    let omega = g.clique_number()?;
    log.check(omega == n - 3, || format!("ω = {omega}"));
    let o = outcome(&g, 2)?;
    log.check(o == Outcome::Fails, || format!("decider says {o:?}"));
    log.summary = format!("e = {}, ω = {omega}, decider {o:?}", g.edge_count());
    Ok(())
}

fn round_trip(log: &mut Log) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.random_range(1..=30);
        let p = rng.random_range(0.0..1.0);
        let edges: Vec<_> = (0..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .filter(|_| rng.random_bool(p))
            .collect();
        let g = Graph::build(n, &edges)?;
        let s = graph6::encode(&g);
        let back = graph6::decode(&s);
        log.check(back.as_ref() == Ok(&g), || format!("{s} does not round-trip"));
    }
    let mut config = ScanConfig::new(12, 2, 20, 13);
    config.edge_min = Some(binom2(12) - 12);
    config.parallelism = 4;
    let a = run_scan(&config)?.to_json();
    let b = run_scan(&config)?.to_json();
    log.check(a == b, || "scan JSON differs between identical runs".into());
    log.summary = format!("200 graphs round-tripped, scan report {} bytes twice", a.len());
    Ok(())
}
