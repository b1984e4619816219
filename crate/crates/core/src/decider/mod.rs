//! Exact decision of "spanning tree with prescribed leaf set" and of
//! k-leaf-connectivity.
//!
//! For a target leaf set `S` with internal vertices `I = V \ S`, a spanning
//! tree with leaf set exactly `S` exists iff `G[I]` has a spanning tree `T'`
//! whose leaves can be matched injectively into `S` along edges of `G`, and
//! every vertex of `S` has a neighbour in `I`. The `S` vertices then hang off
//! `T'`: matched ones on their leaf, the rest on any internal neighbour.

mod matching;
mod oracle;
mod search;

pub use oracle::{oracle_leaf_sets, ORACLE_MAX_ORDER};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::graph::Graph;
use search::{InternalSearch, SearchOutcome};

/// Default per-set budget, in search-node expansions.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    Yes,
    No,
    BudgetExhausted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Refutation {
    /// `G[V \ S]` is disconnected.
    NoInternalSpanningTree,
    /// Some vertex of `S` has no neighbour outside `S`.
    SVertexIsolatedFromInternals,
    /// Every internal spanning tree was ruled out.
    MatchingInfeasibleExhausted,
    /// `|V \ S| = 1` and that vertex misses part of `S`.
    StarCenterMissing,
}

/// A spanning tree stored as a parent map; the root has no parent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanningTree {
    pub parent: Vec<Option<usize>>,
}

impl SpanningTree {
    fn from_edges(n: usize, edges: &[(usize, usize)], root: usize) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    stack.push(w);
                }
            }
        }
        SpanningTree { parent }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (p.min(v), p.max(v))))
            .collect()
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.parent.len()];
        for (u, v) in self.edges() {
            deg[u] += 1;
            deg[v] += 1;
        }
        (0..deg.len()).filter(|&v| deg[v] == 1).collect()
    }
}

/// Checks that `tree` is a spanning tree of `g` whose degree-1 vertices are
/// exactly `leaf_set`.
pub fn verify_leaf_witness(g: &Graph, leaf_set: &[usize], tree: &SpanningTree) -> bool {
    let n = g.order();
    if tree.parent.len() != n || tree.parent.iter().filter(|p| p.is_none()).count() != 1 {
        return false;
    }
    let edges = tree.edges();
    if edges.len() + 1 != n || edges.iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return false;
    }
    let Ok(t) = Graph::build(n, &edges) else {
        return false;
    };
    if t.edge_count() + 1 != n || !t.is_connected() {
        return false;
    }
    let mut want: Vec<usize> = leaf_set.to_vec();
    want.sort_unstable();
    tree.leaves() == want
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeafVerdict {
    pub decision: Decision,
    pub witness: Option<SpanningTree>,
    pub refutation: Option<Refutation>,
    /// Search-node expansions; zero when an early check decided.
    pub nodes: u64,
}

impl LeafVerdict {
    fn refuted(r: Refutation, nodes: u64) -> Self {
        LeafVerdict {
            decision: Decision::No,
            witness: None,
            refutation: Some(r),
            nodes,
        }
    }

    /// Decided without tree search.
    pub fn is_fast(&self) -> bool {
        self.nodes == 0
    }
}

fn validate_leaf_set(g: &Graph, leaf_set: &[usize]) -> Result<FixedBitSet> {
    let n = g.order();
    let mut in_s = FixedBitSet::with_capacity(n);
    for &v in leaf_set {
        if v >= n {
            return Err(param(format!("leaf vertex {v} out of range for n = {n}")));
        }
        if in_s.contains(v) {
            return Err(param(format!("leaf vertex {v} listed twice")));
        }
        in_s.insert(v);
    }
    if leaf_set.len() < 2 || leaf_set.len() + 1 > n {
        return Err(param(format!(
            "leaf set size must lie in [2, n - 1], got {} with n = {n}",
            leaf_set.len()
        )));
    }
    Ok(in_s)
}

/// Decides whether `g` has a spanning tree whose leaf set is exactly
/// `leaf_set`. Yes-verdicts carry a witness that has already been checked.
pub fn spanning_tree_with_leaf_set(g: &Graph, leaf_set: &[usize], budget: u64) -> Result<LeafVerdict> {
    let in_s = validate_leaf_set(g, leaf_set)?;
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    let verdict = decide_leaf_set(g, leaf_set, &in_s, budget);
    if let Some(tree) = &verdict.witness {
        if !verify_leaf_witness(g, leaf_set, tree) {
            return Err(Error::Internal(format!(
                "witness for leaf set {leaf_set:?} failed verification"
            )));
        }
    }
    Ok(verdict)
}

fn decide_leaf_set(g: &Graph, leaf_set: &[usize], in_s: &FixedBitSet, budget: u64) -> LeafVerdict {
    let n = g.order();
    let mut internal = in_s.clone();
    internal.toggle_range(..);
    let internal_list: Vec<usize> = internal.ones().collect();

    if let [center] = internal_list[..] {
        if leaf_set.iter().all(|&s| g.has_edge(center, s)) {
            let edges: Vec<_> = leaf_set.iter().map(|&s| (center, s)).collect();
            return LeafVerdict {
                decision: Decision::Yes,
                witness: Some(SpanningTree::from_edges(n, &edges, center)),
                refutation: None,
                nodes: 0,
            };
        }
        return LeafVerdict::refuted(Refutation::StarCenterMissing, 0);
    }

    if leaf_set
        .iter()
        .any(|&s| g.neighbor_set(s).is_disjoint(&internal))
    {
        return LeafVerdict::refuted(Refutation::SVertexIsolatedFromInternals, 0);
    }
    let (inner, labels) = g.induced_subgraph(&internal);
    if !inner.is_connected() {
        return LeafVerdict::refuted(Refutation::NoInternalSpanningTree, 0);
    }

    let s_adj: Vec<Vec<usize>> = labels
        .iter()
        .map(|&v| {
            leaf_set
                .iter()
                .enumerate()
                .filter(|&(_, &s)| g.has_edge(v, s))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut search = InternalSearch::new(inner.order(), &inner.edges(), &s_adj, leaf_set.len(), budget);
    let outcome = search.run();
    let nodes = search.nodes.max(1);
    match outcome {
        SearchOutcome::Found(t) => {
            let mut edges: Vec<(usize, usize)> =
                t.edges.iter().map(|&(u, v)| (labels[u], labels[v])).collect();
            let mut attached = FixedBitSet::with_capacity(leaf_set.len());
            for &(leaf, pos) in &t.leaf_assignment {
                edges.push((labels[leaf], leaf_set[pos]));
                attached.insert(pos);
            }
            for (pos, &s) in leaf_set.iter().enumerate() {
                if !attached.contains(pos) {
                    let anchor = g
                        .neighbors(s)
                        .find(|&v| internal.contains(v))
                        .expect("checked above");
                    edges.push((anchor, s));
                }
            }
            LeafVerdict {
                decision: Decision::Yes,
                witness: Some(SpanningTree::from_edges(n, &edges, labels[0])),
                refutation: None,
                nodes,
            }
        }
        SearchOutcome::Exhausted => LeafVerdict::refuted(Refutation::MatchingInfeasibleExhausted, nodes),
        SearchOutcome::OutOfBudget => LeafVerdict {
            decision: Decision::BudgetExhausted,
            witness: None,
            refutation: None,
            nodes,
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Holds,
    Fails,
    BudgetExhausted,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepStats {
    pub sets_checked: u64,
    pub fast_decisions: u64,
    pub searched_decisions: u64,
    pub budget_exhausted_sets: u64,
    pub search_nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityVerdict {
    pub outcome: Outcome,
    pub failing_set: Option<Vec<usize>>,
    pub failing_verdict: Option<LeafVerdict>,
    /// The `(k + 1)`-connectivity necessary condition decided the graph.
    pub quick_reject: bool,
    pub vertex_connectivity: Option<usize>,
    pub stats: SweepStats,
}

impl ConnectivityVerdict {
    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }
}

/// Advances `c` to the next k-subset of `0..n` in colexicographic order.
fn next_colex(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in 0..k {
        let limit = if i + 1 < k { c[i + 1] } else { n };
        if c[i] + 1 < limit {
            c[i] += 1;
            for (j, slot) in c.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}

/// Decides k-leaf-connectivity exactly. Sets are swept in colex order and the
/// first failing set is reported. When `2 <= k <= n - 2` and `κ(G) <= k`, a
/// failing set is built around a minimum vertex cut instead of sweeping.
pub fn is_k_leaf_connected(g: &Graph, k: usize, budget: u64) -> Result<ConnectivityVerdict> {
    let n = g.order();
    if k < 2 {
        return Err(param(format!("k must be at least 2, got {k}")));
    }
    if n < k + 1 {
        return Err(param(format!("need n >= k + 1, got n = {n}, k = {k}")));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    let mut stats = SweepStats::default();
    let record = |v: &LeafVerdict, stats: &mut SweepStats| {
        stats.sets_checked += 1;
        stats.search_nodes += v.nodes;
        if v.decision == Decision::BudgetExhausted {
            stats.budget_exhausted_sets += 1;
        } else if v.is_fast() {
            stats.fast_decisions += 1;
        } else {
            stats.searched_decisions += 1;
        }
    };

    let mut kappa = None;
    if k + 2 <= n {
        let cut = g.minimum_vertex_cut();
        kappa = Some(cut.as_ref().map_or(n - 1, Vec::len));
        if let Some(cut) = cut.filter(|c| c.len() <= k) {
            let set = leaf_set_around_cut(g, &cut, k);
            let verdict = spanning_tree_with_leaf_set(g, &set, budget)?;
            record(&verdict, &mut stats);
            if verdict.decision != Decision::No {
                return Err(Error::Internal(format!(
                    "leaf set {set:?} containing a vertex cut was not refuted"
                )));
            }
            return Ok(ConnectivityVerdict {
                outcome: Outcome::Fails,
                failing_set: Some(set),
                failing_verdict: Some(verdict),
                quick_reject: true,
                vertex_connectivity: kappa,
                stats,
            });
        }
    }

    let mut subset: Vec<usize> = (0..k).collect();
    let mut exhausted = false;
    loop {
        let verdict = spanning_tree_with_leaf_set(g, &subset, budget)?;
        record(&verdict, &mut stats);
        match verdict.decision {
            Decision::Yes => {}
            Decision::BudgetExhausted => exhausted = true,
            Decision::No => {
                return Ok(ConnectivityVerdict {
                    outcome: Outcome::Fails,
                    failing_set: Some(subset),
                    failing_verdict: Some(verdict),
                    quick_reject: false,
                    vertex_connectivity: kappa,
                    stats,
                });
            }
        }
        if !next_colex(&mut subset, n) {
            break;
        }
    }
    Ok(ConnectivityVerdict {
        outcome: if exhausted {
            Outcome::BudgetExhausted
        } else {
            Outcome::Holds
        },
        failing_set: None,
        failing_verdict: None,
        quick_reject: false,
        vertex_connectivity: kappa,
        stats,
    })
}

/// A k-set containing `cut` whose complement still meets two components of
/// `G - cut`. Needs `|cut| <= k <= n - 2`.
fn leaf_set_around_cut(g: &Graph, cut: &[usize], k: usize) -> Vec<usize> {
    let n = g.order();
    let mut rest = FixedBitSet::with_capacity(n);
    rest.insert_range(..);
    for &c in cut {
        rest.set(c, false);
    }
    let (residue, labels) = g.induced_subgraph(&rest);
    let comps = residue.components();
    let keep = [labels[comps[0][0]], labels[comps[1][0]]];
    let mut set = cut.to_vec();
    set.extend(
        (0..n)
            .filter(|v| rest.contains(*v) && !keep.contains(v))
            .take(k - cut.len()),
    );
    set.sort_unstable();
    set
}

#[cfg(test)]
mod tests {
    use super::*;

    fn join_family(a: usize, blocks: &[Graph]) -> Graph {
        let residue = blocks
            .iter()
            .fold(Graph::empty(0), |acc, b| acc.disjoint_union(b));
        Graph::complete(a).join(&residue)
    }

    #[test]
    fn colex_order() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_colex(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn cycle_adjacent_pair_is_hamilton_path() {
        let c5 = Graph::cycle(5);
        let v = spanning_tree_with_leaf_set(&c5, &[0, 1], DEFAULT_BUDGET).unwrap();
        assert_eq!(v.decision, Decision::Yes);
        let mut edges = v.witness.unwrap().edges();
        edges.sort();
        assert_eq!(edges, vec![(0, 4), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn cycle_non_adjacent_pair_is_refuted() {
        let v = spanning_tree_with_leaf_set(&Graph::cycle(5), &[0, 2], DEFAULT_BUDGET).unwrap();
        assert_eq!(v.decision, Decision::No);
        assert!(v.witness.is_none());
    }

    #[test]
    fn star_is_its_own_witness() {
        let star = Graph::complete_bipartite(1, 3);
        let v = spanning_tree_with_leaf_set(&star, &[1, 2, 3], DEFAULT_BUDGET).unwrap();
        assert_eq!(v.decision, Decision::Yes);
        assert_eq!(v.witness.unwrap().parent, vec![None, Some(0), Some(0), Some(0)]);
        let v = spanning_tree_with_leaf_set(&star, &[0, 1, 2], DEFAULT_BUDGET).unwrap();
        assert_eq!(v.refutation, Some(Refutation::StarCenterMissing));
    }

    #[test]
    fn join_set_of_kk_family_is_refuted() {
        let h = join_family(2, &[Graph::complete(4), Graph::complete(2)]);
        let v = spanning_tree_with_leaf_set(&h, &[0, 1], DEFAULT_BUDGET).unwrap();
        assert_eq!(v.decision, Decision::No);
        assert_eq!(v.refutation, Some(Refutation::NoInternalSpanningTree));
        assert!(v.is_fast());
    }

    #[test]
    fn isolated_leaf_vertex_is_refuted() {
        // Vertex 3 hangs only on 2; S = {2, 3} leaves 3 without an internal anchor.
        let g = Graph::build(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let v = spanning_tree_with_leaf_set(&g, &[2, 3], DEFAULT_BUDGET).unwrap();
        assert_eq!(v.refutation, Some(Refutation::SVertexIsolatedFromInternals));
    }

    #[test]
    fn parameter_and_precondition_errors() {
        let g = Graph::complete(4);
        assert!(matches!(spanning_tree_with_leaf_set(&g, &[0], 10), Err(Error::Parameter(_))));
        assert!(matches!(
            spanning_tree_with_leaf_set(&g, &[0, 1, 2, 3], 10),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(spanning_tree_with_leaf_set(&g, &[0, 0], 10), Err(Error::Parameter(_))));
        assert!(matches!(spanning_tree_with_leaf_set(&g, &[0, 9], 10), Err(Error::Parameter(_))));
        let split = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(matches!(
            spanning_tree_with_leaf_set(&split, &[0, 1], 10),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(is_k_leaf_connected(&g, 4, 10), Err(Error::Parameter(_))));
        assert!(matches!(is_k_leaf_connected(&g, 1, 10), Err(Error::Parameter(_))));
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let g = Graph::complete(9);
        let v = spanning_tree_with_leaf_set(&g, &[0, 1], 1).unwrap();
        assert_eq!(v.decision, Decision::BudgetExhausted);
        let c = is_k_leaf_connected(&g, 2, 1).unwrap();
        assert_eq!(c.outcome, Outcome::BudgetExhausted);
        assert!(c.failing_set.is_none());
    }

    #[test]
    fn k5_is_hamilton_connected() {
        let v = is_k_leaf_connected(&Graph::complete(5), 2, DEFAULT_BUDGET).unwrap();
        assert!(v.holds());
        assert_eq!(v.stats.sets_checked, 10);
    }

    #[test]
    fn k4_join_k2_plus_3k1_fails() {
        let g = join_family(4, &[Graph::complete(2), Graph::empty(3)]);
        let v = is_k_leaf_connected(&g, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(v.outcome, Outcome::Fails);
        let set = v.failing_set.unwrap();
        let again = spanning_tree_with_leaf_set(&g, &set, DEFAULT_BUDGET).unwrap();
        assert_eq!(again.decision, Decision::No);
    }

    #[test]
    fn star_fails_three_leaf_connectivity_at_its_center() {
        let v = is_k_leaf_connected(&Graph::complete_bipartite(1, 3), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(v.outcome, Outcome::Fails);
        assert!(v.failing_set.unwrap().contains(&0));
        assert!(!v.quick_reject);
    }

    #[test]
    fn k_equals_n_minus_one_means_every_star() {
        assert!(is_k_leaf_connected(&Graph::complete(6), 5, DEFAULT_BUDGET).unwrap().holds());
        let c6 = Graph::cycle(6);
        assert!(!is_k_leaf_connected(&c6, 5, DEFAULT_BUDGET).unwrap().holds());
    }

    #[test]
    fn quick_reject_uses_a_cut() {
        let h = join_family(2, &[Graph::complete(5), Graph::complete(3)]);
        let v = is_k_leaf_connected(&h, 3, DEFAULT_BUDGET).unwrap();
        assert!(v.quick_reject);
        assert_eq!(v.vertex_connectivity, Some(2));
        let set = v.failing_set.unwrap();
        assert_eq!(set.len(), 3);
        assert!(set.contains(&0) && set.contains(&1));
    }

    #[test]
    fn k5_join_k4_plus_3k1_is_three_leaf_connected() {
        let g = join_family(5, &[Graph::complete(4), Graph::empty(3)]);
        let v = is_k_leaf_connected(&g, 3, DEFAULT_BUDGET).unwrap();
        assert!(v.holds(), "{v:?}");
        assert_eq!(v.stats.sets_checked, 220);
    }
}
