//! The degree-sum closure `C_l(G)`: repeatedly join non-adjacent pairs whose
//! degree sum is at least `l` until no such pair remains.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{param, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureResult {
    #[serde(skip)]
    pub closed_graph: Graph,
    /// Edges in the order they were inserted.
    pub added_edges: Vec<(usize, usize)>,
    pub l: usize,
}

impl ClosureResult {
    pub fn is_unchanged(&self) -> bool {
        self.added_edges.is_empty()
    }
}

/// `C_l(G)` with the worklist seeded in lexicographic pair order.
pub fn l_closure(g: &Graph, l: usize) -> ClosureResult {
    let pairs = g.complement().edges();
    l_closure_in_order(g, l, &pairs)
}

/// `C_l(G)` with the worklist seeded by `seed_order`. Pairs missing from the
/// seed still enter the worklist once one of their endpoints gains an edge,
/// so the result is the closure for any seed that covers the initial
/// candidates.
pub fn l_closure_in_order(g: &Graph, l: usize, seed_order: &[(usize, usize)]) -> ClosureResult {
    let n = g.order();
    let mut h = g.clone();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut added = Vec::new();
    let mut queue: VecDeque<(usize, usize)> = seed_order.iter().copied().collect();

    while let Some((u, v)) = queue.pop_front() {
        if u == v || h.has_edge(u, v) || deg[u] + deg[v] < l {
            continue;
        }
        h.insert_edge(u, v);
        deg[u] += 1;
        deg[v] += 1;
        added.push((u.min(v), u.max(v)));
        for end in [u, v] {
            for x in 0..n {
                if x != end && !h.has_edge(end, x) && deg[end] + deg[x] >= l {
                    queue.push_back((end, x));
                }
            }
        }
    }

    ClosureResult {
        closed_graph: h,
        added_edges: added,
        l,
    }
}

/// `C_{n+k-1}(G)`, the closure that preserves k-leaf-connectivity.
pub fn nk_closure(g: &Graph, k: usize) -> Result<ClosureResult> {
    let n = g.order();
    if k < 2 || k + 1 > n {
        return Err(param(format!(
            "nk_closure needs 2 <= k <= n - 1, got k = {k}, n = {n}"
        )));
    }
    Ok(l_closure(g, n + k - 1))
}
