//! Simple undirected graphs with bit-set adjacency rows.
//!
//! Vertices are dense labels `0..n`. Composition operators keep the labels of
//! the left operand and shift the right operand by `left.order()`, so a family
//! built as `join(K_a, union(B1, B2, ..))` lists the join block first.

mod clique;
mod connectivity;

pub use clique::MAX_CLIQUE_ORDER;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
}

/// Sorted degree sequence together with the minimum degree and the size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    /// Nondecreasing, so `degrees[i]` is `d_{i+1}` in 1-based notation.
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub edge_count: usize,
}

impl DegreeProfile {
    /// 1-based access `d_i`.
    pub fn d(&self, i: usize) -> usize {
        self.degrees[i - 1]
    }

    pub fn order(&self) -> usize {
        self.degrees.len()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    n,
                    reason: "endpoint out of range",
                });
            }
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    n,
                    reason: "loop",
                });
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// The edgeless graph `nK_1`.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            g.adj[u].insert_range(..);
            g.adj[u].set(u, false);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.insert_edge(n - 1, 0);
        }
        g
    }

    /// `K_{a,b}` with the `a` side labelled first.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.insert_edge(u, v);
            }
        }
        g
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    /// Returns a copy with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::InvalidEdge {
                u,
                v,
                n: self.n,
                reason: "not a vertex pair",
            });
        }
        g.insert_edge(u, v);
        Ok(g)
    }

    /// Returns a copy with the edge `uv` removed (no-op when absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        if u < self.n && v < self.n {
            g.remove_edge(u, v);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            let mut row = self.adj[u].clone();
            row.toggle_range(..);
            row.set(u, false);
            g.adj[u] = row;
        }
        g
    }

    /// `self + other`: labels of `other` shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let n = self.n + other.n;
        let mut g = Self::empty(n);
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + self.n, v + self.n);
        }
        g
    }

    /// `self ∨ other`: the disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Self {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in self.n..g.n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        DegreeProfile {
            min_degree: degrees.first().copied().unwrap_or(0),
            edge_count: degrees.iter().sum::<usize>() / 2,
            degrees,
        }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Subgraph induced on `keep`, relabelled in increasing order of `keep`.
    /// Returns the subgraph and the map from new labels to old ones.
    pub fn induced_subgraph(&self, keep: &FixedBitSet) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = keep.ones().filter(|&v| v < self.n).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(labels.len());
        for (i, &v) in labels.iter().enumerate() {
            for w in self.adj[v].ones() {
                let j = index[w];
                if j != usize::MAX && j > i {
                    g.insert_edge(i, j);
                }
            }
        }
        (g, labels)
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            seen.insert(start);
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for w in self.adj[u].ones() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff the graph has exactly one component. The empty graph on zero
    /// vertices is reported as disconnected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = FixedBitSet::with_capacity(self.n);
        seen.insert(0);
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for w in self.adj[u].ones() {
                if !seen.contains(w) {
                    seen.insert(w);
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| self.degree(v) + 1 == self.n)
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() * 2 == self.n * self.n.saturating_sub(1)
    }
}
