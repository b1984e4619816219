//! Vertex connectivity by unit-capacity max flow on the split graph.

use std::collections::VecDeque;

use super::Graph;

#[derive(Clone, Copy)]
struct Arc {
    to: usize,
    cap: u32,
    rev: usize,
}

/// Each vertex `v` becomes `2v` (in) and `2v + 1` (out) joined by a unit arc.
struct SplitNetwork {
    arcs: Vec<Vec<Arc>>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut net = SplitNetwork {
            arcs: vec![Vec::new(); 2 * n],
        };
        let big = n as u32;
        for v in 0..n {
            net.add_arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.add_arc(2 * u + 1, 2 * v, big);
            net.add_arc(2 * v + 1, 2 * u, big);
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let rf = self.arcs[to].len();
        let rt = self.arcs[from].len();
        self.arcs[from].push(Arc { to, cap, rev: rf });
        self.arcs[to].push(Arc {
            to: from,
            cap: 0,
            rev: rt,
        });
    }

    /// BFS augmenting paths until none remain or `limit` units have been pushed.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        let nodes = self.arcs.len();
        while flow < limit {
            let mut pred: Vec<Option<(usize, usize)>> = vec![None; nodes];
            let mut seen = vec![false; nodes];
            seen[source] = true;
            let mut queue = VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for (i, a) in self.arcs[u].iter().enumerate() {
                    if a.cap > 0 && !seen[a.to] {
                        seen[a.to] = true;
                        pred[a.to] = Some((u, i));
                        queue.push_back(a.to);
                    }
                }
            }
            if !seen[sink] {
                break;
            }
            let mut v = sink;
            while let Some((u, i)) = pred[v] {
                self.arcs[u][i].cap -= 1;
                let rev = self.arcs[u][i].rev;
                self.arcs[v][rev].cap += 1;
                v = u;
            }
            flow += 1;
        }
        flow
    }

    fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(u) = stack.pop() {
            for a in &self.arcs[u] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}

impl Graph {
    /// Maximum number of internally vertex-disjoint `s`–`t` paths, for a
    /// non-adjacent pair. Stops early once `limit` paths are found.
    fn local_cut(&self, s: usize, t: usize, limit: usize) -> (usize, Option<Vec<usize>>) {
        let mut net = SplitNetwork::new(self);
        let flow = net.max_flow(2 * s + 1, 2 * t, limit);
        if flow >= limit {
            return (flow, None);
        }
        let reach = net.residual_reachable(2 * s + 1);
        let cut = (0..self.order())
            .filter(|&v| v != s && v != t && reach[2 * v] && !reach[2 * v + 1])
            .collect();
        (flow, Some(cut))
    }

    /// A minimum vertex cut, or `None` for complete graphs (which have none).
    /// A disconnected graph yields the empty cut.
    ///
    /// Pairs are scanned as in Even's algorithm: with `c` the best cut size so
    /// far, only sources `v_0..=v_c` need to be tried against later vertices.
    pub fn minimum_vertex_cut(&self) -> Option<Vec<usize>> {
        let n = self.order();
        if self.is_complete() {
            return None;
        }
        if !self.is_connected() {
            return Some(Vec::new());
        }
        let mut best: Option<Vec<usize>> = None;
        let mut bound = self.min_degree();
        let mut i = 0;
        while i < n && i <= bound {
            for j in (i + 1)..n {
                if self.has_edge(i, j) {
                    continue;
                }
                let limit = best.as_ref().map_or(n, |c| c.len());
                if let (_, Some(cut)) = self.local_cut(i, j, limit) {
                    bound = bound.min(cut.len());
                    best = Some(cut);
                }
            }
            i += 1;
        }
        best
    }

    /// κ(G); `n - 1` for `K_n` by convention.
    pub fn vertex_connectivity(&self) -> usize {
        match self.minimum_vertex_cut() {
            None => self.order().saturating_sub(1),
            Some(cut) => cut.len(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fixedbitset::FixedBitSet;

    /// Smallest vertex subset whose removal disconnects the graph, by subset
    /// enumeration.
    fn brute_connectivity(g: &Graph) -> usize {
        let n = g.order();
        if g.is_complete() {
            return n - 1;
        }
        let mut best = n;
        for mask in 0u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size >= best || size + 2 > n {
                continue;
            }
            let mut keep = FixedBitSet::with_capacity(n);
            for v in 0..n {
                if mask & (1 << v) == 0 {
                    keep.insert(v);
                }
            }
            if !g.induced_subgraph(&keep).0.is_connected() {
                best = size;
            }
        }
        best
    }

    #[test]
    fn examples() {
        assert_eq!(Graph::complete(5).vertex_connectivity(), 4);
        assert_eq!(Graph::path(4).vertex_connectivity(), 1);
        let h = Graph::complete(2).join(&Graph::complete(4).disjoint_union(&Graph::complete(2)));
        assert_eq!(h.vertex_connectivity(), 2);
        assert_eq!(h.minimum_vertex_cut(), Some(vec![0, 1]));
        assert_eq!(Graph::cycle(6).vertex_connectivity(), 2);
        assert_eq!(Graph::complete_bipartite(3, 4).vertex_connectivity(), 3);
        let split = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(split.vertex_connectivity(), 0);
    }

    #[test]
    fn matches_subset_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..150 {
            let n = rng.random_range(2..=8);
            let p: f64 = rng.random_range(0.2..0.9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build(n, &edges).unwrap();
            let kappa = g.vertex_connectivity();
            assert_eq!(kappa, brute_connectivity(&g), "{g:?}");
            assert!(kappa <= g.min_degree());
            if let Some(cut) = g.minimum_vertex_cut() {
                assert_eq!(cut.len(), kappa);
                let mut keep = FixedBitSet::with_capacity(n);
                keep.insert_range(..);
                for &v in &cut {
                    keep.set(v, false);
                }
                assert!(!g.induced_subgraph(&keep).0.is_connected());
            }
        }
    }
}
