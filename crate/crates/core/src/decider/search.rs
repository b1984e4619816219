//! Backtracking search for a spanning tree of `G[I]` whose leaves can be
//! matched into the prescribed leaf set `S`.
//!
//! The tree grows from a fixed root. Each node picks a frontier edge `uw`
//! (`u` in the tree, `w` outside) and branches on including it or deleting it
//! from the graph, so every spanning tree is reached exactly once. Pruning:
//!
//! - a tree with `L` leaves satisfies `L = 2 + Σ max(0, deg − 2)`, so the
//!   partial degrees bound the final leaf count from below and a vertex whose
//!   next edge would push the bound past `|S|` is closed;
//! - every outside vertex must stay reachable from an open tree vertex;
//! - vertices that can only end as leaves (stuck tree leaves, outside
//!   vertices with one usable neighbour) must be matchable into `S`.

use super::matching::saturating_matching;

/// Row-major adjacency bit matrix over `0..m`.
struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(m: usize) -> Self {
        let words = m.div_ceil(64).max(1);
        BitRows {
            words,
            bits: vec![0; m * words],
        }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        let w = &mut self.bits[u * self.words + v / 64];
        if on {
            *w |= 1 << (v % 64);
        } else {
            *w &= !(1 << (v % 64));
        }
    }
}

fn contains(set: &[u64], v: usize) -> bool {
    set[v / 64] >> (v % 64) & 1 == 1
}

fn put(set: &mut [u64], v: usize, on: bool) {
    if on {
        set[v / 64] |= 1 << (v % 64);
    } else {
        set[v / 64] &= !(1 << (v % 64));
    }
}

fn ones(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(i, &w)| {
        let mut word = w;
        std::iter::from_fn(move || {
            if word == 0 {
                None
            } else {
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(i * 64 + b)
            }
        })
    })
}

fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// A spanning tree of `G[I]` plus an injective assignment of its leaves to
/// positions in `S`.
#[derive(Debug)]
pub(crate) struct InternalTree {
    pub edges: Vec<(usize, usize)>,
    pub leaf_assignment: Vec<(usize, usize)>,
}

pub(crate) enum SearchOutcome {
    Found(InternalTree),
    Exhausted,
    OutOfBudget,
}

enum Step {
    Found(InternalTree),
    Dead,
    OutOfBudget,
}

pub(crate) struct InternalSearch<'a> {
    m: usize,
    avail: BitRows,
    /// Positions in `S` adjacent to each internal vertex.
    s_adj: &'a [Vec<usize>],
    leaf_cap: usize,
    in_tree: Vec<u64>,
    outside: Vec<u64>,
    tdeg: Vec<usize>,
    tree_edges: Vec<(usize, usize)>,
    excess: usize,
    pub nodes: u64,
    budget: u64,
}

impl<'a> InternalSearch<'a> {
    /// `edges` over `0..m` (the internal graph), `s_adj[v]` the leaf positions
    /// adjacent to `v`, `leaf_cap = |S|`. Requires `m >= 2`.
    pub fn new(m: usize, edges: &[(usize, usize)], s_adj: &'a [Vec<usize>], leaf_cap: usize, budget: u64) -> Self {
        let mut avail = BitRows::new(m);
        for &(u, v) in edges {
            avail.set(u, v, true);
            avail.set(v, u, true);
        }
        let words = avail.words;
        InternalSearch {
            m,
            avail,
            s_adj,
            leaf_cap,
            in_tree: vec![0; words],
            outside: vec![0; words],
            tdeg: vec![0; m],
            tree_edges: Vec::with_capacity(m),
            excess: 0,
            nodes: 0,
            budget,
        }
    }

    pub fn run(&mut self) -> SearchOutcome {
        let root = (0..self.m)
            .min_by_key(|&v| (and_count(self.avail.row(v), self.avail.row(v)), v))
            .unwrap_or(0);
        for v in 0..self.m {
            put(&mut self.outside, v, v != root);
        }
        put(&mut self.in_tree, root, true);
        match self.node() {
            Step::Found(t) => SearchOutcome::Found(t),
            Step::Dead => SearchOutcome::Exhausted,
            Step::OutOfBudget => SearchOutcome::OutOfBudget,
        }
    }

    fn is_open_tree_vertex(&self, v: usize) -> bool {
        self.tdeg[v] < 2 || self.excess + 2 < self.leaf_cap
    }

    fn node(&mut self) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        if self.excess + 2 > self.leaf_cap {
            return Step::Dead;
        }
        let words = self.avail.words;

        // Vertices that can still take a new tree edge.
        let mut open = self.outside.clone();
        for v in ones(&self.in_tree).collect::<Vec<_>>() {
            if self.is_open_tree_vertex(v) {
                put(&mut open, v, true);
            }
        }

        let mut forced_leaves = Vec::new();
        for v in ones(&self.in_tree) {
            if self.tdeg[v] == 1 && !intersects(self.avail.row(v), &self.outside) {
                forced_leaves.push(v);
            }
        }
        let mut best: Option<(usize, usize)> = None;
        for w in ones(&self.outside) {
            let eff = and_count(self.avail.row(w), &open);
            if eff == 0 {
                return Step::Dead;
            }
            if eff == 1 {
                forced_leaves.push(w);
            }
            let touches_tree = self
                .avail
                .row(w)
                .iter()
                .zip(&self.in_tree)
                .zip(&open)
                .any(|((a, t), o)| a & t & o != 0);
            if touches_tree && best.is_none_or(|(e, _)| eff < e) {
                best = Some((eff, w));
            }
        }
        if forced_leaves.len() > self.leaf_cap {
            return Step::Dead;
        }

        // Every outside vertex must be reachable from an open tree vertex.
        let mut reached = vec![0u64; words];
        let mut stack = Vec::new();
        for v in ones(&self.in_tree) {
            if contains(&open, v) {
                for w in ones(self.avail.row(v)) {
                    if contains(&self.outside, w) && !contains(&reached, w) {
                        put(&mut reached, w, true);
                        stack.push(w);
                    }
                }
            }
        }
        while let Some(x) = stack.pop() {
            for w in ones(self.avail.row(x)) {
                if contains(&self.outside, w) && !contains(&reached, w) {
                    put(&mut reached, w, true);
                    stack.push(w);
                }
            }
        }
        if reached != self.outside {
            return Step::Dead;
        }

        let left: Vec<Vec<usize>> = forced_leaves.iter().map(|&v| self.s_adj[v].clone()).collect();
        let Some(assignment) = saturating_matching(&left, self.leaf_cap) else {
            return Step::Dead;
        };

        let Some((_, w)) = best else {
            // Nothing outside: the tree spans and its leaves are exactly the
            // forced ones.
            return Step::Found(InternalTree {
                edges: self.tree_edges.clone(),
                leaf_assignment: forced_leaves.into_iter().zip(assignment).collect(),
            });
        };
        let u = ones(self.avail.row(w))
            .filter(|&u| contains(&self.in_tree, u) && contains(&open, u))
            .min_by_key(|&u| (match self.tdeg[u] { 1 => 0, 0 => 1, _ => 2 }, u))
            .expect("frontier vertex has an open tree neighbour");

        // Include uw.
        let grows = self.tdeg[u] >= 2;
        self.tdeg[u] += 1;
        self.tdeg[w] = 1;
        if grows {
            self.excess += 1;
        }
        put(&mut self.in_tree, w, true);
        put(&mut self.outside, w, false);
        self.tree_edges.push((u, w));
        let step = self.node();
        self.tree_edges.pop();
        put(&mut self.outside, w, true);
        put(&mut self.in_tree, w, false);
        if grows {
            self.excess -= 1;
        }
        self.tdeg[w] = 0;
        self.tdeg[u] -= 1;
        if !matches!(step, Step::Dead) {
            return step;
        }

        // Delete uw.
        self.avail.set(u, w, false);
        self.avail.set(w, u, false);
        let step = self.node();
        self.avail.set(u, w, true);
        self.avail.set(w, u, true);
        step
    }
}
