//! Maximum clique by branch and bound with a greedy-coloring bound.

use fixedbitset::FixedBitSet;

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`Graph::clique_number`].
pub const MAX_CLIQUE_ORDER: usize = 256;

struct Search<'g> {
    g: &'g Graph,
    best: usize,
}

impl Search<'_> {
    /// Vertices of `candidates` in coloring order with their color numbers
    /// (1-based, nondecreasing).
    fn color_order(&self, candidates: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut uncolored = candidates.clone();
        let mut out = Vec::with_capacity(candidates.count_ones(..));
        let mut color = 0;
        while !uncolored.is_clear() {
            color += 1;
            let mut available = uncolored.clone();
            while let Some(v) = available.ones().next() {
                available.set(v, false);
                available.difference_with(self.g.neighbor_set(v));
                uncolored.set(v, false);
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&mut self, size: usize, mut candidates: FixedBitSet) {
        let order = self.color_order(&candidates);
        for &(v, color) in order.iter().rev() {
            if size + color <= self.best {
                return;
            }
            let mut next = candidates.clone();
            next.intersect_with(self.g.neighbor_set(v));
            if next.is_clear() {
                self.best = self.best.max(size + 1);
            } else {
                self.expand(size + 1, next);
            }
            candidates.set(v, false);
        }
    }
}

impl Graph {
    /// ω(G), exact. Fails with a capability error above [`MAX_CLIQUE_ORDER`].
    pub fn clique_number(&self) -> Result<usize> {
        if self.order() > MAX_CLIQUE_ORDER {
            return Err(Error::Capability {
                what: "clique_number",
                limit: MAX_CLIQUE_ORDER,
                got: self.order(),
            });
        }
        if self.order() == 0 {
            return Ok(0);
        }
        let mut all = FixedBitSet::with_capacity(self.order());
        all.insert_range(..);
        let mut search = Search { g: self, best: 1 };
        search.expand(0, all);
        Ok(search.best)
    }
}
