//! Brute-force leaf-set oracle: enumerate every spanning tree as an acyclic
//! `(n - 1)`-edge subset and record its leaf set.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`oracle_leaf_sets`]. `K_9` already has 9^7
/// spanning trees.
pub const ORACLE_MAX_ORDER: usize = 9;

/// Every vertex set that is exactly the leaf set of some spanning tree of `g`.
/// Each set is sorted ascending.
pub fn oracle_leaf_sets(g: &Graph) -> Result<BTreeSet<Vec<usize>>> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::Capability {
            what: "oracle_leaf_sets",
            limit: ORACLE_MAX_ORDER,
            got: n,
        });
    }
    if !g.is_connected() {
        return Err(Error::Precondition("oracle needs a connected graph".into()));
    }
    let mut masks = BTreeSet::new();
    if n >= 2 {
        let edges = g.edges();
        let mut comp: Vec<usize> = (0..n).collect();
        let mut deg = vec![0usize; n];
        enumerate(&edges, 0, n - 1, &mut comp, &mut deg, &mut masks);
    }
    Ok(masks
        .into_iter()
        .map(|mask: u32| (0..n).filter(|&v| mask & (1 << v) != 0).collect())
        .collect())
}

fn enumerate(
    edges: &[(usize, usize)],
    start: usize,
    remaining: usize,
    comp: &mut Vec<usize>,
    deg: &mut [usize],
    out: &mut BTreeSet<u32>,
) {
    if remaining == 0 {
        let mask = deg
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 1)
            .fold(0u32, |m, (v, _)| m | (1 << v));
        out.insert(mask);
        return;
    }
    if edges.len() - start < remaining {
        return;
    }
    for i in start..=edges.len() - remaining {
        let (u, v) = edges[i];
        let (cu, cv) = (comp[u], comp[v]);
        if cu == cv {
            continue;
        }
        let saved = comp.clone();
        for c in comp.iter_mut() {
            if *c == cv {
                *c = cu;
            }
        }
        deg[u] += 1;
        deg[v] += 1;
        enumerate(edges, i + 1, remaining - 1, comp, deg, out);
        deg[u] -= 1;
        deg[v] -= 1;
        *comp = saved;
    }
}
