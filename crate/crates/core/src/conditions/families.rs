//! Extremal and exceptional graph families, their constructors and exact
//! structural recognizers.
//!
//! Every family here is a join `K_a ∨ (B_1 + B_2 + ...)` whose residue blocks
//! are cliques or complete bipartite graphs. Constructors label the join block
//! first, then the residue blocks in the order they appear in the family name.
//! Recognition locates the join block as the set of universal vertices and
//! matches the components of the residue against the expected blocks, which
//! is exact for these families because no residue has a universal vertex.

use std::fmt;

use serde::Serialize;

use crate::error::{param, Result};
use crate::graph::Graph;

/// A residue block of a join family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    Clique(usize),
    /// `K_{a,b}` with `a <= b`, `b >= 2`.
    Biclique(usize, usize),
}

impl Block {
    fn order(self) -> usize {
        match self {
            Block::Clique(m) => m,
            Block::Biclique(a, b) => a + b,
        }
    }

    fn graph(self) -> Graph {
        match self {
            Block::Clique(m) => Graph::complete(m),
            Block::Biclique(a, b) => Graph::complete_bipartite(a, b),
        }
    }
}

/// `K_join ∨ (blocks...)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinShape {
    pub join: usize,
    pub blocks: Vec<Block>,
}

impl JoinShape {
    fn new(join: usize, blocks: impl IntoIterator<Item = Block>) -> Self {
        JoinShape {
            join,
            blocks: blocks
                .into_iter()
                .filter(|b| b.order() > 0)
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.join + self.blocks.iter().map(|b| b.order()).sum::<usize>()
    }

    pub fn build(&self) -> Graph {
        let residue = self
            .blocks
            .iter()
            .fold(Graph::empty(0), |acc, b| acc.disjoint_union(&b.graph()));
        Graph::complete(self.join).join(&residue)
    }

    /// Join block first, then one block per distinct residue shape (repeated
    /// identical blocks are merged).
    pub fn partition(&self) -> Vec<Vec<usize>> {
        let mut out = vec![(0..self.join).collect::<Vec<_>>()];
        let mut kinds: Vec<Block> = Vec::new();
        let mut offset = self.join;
        for &b in &self.blocks {
            let range = offset..offset + b.order();
            offset += b.order();
            match kinds.iter().position(|&k| k == b) {
                Some(i) => out[i + 1].extend(range),
                None => {
                    kinds.push(b);
                    out.push(range.collect());
                }
            }
        }
        out.retain(|b| !b.is_empty());
        out
    }

    /// Exact test that `g` is isomorphic to this shape.
    pub fn matches(&self, g: &Graph) -> bool {
        if g.order() != self.order() {
            return false;
        }
        if g.degree_profile() != self.build().degree_profile() {
            return false;
        }
        let universal = g.universal_vertices();
        if universal.len() != self.join {
            return false;
        }
        let mut keep = fixedbitset::FixedBitSet::with_capacity(g.order());
        keep.insert_range(..);
        for v in universal {
            keep.set(v, false);
        }
        let (residue, _) = g.induced_subgraph(&keep);
        let mut found = Vec::new();
        for comp in residue.components() {
            match classify_component(&residue, &comp) {
                Some(b) => found.push(b),
                None => return false,
            }
        }
        let mut want = self.blocks.clone();
        found.sort();
        want.sort();
        found == want
    }
}

fn classify_component(g: &Graph, comp: &[usize]) -> Option<Block> {
    let m = comp.len();
    let inner_edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
    if inner_edges * 2 == m * (m - 1) {
        return Some(Block::Clique(m));
    }
    // Two-colour the component and check completeness across the sides.
    let mut side = vec![None; g.order()];
    side[comp[0]] = Some(false);
    let mut stack = vec![comp[0]];
    while let Some(u) = stack.pop() {
        let su = side[u].unwrap();
        for w in g.neighbors(u) {
            match side[w] {
                None => {
                    side[w] = Some(!su);
                    stack.push(w);
                }
                Some(sw) if sw == su => return None,
                _ => {}
            }
        }
    }
    let a = comp.iter().filter(|&&v| side[v] == Some(false)).count();
    let b = m - a;
    (inner_edges == a * b).then_some(Block::Biclique(a.min(b), a.max(b)))
}

/// The nine exceptional graphs of the `C(n-2, 2) + 2k + 2` edge theorem. All
/// are exceptions for `k = 2` only: at `k >= 3` each falls below that
/// theorem's edge threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "graph", rename_all = "kebab-case")]
pub enum Thm12Exception {
    /// `K_3 ∨ (K_{n-5} + 2K_1)`.
    K3JoinKn5Plus2K1 { n: usize },
    K4JoinK2Plus3K1,
    K6Join6K1,
    K5Join5K1,
    K4JoinK14PlusK1,
    K3JoinK25,
    K4Join4K1,
    K3JoinK13PlusK1,
    K2JoinK24,
}

impl Thm12Exception {
    /// The eight fixed-order members.
    pub const FIXED: [Thm12Exception; 8] = [
        Thm12Exception::K4JoinK2Plus3K1,
        Thm12Exception::K6Join6K1,
        Thm12Exception::K5Join5K1,
        Thm12Exception::K4JoinK14PlusK1,
        Thm12Exception::K3JoinK25,
        Thm12Exception::K4Join4K1,
        Thm12Exception::K3JoinK13PlusK1,
        Thm12Exception::K2JoinK24,
    ];

    fn suffix(self) -> &'static str {
        match self {
            Thm12Exception::K3JoinKn5Plus2K1 { .. } => "K3_Kn5_2K1",
            Thm12Exception::K4JoinK2Plus3K1 => "K4_K2_3K1",
            Thm12Exception::K6Join6K1 => "K6_6K1",
            Thm12Exception::K5Join5K1 => "K5_5K1",
            Thm12Exception::K4JoinK14PlusK1 => "K4_K14_K1",
            Thm12Exception::K3JoinK25 => "K3_K25",
            Thm12Exception::K4Join4K1 => "K4_4K1",
            Thm12Exception::K3JoinK13PlusK1 => "K3_K13_K1",
            Thm12Exception::K2JoinK24 => "K2_K24",
        }
    }

    fn shape(self) -> JoinShape {
        use Block::*;
        match self {
            Thm12Exception::K3JoinKn5Plus2K1 { n } => {
                JoinShape::new(3, [Clique(n - 5), Clique(1), Clique(1)])
            }
            Thm12Exception::K4JoinK2Plus3K1 => {
                JoinShape::new(4, [Clique(2), Clique(1), Clique(1), Clique(1)])
            }
            Thm12Exception::K6Join6K1 => JoinShape::new(6, [Clique(1); 6]),
            Thm12Exception::K5Join5K1 => JoinShape::new(5, [Clique(1); 5]),
            Thm12Exception::K4JoinK14PlusK1 => JoinShape::new(4, [Biclique(1, 4), Clique(1)]),
            Thm12Exception::K3JoinK25 => JoinShape::new(3, [Biclique(2, 5)]),
            Thm12Exception::K4Join4K1 => JoinShape::new(4, [Clique(1); 4]),
            Thm12Exception::K3JoinK13PlusK1 => JoinShape::new(3, [Biclique(1, 3), Clique(1)]),
            Thm12Exception::K2JoinK24 => JoinShape::new(2, [Biclique(2, 4)]),
        }
    }

    pub fn order(self) -> usize {
        self.shape().order()
    }
}

/// Named graphs and families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family")]
pub enum FamilyId {
    /// `K_k ∨ (K_{n-k-2} + K_2)`.
    #[serde(rename = "KkJoin_Kn_k_2_plus_K2")]
    KkJoinKnk2PlusK2 { n: usize, k: usize },
    /// `K_3 ∨ (K_{n-5} + 2K_1)`.
    #[serde(rename = "K3Join_Kn5_plus_2K1")]
    K3JoinKn5Plus2K1 { n: usize },
    /// `K_4 ∨ (K_{n-7} + 3K_1)`.
    #[serde(rename = "K4Join_Kn7_plus_3K1")]
    K4JoinKn7Plus3K1 { n: usize },
    /// `K_{k+1} ∨ (K_{n-k-3} + 2K_1)`.
    #[serde(rename = "Kk1Join_2K1")]
    Kk1Join2K1 { n: usize, k: usize },
    /// `K_{k+2} ∨ (K_{n-k-5} + 3K_1)`.
    #[serde(rename = "Kk2Join_3K1")]
    Kk2Join3K1 { n: usize, k: usize },
    /// `K_3 ∨ (K_{n-6} + K_2 + K_1)`.
    RemarkGraph { n: usize },
    /// `L^t_n = K_2 ∨ (K_{n-t-1} + K_{t-1})`.
    #[serde(rename = "L_t_n")]
    L { t: usize, n: usize },
    /// `N^t_n = K_t ∨ (K_{n-2t+1} + (t-1)K_1)`.
    #[serde(rename = "N_t_n")]
    N { t: usize, n: usize },
    /// `M^t_n = K_{t+1} ∨ (K_{n-2t-1} + tK_1)`.
    #[serde(rename = "M_t_n")]
    M { t: usize, n: usize },
    Exception12(Thm12Exception),
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyId::KkJoinKnk2PlusK2 { n, k } => write!(f, "K{k} ∨ (K{} + K2)", n - k - 2),
            FamilyId::K3JoinKn5Plus2K1 { n } => write!(f, "K3 ∨ (K{} + 2K1)", n - 5),
            FamilyId::K4JoinKn7Plus3K1 { n } => write!(f, "K4 ∨ (K{} + 3K1)", n - 7),
            FamilyId::Kk1Join2K1 { n, k } => write!(f, "K{} ∨ (K{} + 2K1)", k + 1, n - k - 3),
            FamilyId::Kk2Join3K1 { n, k } => write!(f, "K{} ∨ (K{} + 3K1)", k + 2, n - k - 5),
            FamilyId::RemarkGraph { n } => write!(f, "K3 ∨ (K{} + K2 + K1)", n - 6),
            FamilyId::L { t, n } => write!(f, "L^{t}_{n}"),
            FamilyId::N { t, n } => write!(f, "N^{t}_{n}"),
            FamilyId::M { t, n } => write!(f, "M^{t}_{n}"),
            FamilyId::Exception12(e) => write!(f, "{}", e.suffix()),
        }
    }
}

impl FamilyId {
    /// Parses a CLI tag. `n`, `k` and `t` are taken where the family needs
    /// them; fixed-order graphs accept `n` only when it matches their order.
    pub fn from_tag(tag: &str, n: Option<usize>, k: Option<usize>, t: Option<usize>) -> Result<Self> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| param(format!("family {tag} needs --{name}")))
        };
        let id = match tag {
            "KkJoin_Kn_k_2_plus_K2" => FamilyId::KkJoinKnk2PlusK2 {
                n: need(n, "n")?,
                k: need(k, "k")?,
            },
            "K3Join_Kn5_plus_2K1" => FamilyId::K3JoinKn5Plus2K1 { n: need(n, "n")? },
            "K4Join_Kn7_plus_3K1" => FamilyId::K4JoinKn7Plus3K1 { n: need(n, "n")? },
            "Kk1Join_2K1" => FamilyId::Kk1Join2K1 {
                n: need(n, "n")?,
                k: need(k, "k")?,
            },
            "Kk2Join_3K1" => FamilyId::Kk2Join3K1 {
                n: need(n, "n")?,
                k: need(k, "k")?,
            },
            "RemarkGraph" => FamilyId::RemarkGraph { n: need(n, "n")? },
            "L_t_n" => FamilyId::L {
                t: need(t, "t")?,
                n: need(n, "n")?,
            },
            "N_t_n" => FamilyId::N {
                t: need(t, "t")?,
                n: need(n, "n")?,
            },
            "M_t_n" => FamilyId::M {
                t: need(t, "t")?,
                n: need(n, "n")?,
            },
            other => {
                let suffix = other
                    .strip_prefix("Exception12_")
                    .ok_or_else(|| param(format!("unknown family tag {other}")))?;
                let e = if suffix == "K3_Kn5_2K1" {
                    Thm12Exception::K3JoinKn5Plus2K1 { n: need(n, "n")? }
                } else {
                    let e = Thm12Exception::FIXED
                        .into_iter()
                        .find(|e| e.suffix() == suffix)
                        .ok_or_else(|| param(format!("unknown family tag {other}")))?;
                    if let Some(n) = n.filter(|&n| n != e.order()) {
                        return Err(param(format!("{other} has order {}, not {n}", e.order())));
                    }
                    e
                };
                FamilyId::Exception12(e)
            }
        };
        id.validate()?;
        Ok(id)
    }

    pub fn tag(&self) -> String {
        match self {
            FamilyId::KkJoinKnk2PlusK2 { .. } => "KkJoin_Kn_k_2_plus_K2".into(),
            FamilyId::K3JoinKn5Plus2K1 { .. } => "K3Join_Kn5_plus_2K1".into(),
            FamilyId::K4JoinKn7Plus3K1 { .. } => "K4Join_Kn7_plus_3K1".into(),
            FamilyId::Kk1Join2K1 { .. } => "Kk1Join_2K1".into(),
            FamilyId::Kk2Join3K1 { .. } => "Kk2Join_3K1".into(),
            FamilyId::RemarkGraph { .. } => "RemarkGraph".into(),
            FamilyId::L { .. } => "L_t_n".into(),
            FamilyId::N { .. } => "N_t_n".into(),
            FamilyId::M { .. } => "M_t_n".into(),
            FamilyId::Exception12(e) => format!("Exception12_{}", e.suffix()),
        }
    }

    /// Checks the parameter ranges of the family.
    pub fn validate(&self) -> Result<()> {
        let fail = |why: &str| Err(param(format!("{}: {why}", self.tag())));
        match *self {
            FamilyId::KkJoinKnk2PlusK2 { n, k } if k < 2 || n < k + 3 => fail("needs k >= 2 and n >= k + 3"),
            FamilyId::K3JoinKn5Plus2K1 { n } if n < 6 => fail("needs n >= 6"),
            FamilyId::K4JoinKn7Plus3K1 { n } if n < 7 => fail("needs n >= 7"),
            FamilyId::Kk1Join2K1 { n, k } if k < 2 || n < k + 3 => fail("needs k >= 2 and n >= k + 3"),
            FamilyId::Kk2Join3K1 { n, k } if k < 2 || n < k + 5 => fail("needs k >= 2 and n >= k + 5"),
            FamilyId::RemarkGraph { n } if n < 7 => fail("needs n >= 7"),
            FamilyId::L { t, n } | FamilyId::N { t, n } if t < 2 || 2 * t > n => fail("needs 2 <= t <= n/2"),
            FamilyId::M { t, n } if t < 2 || 2 * t + 1 > n => fail("needs 2 <= t <= (n-1)/2"),
            FamilyId::Exception12(Thm12Exception::K3JoinKn5Plus2K1 { n }) if n < 6 => fail("needs n >= 6"),
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        self.shape().order()
    }

    /// The join structure. Call [`FamilyId::validate`] first; out-of-range
    /// parameters may underflow.
    pub fn shape(&self) -> JoinShape {
        use Block::*;
        match *self {
            FamilyId::KkJoinKnk2PlusK2 { n, k } => JoinShape::new(k, [Clique(n - k - 2), Clique(2)]),
            FamilyId::K3JoinKn5Plus2K1 { n } => JoinShape::new(3, [Clique(n - 5), Clique(1), Clique(1)]),
            FamilyId::K4JoinKn7Plus3K1 { n } => {
                JoinShape::new(4, [Clique(n - 7), Clique(1), Clique(1), Clique(1)])
            }
            FamilyId::Kk1Join2K1 { n, k } => JoinShape::new(k + 1, [Clique(n - k - 3), Clique(1), Clique(1)]),
            FamilyId::Kk2Join3K1 { n, k } => {
                JoinShape::new(k + 2, [Clique(n - k - 5), Clique(1), Clique(1), Clique(1)])
            }
            FamilyId::RemarkGraph { n } => JoinShape::new(3, [Clique(n - 6), Clique(2), Clique(1)]),
            FamilyId::L { t, n } => JoinShape::new(2, [Clique(n - t - 1), Clique(t - 1)]),
            FamilyId::N { t, n } => JoinShape::new(
                t,
                std::iter::once(Clique(n - 2 * t + 1)).chain(std::iter::repeat_n(Clique(1), t - 1)),
            ),
            FamilyId::M { t, n } => JoinShape::new(
                t + 1,
                std::iter::once(Clique(n - 2 * t - 1)).chain(std::iter::repeat_n(Clique(1), t)),
            ),
            FamilyId::Exception12(e) => e.shape(),
        }
    }
}

/// Builds the family graph with the documented labelling.
pub fn build_family(id: FamilyId) -> Result<Graph> {
    id.validate()?;
    Ok(id.shape().build())
}

/// The three closure exceptions of the `C(n-3, 2) + 3k + 5` edge theorem
/// that `g` is isomorphic to, checked in the order
/// `K_k ∨ (K_{n-k-2} + K_2)`, `K_3 ∨ (K_{n-5} + 2K_1)`, `K_4 ∨ (K_{n-7} + 3K_1)`.
pub fn recognize_exception(g: &Graph, k: usize) -> Option<FamilyId> {
    let n = g.order();
    [
        FamilyId::KkJoinKnk2PlusK2 { n, k },
        FamilyId::K3JoinKn5Plus2K1 { n },
        FamilyId::K4JoinKn7Plus3K1 { n },
    ]
    .into_iter()
    .find(|id| id.validate().is_ok() && id.shape().matches(g))
}

/// Which of the nine `k = 2` exceptions of the `C(n-2, 2) + 2k + 2` edge
/// theorem `g` is, if any.
pub fn recognize_thm12_exception(g: &Graph) -> Option<Thm12Exception> {
    let n = g.order();
    std::iter::once(Thm12Exception::K3JoinKn5Plus2K1 { n })
        .filter(|_| n >= 6)
        .chain(Thm12Exception::FIXED)
        .find(|e| e.shape().matches(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decider::{is_k_leaf_connected, DEFAULT_BUDGET};

    fn binom2(m: usize) -> usize {
        m * m.saturating_sub(1) / 2
    }

    #[test]
    fn constructor_examples() {
        let g = build_family(FamilyId::KkJoinKnk2PlusK2 { n: 8, k: 2 }).unwrap();
        assert_eq!(g.edge_count(), 20);
        assert_eq!(g.edge_count(), binom2(6) + 5);

        let g = build_family(FamilyId::RemarkGraph { n: 9 }).unwrap();
        assert_eq!(g.edge_count(), 25);
        assert_eq!(g.edge_count(), binom2(6) + 10);

        let id = FamilyId::N { t: 2, n: 10 };
        let g = build_family(id).unwrap();
        let expected = Graph::complete(2).join(&Graph::complete(7).disjoint_union(&Graph::complete(1)));
        assert_eq!(g, expected);
    }

    #[test]
    fn labelling_puts_the_join_block_first() {
        let g = build_family(FamilyId::K4JoinKn7Plus3K1 { n: 12 }).unwrap();
        assert_eq!(g.universal_vertices(), vec![0, 1, 2, 3]);
        assert_eq!((4..9).map(|v| g.degree(v)).collect::<Vec<_>>(), vec![8; 5]);
        assert_eq!((9..12).map(|v| g.degree(v)).collect::<Vec<_>>(), vec![4; 3]);
        assert_eq!(
            FamilyId::K4JoinKn7Plus3K1 { n: 12 }.shape().partition(),
            vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7, 8], vec![9, 10, 11]]
        );
    }

    #[test]
    fn lnm_edge_counts() {
        for n in 9..20 {
            for t in 2..=n / 2 {
                let l = build_family(FamilyId::L { t, n }).unwrap();
                assert_eq!(l.edge_count(), 1 + binom2(n - t - 1) + binom2(t - 1) + 2 * (n - 2));
                let nn = build_family(FamilyId::N { t, n }).unwrap();
                assert_eq!(nn.edge_count(), binom2(n - t + 1) + t * (t - 1));
                assert_eq!(nn.min_degree(), t);
            }
            for t in 2..=(n - 1) / 2 {
                let m = build_family(FamilyId::M { t, n }).unwrap();
                assert_eq!(m.edge_count(), binom2(n - t) + t * (t + 1));
                assert_eq!(m.min_degree(), t + 1);
            }
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(build_family(FamilyId::L { t: 1, n: 10 }).is_err());
        assert!(build_family(FamilyId::L { t: 6, n: 10 }).is_err());
        assert!(build_family(FamilyId::M { t: 5, n: 10 }).is_err());
        assert!(build_family(FamilyId::K3JoinKn5Plus2K1 { n: 5 }).is_err());
        assert!(build_family(FamilyId::KkJoinKnk2PlusK2 { n: 8, k: 1 }).is_err());
        assert!(FamilyId::from_tag("Nope", Some(9), None, None).is_err());
        assert!(FamilyId::from_tag("Exception12_K6_6K1", Some(11), None, None).is_err());
        assert!(FamilyId::from_tag("KkJoin_Kn_k_2_plus_K2", Some(9), None, None).is_err());
    }

    #[test]
    fn tags_round_trip() {
        let ids = [
            FamilyId::KkJoinKnk2PlusK2 { n: 12, k: 2 },
            FamilyId::K3JoinKn5Plus2K1 { n: 12 },
            FamilyId::K4JoinKn7Plus3K1 { n: 12 },
            FamilyId::Kk1Join2K1 { n: 12, k: 3 },
            FamilyId::Kk2Join3K1 { n: 12, k: 3 },
            FamilyId::RemarkGraph { n: 12 },
            FamilyId::L { t: 3, n: 12 },
            FamilyId::N { t: 3, n: 12 },
            FamilyId::M { t: 3, n: 12 },
            FamilyId::Exception12(Thm12Exception::K3JoinKn5Plus2K1 { n: 9 }),
        ];
        for id in ids {
            let (n, k, t) = match id {
                FamilyId::L { t, n } | FamilyId::N { t, n } | FamilyId::M { t, n } => (n, None, Some(t)),
                FamilyId::KkJoinKnk2PlusK2 { n, k } | FamilyId::Kk1Join2K1 { n, k } | FamilyId::Kk2Join3K1 { n, k } => {
                    (n, Some(k), None)
                }
                other => (other.order(), None, None),
            };
            assert_eq!(FamilyId::from_tag(&id.tag(), Some(n), k, t).unwrap(), id);
        }
        for e in Thm12Exception::FIXED {
            let id = FamilyId::Exception12(e);
            assert_eq!(FamilyId::from_tag(&id.tag(), None, None, None).unwrap(), id);
        }
    }

    #[test]
    fn recognizer_examples() {
        let g = build_family(FamilyId::KkJoinKnk2PlusK2 { n: 12, k: 2 }).unwrap();
        assert_eq!(recognize_exception(&g, 2), Some(FamilyId::KkJoinKnk2PlusK2 { n: 12, k: 2 }));
        // One extra edge from the K2 block (10, 11) into the K8 block.
        let bent = g.with_edge(10, 2).unwrap();
        assert_eq!(recognize_exception(&bent, 2), None);

        let g = build_family(FamilyId::K4JoinKn7Plus3K1 { n: 12 }).unwrap();
        assert_eq!(recognize_exception(&g, 2), Some(FamilyId::K4JoinKn7Plus3K1 { n: 12 }));
        assert_eq!(recognize_exception(&Graph::complete(12), 2), None);
    }

    #[test]
    fn recognizer_is_exact_on_constructed_instances() {
        for n in 9..=25 {
            for k in 2..=n - 3 {
                let id = FamilyId::KkJoinKnk2PlusK2 { n, k };
                let g = build_family(id).unwrap();
                assert_eq!(recognize_exception(&g, k), Some(id));
            }
            for id in [FamilyId::K3JoinKn5Plus2K1 { n }, FamilyId::K4JoinKn7Plus3K1 { n }] {
                let g = build_family(id).unwrap();
                assert_eq!(recognize_exception(&g, 2), Some(id));
            }
        }
    }

    #[test]
    fn thm12_members_are_recognized() {
        for e in Thm12Exception::FIXED {
            let g = build_family(FamilyId::Exception12(e)).unwrap();
            assert_eq!(recognize_thm12_exception(&g), Some(e), "{e:?}");
        }
        let g = build_family(FamilyId::K3JoinKn5Plus2K1 { n: 10 }).unwrap();
        assert_eq!(
            recognize_thm12_exception(&g),
            Some(Thm12Exception::K3JoinKn5Plus2K1 { n: 10 })
        );
        // A K_{2,5} residue must not be confused with other 5,5,2,... degree patterns.
        let fake = Graph::build(
            7,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (1, 6), (2, 6)],
        )
        .unwrap();
        let g = Graph::complete(3).join(&fake);
        assert_eq!(recognize_thm12_exception(&g), None);
    }

    #[test]
    fn positive_families_for_k3() {
        for id in [FamilyId::Kk1Join2K1 { n: 12, k: 3 }, FamilyId::Kk2Join3K1 { n: 12, k: 3 }] {
            let g = build_family(id).unwrap();
            assert!(is_k_leaf_connected(&g, 3, DEFAULT_BUDGET).unwrap().holds(), "{id}");
        }
    }
}
