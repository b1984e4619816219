use serde::Serialize;

use super::{
    degree_condition, edge_formula, recognize_exception, recognize_thm12_exception, spectral_thresholds, threshold_edges,
    FamilyId, Theorem, Thm12Exception,
};
use crate::closure::nk_closure;
use crate::decider::{is_k_leaf_connected, Outcome, DEFAULT_BUDGET};
use crate::error::{param, Error, Result};
use crate::graph::Graph;
use crate::spectral::{spectral_report, SpectralReport, DEFAULT_TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaluateOptions {
    /// Run the exact decider as well.
    pub decide: bool,
    pub budget: u64,
    pub tolerance: f64,
}

impl Default for EvaluateOptions {
    fn default() -> Self {
        EvaluateOptions {
            decide: false,
            budget: DEFAULT_BUDGET,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Necessary {
    /// `δ >= k + 1`.
    pub min_degree_ok: bool,
    /// `κ >= k + 1`.
    pub connectivity_ok: bool,
}

/// An edge threshold. The formula is evaluated even outside the theorem's
/// `(n, k)` range; `holds` needs the range, `δ >= k + 1` and `e >= threshold`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeCheck {
    pub threshold: usize,
    pub value: usize,
    pub in_range: bool,
    pub meets_threshold: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub applicable: bool,
    pub holds: bool,
    /// Smallest `i` violating the condition.
    pub violating_i: Option<usize>,
}

/// A spectral threshold; `at_most` flips the comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralCheck {
    pub threshold: Option<f64>,
    pub value: f64,
    pub at_most: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sufficient {
    pub thm11: EdgeCheck,
    pub thm12: EdgeCheck,
    pub thm14: EdgeCheck,
    pub lemma21: DegreeCheck,
    pub thm45_i: SpectralCheck,
    pub thm45_ii: SpectralCheck,
    pub thm45_iii: SpectralCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    KLeafConnected,
    NotKLeafConnected,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionReport {
    pub n: usize,
    pub k: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub vertex_connectivity: usize,
    pub necessary: Necessary,
    pub sufficient: Sufficient,
    pub spectral: SpectralReport<f64>,
    /// Edges added by the `(n+k-1)`-closure.
    pub closure_added_edges: usize,
    /// Closure exception family the `(n+k-1)`-closure is isomorphic to.
    pub exception_match: Option<FamilyId>,
    /// Which of the nine `k = 2` edge-theorem exceptions the graph is.
    pub thm12_exception: Option<Thm12Exception>,
    pub verdict_if_decided: Option<Outcome>,
    pub conclusion: Conclusion,
    pub reason: String,
}

impl ConditionReport {
    pub fn any_sufficient(&self) -> bool {
        let s = &self.sufficient;
        s.thm11.holds
            || s.thm12.holds
            || s.thm14.holds
            || s.lemma21.holds
            || s.thm45_i.holds
            || s.thm45_ii.holds
            || s.thm45_iii.holds
    }
}

/// Whether a recognized closure exception is known not to be k-leaf-connected
/// at this `k`. `K_k ∨ (K_{n-k-2} + K_2)` loses connectivity when its join
/// block is removed; the other two are exceptions at `k = 2`.
fn exception_refutes(id: FamilyId, k: usize) -> bool {
    match id {
        FamilyId::KkJoinKnk2PlusK2 { k: kk, .. } => kk == k,
        FamilyId::K3JoinKn5Plus2K1 { .. } | FamilyId::K4JoinKn7Plus3K1 { .. } => k == 2,
        _ => false,
    }
}

/// Evaluates every condition on a connected `g`, computes the
/// `(n+k-1)`-closure and matches it against the exception families. A failed
/// sufficient condition never decides the graph; only the decider, a failed
/// necessary condition or a recognized exception does.
pub fn evaluate(g: &Graph, k: usize, opts: EvaluateOptions) -> Result<ConditionReport> {
    let n = g.order();
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if k < 2 || k + 1 > n {
        return Err(param(format!("need 2 <= k <= n - 1, got n = {n}, k = {k}")));
    }
    let profile = g.degree_profile();
    let e = profile.edge_count;
    let delta = profile.min_degree;
    let kappa = g.vertex_connectivity();
    let necessary = Necessary {
        min_degree_ok: delta > k,
        connectivity_ok: kappa > k,
    };

    let edge = |which: Theorem| {
        let threshold = edge_formula(which, n, k);
        let in_range = threshold_edges(which, n, k).is_ok();
        EdgeCheck {
            threshold,
            value: e,
            in_range,
            meets_threshold: e >= threshold,
            holds: in_range && necessary.min_degree_ok && e >= threshold,
        }
    };
    let lemma21 = match degree_condition(&profile, k) {
        Ok(violating_i) => DegreeCheck {
            applicable: true,
            holds: violating_i.is_none(),
            violating_i,
        },
        Err(_) => DegreeCheck {
            applicable: false,
            holds: false,
            violating_i: None,
        },
    };

    let spectral = spectral_report::<f64>(g, opts.tolerance)?;
    let thresholds = spectral_thresholds::<f64>(n, k).ok();
    let spec = |threshold: Option<f64>, value: f64, at_most: bool| SpectralCheck {
        threshold,
        value,
        at_most,
        holds: necessary.min_degree_ok
            && threshold.is_some_and(|t| if at_most { value <= t } else { value >= t }),
    };
    let sufficient = Sufficient {
        thm11: edge(Theorem::Thm11),
        thm12: edge(Theorem::Thm12),
        thm14: edge(Theorem::Thm14),
        lemma21,
        thm45_i: spec(thresholds.map(|t| t.rho_min), spectral.rho, false),
        thm45_ii: spec(thresholds.map(|t| t.q_min), spectral.q, false),
        thm45_iii: spec(thresholds.map(|t| t.rho_complement_max), spectral.rho_complement, true),
    };

    let closure = nk_closure(g, k)?;
    let exception_match = recognize_exception(&closure.closed_graph, k);
    let thm12_exception = recognize_thm12_exception(g);
    let verdict_if_decided = if opts.decide {
        Some(is_k_leaf_connected(g, k, opts.budget)?.outcome)
    } else {
        None
    };

    let (conclusion, reason) = conclude(
        k,
        n,
        necessary,
        &sufficient,
        exception_match,
        thm12_exception,
        verdict_if_decided,
    );
    Ok(ConditionReport {
        n,
        k,
        edge_count: e,
        min_degree: delta,
        vertex_connectivity: kappa,
        necessary,
        sufficient,
        spectral,
        closure_added_edges: closure.added_edges.len(),
        exception_match,
        thm12_exception,
        verdict_if_decided,
        conclusion,
        reason,
    })
}

fn conclude(
    k: usize,
    n: usize,
    necessary: Necessary,
    s: &Sufficient,
    exception_match: Option<FamilyId>,
    thm12_exception: Option<Thm12Exception>,
    decided: Option<Outcome>,
) -> (Conclusion, String) {
    use Conclusion::*;
    match decided {
        Some(Outcome::Holds) => return (KLeafConnected, "exact decider".into()),
        Some(Outcome::Fails) => return (NotKLeafConnected, "exact decider".into()),
        _ => {}
    }
    // Both necessary conditions are meaningful only below the spanning-star
    // case k = n - 1.
    if k + 2 <= n && !(necessary.min_degree_ok && necessary.connectivity_ok) {
        return (NotKLeafConnected, "(k+1)-connectivity fails".into());
    }
    if let Some(id) = exception_match.filter(|&id| exception_refutes(id, k)) {
        return (NotKLeafConnected, format!("closure is the exception {id}"));
    }
    if k == 2 && s.thm12.holds {
        if let Some(e) = thm12_exception {
            return (NotKLeafConnected, format!("listed edge-threshold exception {}", FamilyId::Exception12(e)));
        }
    }
    if s.lemma21.holds {
        return (KLeafConnected, "degree-sequence condition".into());
    }
    if s.thm11.holds {
        return (KLeafConnected, "thm11 edge threshold".into());
    }
    if s.thm12.holds && thm12_exception.is_none() {
        return (KLeafConnected, "thm12 edge threshold".into());
    }
    if exception_match.is_none() {
        for (holds, name) in [
            (s.thm14.holds, "thm14 edge threshold"),
            (s.thm45_i.holds, "thm45 (i) spectral radius"),
            (s.thm45_ii.holds, "thm45 (ii) signless Laplacian radius"),
            (s.thm45_iii.holds, "thm45 (iii) complement spectral radius"),
        ] {
            if holds {
                return (KLeafConnected, name.into());
            }
        }
    }
    if decided == Some(Outcome::BudgetExhausted) {
        return (Inconclusive, "decider budget exhausted".into());
    }
    (Inconclusive, "no condition applies".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::build_family;

    #[test]
    fn k5_is_settled_by_conditions() {
        let r = evaluate(&Graph::complete(5), 2, EvaluateOptions::default()).unwrap();
        assert!(r.necessary.min_degree_ok && r.necessary.connectivity_ok);
        assert!(r.sufficient.lemma21.holds);
        // C(4,2) + 3 = 9 <= 10, but n = 5 is outside k <= n - 4.
        assert_eq!(r.sufficient.thm11.threshold, 9);
        assert!(r.sufficient.thm11.meets_threshold);
        assert!(!r.sufficient.thm11.in_range && !r.sufficient.thm11.holds);
        assert_eq!(r.conclusion, Conclusion::KLeafConnected);
    }

    #[test]
    fn k3_family_at_n12() {
        let g = build_family(FamilyId::K3JoinKn5Plus2K1 { n: 12 }).unwrap();
        let r = evaluate(&g, 2, EvaluateOptions::default()).unwrap();
        assert_eq!(r.exception_match, Some(FamilyId::K3JoinKn5Plus2K1 { n: 12 }));
        assert_eq!(r.sufficient.thm12.threshold, 51);
        assert_eq!(r.sufficient.thm12.value, 51);
        assert!(r.sufficient.thm12.holds);
        assert_eq!(r.thm12_exception, Some(Thm12Exception::K3JoinKn5Plus2K1 { n: 12 }));
        assert_eq!(r.conclusion, Conclusion::NotKLeafConnected);
    }

    #[test]
    fn path_fails_necessary_conditions() {
        let r = evaluate(&Graph::path(4), 2, EvaluateOptions::default()).unwrap();
        assert!(!r.necessary.min_degree_ok);
        assert!(!r.any_sufficient());
        assert_eq!(r.conclusion, Conclusion::NotKLeafConnected);
    }

    #[test]
    fn decider_overrides_everything() {
        let g = build_family(FamilyId::Kk2Join3K1 { n: 12, k: 3 }).unwrap();
        let opts = EvaluateOptions {
            decide: true,
            ..Default::default()
        };
        let r = evaluate(&g, 3, opts).unwrap();
        assert_eq!(r.verdict_if_decided, Some(Outcome::Holds));
        assert_eq!(r.conclusion, Conclusion::KLeafConnected);
    }

    #[test]
    fn rejects_bad_input() {
        let split = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(evaluate(&split, 2, EvaluateOptions::default()).is_err());
        assert!(evaluate(&Graph::complete(4), 4, EvaluateOptions::default()).is_err());
    }
}
