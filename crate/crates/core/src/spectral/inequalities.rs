//! Strict spectral inequalities satisfied by the three closure-exception
//! families, each valid from a stated order upward.
//!
//! The graph side is always computed from the dense matrix of the built
//! family, never from the closed form it is being compared against.

use serde::Serialize;

use super::{adjacency_radius, signless_laplacian_radius};
use crate::conditions::{build_family, FamilyId};
use crate::error::{param, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyInequality {
    /// `ρ(H) > k/2 + sqrt(n² - (k+8)n + k²/4 + 7k + 23)` for `K_k ∨ (K_{n-k-2} + K_2)`.
    KkJoinRho,
    /// `q(H) > 2n - 8 + (6k+16)/(n-1)`.
    KkJoinQ,
    /// `ρ(H̄) < sqrt((n-k)(3n-3k-11)/n)`.
    KkJoinComplement,
    /// `ρ(H) > 1 + sqrt(n² - 10n + 38)` for `K_3 ∨ (K_{n-5} + 2K_1)`.
    K3JoinRho,
    /// `q(H) > 2n - 8 + 28/(n-1)`.
    K3JoinQ,
    /// `ρ(H̄) < sqrt((n-2)(3n-17)/n)`.
    K3JoinComplement,
    /// `ρ(H) < 1 + sqrt(n² - 10n + 38)` for `K_4 ∨ (K_{n-7} + 3K_1)`.
    K4JoinRho,
    /// `q(H) < 2n - 8 + 28/(n-1)`.
    K4JoinQ,
    /// `ρ(H̄) > sqrt((n-2)(3n-17)/n)`.
    K4JoinComplement,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InequalityCheck {
    pub inequality: FamilyInequality,
    pub n: usize,
    pub k: usize,
    pub graph_value: f64,
    pub bound: f64,
    /// Positive iff the strict inequality holds; its size is the slack.
    pub margin: f64,
}

impl FamilyInequality {
    pub const ALL: [FamilyInequality; 9] = [
        FamilyInequality::KkJoinRho,
        FamilyInequality::KkJoinQ,
        FamilyInequality::KkJoinComplement,
        FamilyInequality::K3JoinRho,
        FamilyInequality::K3JoinQ,
        FamilyInequality::K3JoinComplement,
        FamilyInequality::K4JoinRho,
        FamilyInequality::K4JoinQ,
        FamilyInequality::K4JoinComplement,
    ];

    /// Smallest order the inequality is claimed for.
    pub fn min_order(self, k: usize) -> usize {
        use FamilyInequality::*;
        match self {
            KkJoinRho => 2 * k + 8,
            KkJoinQ => 3 * k + 10,
            KkJoinComplement => 3 * k + 9,
            K3JoinRho | K4JoinRho | K4JoinQ => 9,
            K3JoinQ => 10,
            K3JoinComplement => 17,
            K4JoinComplement => 7,
        }
    }

    fn family(self, n: usize, k: usize) -> FamilyId {
        use FamilyInequality::*;
        match self {
            KkJoinRho | KkJoinQ | KkJoinComplement => FamilyId::KkJoinKnk2PlusK2 { n, k },
            K3JoinRho | K3JoinQ | K3JoinComplement => FamilyId::K3JoinKn5Plus2K1 { n },
            K4JoinRho | K4JoinQ | K4JoinComplement => FamilyId::K4JoinKn7Plus3K1 { n },
        }
    }

    fn bound(self, n: usize, k: usize) -> f64 {
        use FamilyInequality::*;
        let (n, k) = (n as f64, k as f64);
        match self {
            KkJoinRho => k / 2.0 + (n * n - (k + 8.0) * n + k * k / 4.0 + 7.0 * k + 23.0).sqrt(),
            KkJoinQ => 2.0 * n - 8.0 + (6.0 * k + 16.0) / (n - 1.0),
            KkJoinComplement => ((n - k) * (3.0 * n - 3.0 * k - 11.0) / n).sqrt(),
            K3JoinRho | K4JoinRho => 1.0 + (n * n - 10.0 * n + 38.0).sqrt(),
            K3JoinQ | K4JoinQ => 2.0 * n - 8.0 + 28.0 / (n - 1.0),
            K3JoinComplement | K4JoinComplement => ((n - 2.0) * (3.0 * n - 17.0) / n).sqrt(),
        }
    }

    /// Graph value exceeds the bound (otherwise it must stay below).
    fn is_lower_bound(self) -> bool {
        use FamilyInequality::*;
        matches!(self, KkJoinRho | KkJoinQ | K3JoinRho | K3JoinQ | K4JoinComplement)
    }

    /// Evaluates the inequality at order `n`; `k` is used by the
    /// `K_k ∨ (K_{n-k-2} + K_2)` items and ignored otherwise.
    pub fn check(self, n: usize, k: usize, tol: f64) -> Result<InequalityCheck> {
        if k < 2 {
            return Err(param("k must be at least 2"));
        }
        if n < self.min_order(k) {
            return Err(param(format!("{self:?} is claimed only for n >= {}", self.min_order(k))));
        }
        use FamilyInequality::*;
        let g = build_family(self.family(n, k))?;
        let graph_value = match self {
            KkJoinRho | K3JoinRho | K4JoinRho => adjacency_radius(&g, tol)?,
            KkJoinQ | K3JoinQ | K4JoinQ => signless_laplacian_radius(&g, tol)?,
            KkJoinComplement | K3JoinComplement | K4JoinComplement => adjacency_radius(&g.complement(), tol)?,
        };
        let bound = self.bound(n, k);
        let margin = if self.is_lower_bound() { graph_value - bound } else { bound - graph_value };
        Ok(InequalityCheck {
            inequality: self,
            n,
            k,
            graph_value,
            bound,
            margin,
        })
    }
}

/// Every inequality at every order from its lower bound to `max_n`.
pub fn scan_inequalities(k: usize, max_n: usize, tol: f64) -> Result<Vec<InequalityCheck>> {
    let mut out = Vec::new();
    for ineq in FamilyInequality::ALL {
        for n in ineq.min_order(k)..=max_n {
            out.push(ineq.check(n, k, tol)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tightest_cases_hold() {
        // Smallest slack sits at the lower end of each range.
        for ineq in FamilyInequality::ALL {
            let c = ineq.check(ineq.min_order(2), 2, 1e-12).unwrap();
            assert!(c.margin > 1e-3, "{c:?}");
        }
        let c = FamilyInequality::K4JoinRho.check(9, 2, 1e-12).unwrap();
        assert!(c.margin > 0.01 && c.margin < 0.02);
    }

    #[test]
    fn complement_closed_forms() {
        let c = FamilyInequality::K4JoinComplement.check(12, 2, 1e-12).unwrap();
        assert!((c.graph_value - 5.0).abs() < 1e-9);
        let c = FamilyInequality::K3JoinComplement.check(20, 2, 1e-12).unwrap();
        assert!((c.graph_value - (1.0 + 121f64.sqrt()) / 2.0).abs() < 1e-9);
        let c = FamilyInequality::KkJoinComplement.check(20, 3, 1e-12).unwrap();
        assert!((c.graph_value - 30f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn below_range_is_rejected() {
        assert!(FamilyInequality::K3JoinComplement.check(16, 2, 1e-10).is_err());
        assert!(FamilyInequality::KkJoinRho.check(11, 2, 1e-10).is_err());
    }
}
