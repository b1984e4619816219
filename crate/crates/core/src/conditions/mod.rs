//! Sufficient conditions for k-leaf-connectivity: edge thresholds, the
//! degree-sequence test, spectral thresholds, and the families that show up
//! as their exceptions.

mod families;
mod report;

pub use families::{
    build_family, recognize_exception, recognize_thm12_exception, Block, FamilyId, JoinShape, Thm12Exception,
};
pub use report::{
    evaluate, Conclusion, ConditionReport, DegreeCheck, EdgeCheck, EvaluateOptions, Necessary, SpectralCheck,
    Sufficient,
};

use num_traits::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::DegreeProfile;

/// The four edge-count theorems, named as in the report schema.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// `e >= C(n-1, 2) + k + 1` with `2 <= k <= n-4`.
    Thm11,
    /// `e >= C(n-2, 2) + 2k + 2` with `2 <= k <= n-4`.
    Thm12,
    /// Hamilton-connectivity: `e >= C(n-t, 2) + t² + 2` with `n >= 6t+3`, `t >= 2`.
    Thm13,
    /// `e >= C(n-3, 2) + 3k + 5` with `n >= k+17`, `k >= 2`.
    Thm14,
}

fn binom2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

fn range_error(which: Theorem, hypothesis: &str, n: usize, k: usize) -> Error {
    Error::Parameter(format!("{which:?} needs {hypothesis}, got n = {n}, k/t = {k}"))
}

/// Exact edge threshold of `which` at order `n`; `k_or_t` is `t` for
/// [`Theorem::Thm13`] and `k` otherwise.
pub fn threshold_edges(which: Theorem, n: usize, k_or_t: usize) -> Result<usize> {
    let k = k_or_t;
    match which {
        Theorem::Thm11 | Theorem::Thm12 if k < 2 || k + 4 > n => Err(range_error(which, "2 <= k <= n - 4", n, k)),
        Theorem::Thm14 if k < 2 || n < k + 17 => Err(range_error(which, "k >= 2 and n >= k + 17", n, k)),
        Theorem::Thm13 if k < 2 || n < 6 * k + 3 => Err(range_error(which, "t >= 2 and n >= 6t + 3", n, k)),
        _ => Ok(edge_formula(which, n, k)),
    }
}

/// The threshold formula without its range check.
pub(crate) fn edge_formula(which: Theorem, n: usize, k: usize) -> usize {
    match which {
        Theorem::Thm11 => binom2(n.saturating_sub(1)) + k + 1,
        Theorem::Thm12 => binom2(n.saturating_sub(2)) + 2 * k + 2,
        Theorem::Thm14 => binom2(n.saturating_sub(3)) + 3 * k + 5,
        Theorem::Thm13 => binom2(n.saturating_sub(k)) + k * k + 2,
    }
}

/// Smallest `i` with `k <= i <= (n+k-2)/2`, `d_{i-k+1} <= i` and
/// `d_{n-i} <= n-i+k-2`, or `None` when no such `i` exists, in which case
/// the graph is k-leaf-connected.
pub fn degree_condition(profile: &DegreeProfile, k: usize) -> Result<Option<usize>> {
    let n = profile.order();
    if k < 2 || k + 3 > n {
        return Err(Error::Parameter(format!(
            "degree condition needs 2 <= k <= n - 3, got n = {n}, k = {k}"
        )));
    }
    Ok((k..=(n + k - 2) / 2).find(|&i| profile.d(i - k + 1) <= i && profile.d(n - i) + i < n + k - 1))
}

/// Spectral thresholds at `(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralThresholds<T> {
    /// `ρ(G)` at or above this suffices.
    pub rho_min: T,
    /// `q(G)` at or above this suffices.
    pub q_min: T,
    /// `ρ(Ḡ)` at or below this suffices.
    pub rho_complement_max: T,
}

pub fn spectral_thresholds<T: Float>(n: usize, k: usize) -> Result<SpectralThresholds<T>> {
    if k < 2 || n < k + 17 {
        return Err(Error::Parameter(format!(
            "spectral thresholds need k >= 2 and n >= k + 17, got n = {n}, k = {k}"
        )));
    }
    let c = |x: f64| T::from(x).unwrap();
    let (nf, kf) = (n as f64, k as f64);
    Ok(SpectralThresholds {
        rho_min: c(kf / 2.0) + c(nf * nf - (kf + 8.0) * nf + kf * kf / 4.0 + 7.0 * kf + 23.0).sqrt(),
        q_min: c(2.0 * nf - 8.0) + c(6.0 * kf + 16.0) / c(nf - 1.0),
        rho_complement_max: (c(nf - kf) * c(3.0 * nf - 3.0 * kf - 11.0) / c(nf)).sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn threshold_examples() {
        assert_eq!(threshold_edges(Theorem::Thm14, 19, 2).unwrap(), 131);
        assert_eq!(threshold_edges(Theorem::Thm12, 9, 2).unwrap(), 27);
        assert_eq!(threshold_edges(Theorem::Thm11, 10, 3).unwrap(), 40);
        assert_eq!(threshold_edges(Theorem::Thm13, 15, 2).unwrap(), binom2(13) + 6);
    }

    #[test]
    fn threshold_ranges() {
        assert!(threshold_edges(Theorem::Thm14, 18, 2).is_err());
        assert!(threshold_edges(Theorem::Thm11, 5, 2).is_err());
        assert!(threshold_edges(Theorem::Thm12, 9, 1).is_err());
        assert!(threshold_edges(Theorem::Thm13, 14, 2).is_err());
        let err = threshold_edges(Theorem::Thm14, 10, 2).unwrap_err().to_string();
        assert!(err.contains("n >= k + 17"), "{err}");
    }

    #[test]
    fn thresholds_strictly_improve() {
        for k in 2..=6 {
            for n in k + 17..=80 {
                let t11 = threshold_edges(Theorem::Thm11, n, k).unwrap();
                let t12 = threshold_edges(Theorem::Thm12, n, k).unwrap();
                let t14 = threshold_edges(Theorem::Thm14, n, k).unwrap();
                assert!(t14 < t12 && t12 < t11, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn degree_condition_examples() {
        assert_eq!(degree_condition(&Graph::complete(5).degree_profile(), 2).unwrap(), None);
        assert_eq!(degree_condition(&Graph::complete(6).degree_profile(), 2).unwrap(), None);
        let g = Graph::complete(2).join(&Graph::complete(4).disjoint_union(&Graph::complete(2)));
        assert_eq!(g.degree_profile().degrees, vec![3, 3, 5, 5, 5, 5, 7, 7]);
        assert_eq!(degree_condition(&g.degree_profile(), 2).unwrap(), Some(3));
        assert!(degree_condition(&Graph::complete(5).degree_profile(), 3).is_err());
        assert!(degree_condition(&Graph::complete(5).degree_profile(), 1).is_err());
    }

    #[test]
    fn spectral_threshold_examples() {
        let t = spectral_thresholds::<f64>(19, 2).unwrap();
        assert!((t.rho_min - (1.0 + 209f64.sqrt())).abs() < 1e-12);
        assert!((t.rho_min - 15.45683).abs() < 1e-5);
        assert!((t.q_min - (30.0 + 28.0 / 18.0)).abs() < 1e-12);
        assert!((t.rho_complement_max - (680.0f64 / 19.0).sqrt()).abs() < 1e-12);
        assert!((t.rho_complement_max - 5.982_43).abs() < 1e-5);
        assert!(spectral_thresholds::<f64>(18, 2).is_err());
        let t32 = spectral_thresholds::<f32>(19, 2).unwrap();
        assert!((t32.q_min - 31.555_555).abs() < 1e-4);
    }
}
