//! Monic cubics: the closed-form quotient characteristic polynomials of the
//! two closure-exception families, and their largest real root.

use std::fmt;

use num_traits::{Float, Num};
use serde::Serialize;

use super::quotient::MatrixKind;
use crate::conditions::FamilyId;
use crate::error::{param, Result};

/// `x^3 + a2 x^2 + a1 x + a0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cubic<C> {
    pub a2: C,
    pub a1: C,
    pub a0: C,
}

impl<C: Num + Copy> Cubic<C> {
    pub fn new(a2: C, a1: C, a0: C) -> Self {
        Cubic { a2, a1, a0 }
    }

    pub fn eval(&self, x: C) -> C {
        ((x + self.a2) * x + self.a1) * x + self.a0
    }
}

impl Cubic<i64> {
    pub fn to_float<T: Float>(&self) -> Cubic<T> {
        Cubic {
            a2: T::from(self.a2).unwrap(),
            a1: T::from(self.a1).unwrap(),
            a0: T::from(self.a0).unwrap(),
        }
    }

    /// Coefficients from the leading one down.
    pub fn coefficients(&self) -> [i64; 4] {
        [1, self.a2, self.a1, self.a0]
    }
}

impl fmt::Display for Cubic<i64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^3")?;
        for (c, pow) in [(self.a2, "x^2"), (self.a1, "x"), (self.a0, "")] {
            if c != 0 {
                let sign = if c < 0 { '-' } else { '+' };
                let mag = c.unsigned_abs();
                if mag == 1 && !pow.is_empty() {
                    write!(f, " {sign} {pow}")?;
                } else {
                    write!(f, " {sign} {mag}{pow}")?;
                }
            }
        }
        Ok(())
    }
}

/// Largest real root of a monic cubic, within `tol`.
///
/// Past the larger critical point `x2` the cubic is increasing, so the largest
/// root sits in `[x2, B]` when `p(x2) <= 0` and below the smaller critical
/// point otherwise; `B` is the Cauchy bound. Bisection does the rest.
pub fn largest_real_root_cubic<T: Float>(c: &Cubic<T>, tol: T) -> T {
    let three = T::from(3).unwrap();
    let two = T::one() + T::one();
    let bound = T::one() + c.a2.abs().max(c.a1.abs()).max(c.a0.abs());
    let disc = c.a2 * c.a2 - three * c.a1;
    let (mut lo, mut hi) = if disc <= T::zero() {
        (-bound, bound)
    } else {
        let root = disc.sqrt();
        let x1 = (-c.a2 - root) / three;
        let x2 = (-c.a2 + root) / three;
        if c.eval(x2) <= T::zero() {
            (x2, bound)
        } else {
            (-bound, x1)
        }
    };
    // Invariant: p(lo) <= 0 < p(hi) up to rounding.
    for _ in 0..2000 {
        if hi - lo <= tol {
            break;
        }
        let mid = (lo + hi) / two;
        if mid <= lo || mid >= hi {
            break;
        }
        if c.eval(mid) <= T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) / two
}

/// Closed-form characteristic polynomial of the equitable quotient (join
/// block, clique block, independent block) of `K_3 ∨ (K_{n-5} + 2K_1)` or
/// `K_4 ∨ (K_{n-7} + 3K_1)`.
pub fn family_charpoly(family: FamilyId, kind: MatrixKind) -> Result<Cubic<i64>> {
    use MatrixKind::*;
    match family {
        FamilyId::K3JoinKn5Plus2K1 { n } if n >= 6 => {
            let n = n as i64;
            Ok(match kind {
                Adjacency => Cubic::new(-(n - 4), -(n + 3), 6 * n - 36),
                SignlessLaplacian => Cubic::new(-(3 * n - 5), 2 * n * n - n - 24, -6 * n * n + 42 * n - 72),
                ComplementAdjacency => Cubic::new(-1, -2 * n + 10, 0),
            })
        }
        FamilyId::K4JoinKn7Plus3K1 { n } if n >= 8 => {
            let n = n as i64;
            Ok(match kind {
                Adjacency => Cubic::new(-(n - 5), -(n + 8), 12 * n - 96),
                SignlessLaplacian => Cubic::new(-3 * (n - 2), 2 * n * n - 48, -8 * n * n + 72 * n - 160),
                ComplementAdjacency => Cubic::new(-2, -3 * n + 21, 0),
            })
        }
        FamilyId::K3JoinKn5Plus2K1 { .. } | FamilyId::K4JoinKn7Plus3K1 { .. } => Err(param(format!(
            "{family}: closed form needs every partition block non-empty"
        ))),
        other => Err(param(format!("no closed-form characteristic polynomial for {}", other.tag()))),
    }
}

#[cfg(test)]
mod tests {
    use num_rational::Ratio;

    use super::*;
    use crate::conditions::build_family;
    use crate::spectral::{adjacency_radius, quotient_matrix};

    #[test]
    fn family_examples() {
        let c = family_charpoly(FamilyId::K4JoinKn7Plus3K1 { n: 12 }, MatrixKind::Adjacency).unwrap();
        assert_eq!(c.coefficients(), [1, -7, -20, 48]);
        assert_eq!(c.to_string(), "x^3 - 7x^2 - 20x + 48");
        let c = family_charpoly(FamilyId::K3JoinKn5Plus2K1 { n: 9 }, MatrixKind::Adjacency).unwrap();
        assert_eq!(c.coefficients(), [1, -5, -12, 18]);
        let c = family_charpoly(FamilyId::K4JoinKn7Plus3K1 { n: 12 }, MatrixKind::SignlessLaplacian).unwrap();
        assert_eq!(c.coefficients(), [1, -30, 240, -448]);
        assert!(family_charpoly(FamilyId::RemarkGraph { n: 9 }, MatrixKind::Adjacency).is_err());
        assert!(family_charpoly(FamilyId::K4JoinKn7Plus3K1 { n: 7 }, MatrixKind::Adjacency).is_err());
    }

    #[test]
    fn closed_forms_equal_exact_quotient_charpolys() {
        let kinds = [MatrixKind::Adjacency, MatrixKind::SignlessLaplacian, MatrixKind::ComplementAdjacency];
        for n in 9..=40 {
            for id in [FamilyId::K3JoinKn5Plus2K1 { n }, FamilyId::K4JoinKn7Plus3K1 { n }] {
                let g = build_family(id).unwrap();
                for kind in kinds {
                    let q = quotient_matrix(&g, kind, &id.shape().partition()).unwrap();
                    let closed = family_charpoly(id, kind).unwrap().coefficients();
                    let exact: Vec<Ratio<i64>> = closed.iter().map(|&c| Ratio::from_integer(c)).collect();
                    assert_eq!(q.characteristic_polynomial(), exact, "{id} {kind:?}");
                }
            }
        }
    }

    #[test]
    fn root_examples() {
        let r = largest_real_root_cubic(&Cubic::new(0.0, -1.0, 0.0), 1e-13);
        assert!((r - 1.0f64).abs() < 1e-12);

        let id = FamilyId::K4JoinKn7Plus3K1 { n: 12 };
        let c = family_charpoly(id, MatrixKind::Adjacency).unwrap().to_float::<f64>();
        let dense = adjacency_radius::<f64>(&build_family(id).unwrap(), 1e-12).unwrap();
        assert!((largest_real_root_cubic(&c, 1e-12) - dense).abs() < 1e-8);

        let c = family_charpoly(FamilyId::K3JoinKn5Plus2K1 { n: 12 }, MatrixKind::ComplementAdjacency)
            .unwrap()
            .to_float::<f64>();
        assert!((largest_real_root_cubic(&c, 1e-13) - (1.0 + 57f64.sqrt()) / 2.0).abs() < 1e-10);
    }

    #[test]
    fn root_handles_single_real_root_and_double_roots() {
        // x^3 + x + 1 has one real root near -0.6823.
        let r = largest_real_root_cubic(&Cubic::new(0.0, 1.0, 1.0), 1e-13);
        assert!((r + 0.682_327_803_828_019_3f64).abs() < 1e-11);
        // (x - 2)^2 (x + 1) = x^3 - 3x^2 + 4. A double root is only resolved
        // to about sqrt(eps) since p is flat there.
        let r = largest_real_root_cubic(&Cubic::new(-3.0, 0.0, 4.0), 1e-13);
        assert!((r - 2.0f64).abs() < 1e-6);
        // (x - 1)(x + 2)^2 = x^3 + 3x^2 - 4: largest root is the simple one.
        let r = largest_real_root_cubic(&Cubic::new(3.0, 0.0, -4.0), 1e-13);
        assert!((r - 1.0f64).abs() < 1e-11);
    }

    #[test]
    fn integer_evaluation() {
        let c = Cubic::new(-7i64, -20, 48);
        assert_eq!(c.eval(0), 48);
        assert_eq!(c.eval(2), 8 - 28 - 40 + 48);
    }
}
