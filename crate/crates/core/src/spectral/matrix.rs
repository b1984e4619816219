//! Dense symmetric matrices and a cyclic Jacobi eigenvalue kernel.

use num_traits::Float;
use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::graph::Graph;

/// Upper bound on full Jacobi sweeps before giving up.
const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix<T> {
    order: usize,
    entries: Vec<T>,
}

impl<T: Float> SymmetricMatrix<T> {
    /// Validates squareness, exact symmetry and finiteness.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(param(format!("row {i} has {} entries, expected {order}", row.len())));
            }
            if row.iter().any(|x| !x.is_finite()) {
                return Err(Error::Domain(format!("matrix input: non-finite entry in row {i}")));
            }
            entries.extend_from_slice(row);
        }
        for i in 0..order {
            for j in 0..i {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(param(format!("matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(SymmetricMatrix { order, entries })
    }

    /// `A(G)`.
    pub fn adjacency(g: &Graph) -> Self {
        let n = g.order();
        let mut entries = vec![T::zero(); n * n];
        for (u, v) in g.edges() {
            entries[u * n + v] = T::one();
            entries[v * n + u] = T::one();
        }
        SymmetricMatrix { order: n, entries }
    }

    /// `Q(G) = D(G) + A(G)`.
    pub fn signless_laplacian(g: &Graph) -> Self {
        let mut m = Self::adjacency(g);
        let n = g.order();
        for v in 0..n {
            m.entries[v * n + v] = T::from(g.degree(v)).unwrap();
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.order + j]
    }

    fn off_diagonal_norm(a: &[T], n: usize) -> T {
        let mut sum = T::zero();
        for i in 0..n {
            for j in (i + 1)..n {
                sum = sum + a[i * n + j] * a[i * n + j];
            }
        }
        (sum + sum).sqrt()
    }

    /// All eigenvalues in descending order.
    ///
    /// Sweeps until the off-diagonal Frobenius norm (which bounds every
    /// eigenvalue's distance from the diagonal) drops below `tol`, or below
    /// the attainable floor `n · eps · ‖A‖_F` when `tol` is tighter than the
    /// scalar type allows.
    pub fn eigenvalues(&self, tol: T) -> Result<Vec<T>> {
        let n = self.order;
        let mut a = self.entries.clone();
        let scale = a.iter().fold(T::zero(), |s, &x| s + x * x).sqrt();
        let floor = T::from(n.max(1)).unwrap() * T::epsilon() * scale;
        let target = tol.max(floor);

        let mut converged = false;
        for _ in 0..MAX_SWEEPS {
            if Self::off_diagonal_norm(&a, n) <= target {
                converged = true;
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    rotate(&mut a, n, p, q);
                }
            }
        }
        if !converged && Self::off_diagonal_norm(&a, n) > target {
            return Err(Error::Numerical(format!(
                "Jacobi iteration did not converge in {MAX_SWEEPS} sweeps"
            )));
        }
        let mut values: Vec<T> = (0..n).map(|i| a[i * n + i]).collect();
        values.sort_by(|x, y| y.partial_cmp(x).unwrap());
        Ok(values)
    }
}

/// One Jacobi rotation zeroing `a[p][q]`.
fn rotate<T: Float>(a: &mut [T], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == T::zero() {
        return;
    }
    let two = T::one() + T::one();
    let theta = (a[q * n + q] - a[p * n + p]) / (two * apq);
    let t = theta.signum() / (theta.abs() + theta.hypot(T::one()));
    let c = T::one() / t.hypot(T::one());
    let s = t * c;

    a[p * n + p] = a[p * n + p] - t * apq;
    a[q * n + q] = a[q * n + q] + t * apq;
    a[p * n + q] = T::zero();
    a[q * n + p] = T::zero();
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_p = c * arp - s * arq;
        let new_q = s * arp + c * arq;
        a[r * n + p] = new_p;
        a[p * n + r] = new_p;
        a[r * n + q] = new_q;
        a[q * n + r] = new_q;
    }
}

/// Largest eigenvalue of `m`, within `tol`.
pub fn dominant_eigenvalue<T: Float>(m: &SymmetricMatrix<T>, tol: T) -> Result<T> {
    if m.order() == 0 {
        return Err(param("empty matrix has no eigenvalues"));
    }
    Ok(m.eigenvalues(tol)?[0])
}

/// ρ(G).
pub fn adjacency_radius<T: Float>(g: &Graph, tol: T) -> Result<T> {
    dominant_eigenvalue(&SymmetricMatrix::adjacency(g), tol)
}

/// q(G).
pub fn signless_laplacian_radius<T: Float>(g: &Graph, tol: T) -> Result<T> {
    dominant_eigenvalue(&SymmetricMatrix::signless_laplacian(g), tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralReport<T> {
    pub rho: T,
    pub q: T,
    pub rho_complement: T,
    pub tolerance: T,
}

/// ρ(G), q(G) and ρ of the complement.
pub fn spectral_report<T: Float>(g: &Graph, tol: T) -> Result<SpectralReport<T>> {
    Ok(SpectralReport {
        rho: adjacency_radius(g, tol)?,
        q: signless_laplacian_radius(g, tol)?,
        rho_complement: adjacency_radius(&g.complement(), tol)?,
        tolerance: tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_join_k5_3k1() -> Graph {
        Graph::complete(4).join(&Graph::complete(5).disjoint_union(&Graph::empty(3)))
    }

    #[test]
    fn dominant_examples() {
        let k5 = SymmetricMatrix::<f64>::adjacency(&Graph::complete(5));
        assert!((dominant_eigenvalue(&k5, 1e-10).unwrap() - 4.0).abs() < 1e-9);

        let k26 = SymmetricMatrix::<f64>::adjacency(&Graph::complete_bipartite(2, 6));
        assert!((dominant_eigenvalue(&k26, 1e-10).unwrap() - 12f64.sqrt()).abs() < 1e-9);

        let c = SymmetricMatrix::<f64>::adjacency(&k4_join_k5_3k1().complement());
        assert!((dominant_eigenvalue(&c, 1e-10).unwrap() - 5.0).abs() < 1e-9);
    }

    #[test]
    fn radius_examples() {
        assert!((signless_laplacian_radius::<f64>(&Graph::complete(7), 1e-10).unwrap() - 12.0).abs() < 1e-9);
        assert!((signless_laplacian_radius::<f64>(&Graph::complete(12), 1e-10).unwrap() - 22.0).abs() < 1e-9);
        let h = Graph::complete(3).join(&Graph::complete(7).disjoint_union(&Graph::empty(2)));
        let r = adjacency_radius::<f64>(&h.complement(), 1e-10).unwrap();
        assert!((r - (1.0 + 57f64.sqrt()) / 2.0).abs() < 1e-6);
    }

    #[test]
    fn full_spectrum_of_cycle() {
        // C_6 adjacency eigenvalues are 2cos(2πj/6): 2, 1, 1, -1, -1, -2.
        let m = SymmetricMatrix::<f64>::adjacency(&Graph::cycle(6));
        let ev = m.eigenvalues(1e-12).unwrap();
        for (got, want) in ev.iter().zip([2.0, 1.0, 1.0, -1.0, -1.0, -2.0]) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn single_precision_path() {
        let r = adjacency_radius::<f32>(&Graph::complete(6), 1e-10).unwrap();
        assert!((r - 5.0).abs() < 1e-4);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SymmetricMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).is_err());
        assert!(SymmetricMatrix::from_rows(&[vec![f64::NAN]]).is_err());
        assert!(SymmetricMatrix::<f64>::from_rows(&[vec![0.0, 1.0]]).is_err());
        let m = SymmetricMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert!((dominant_eigenvalue(&m, 1e-12).unwrap() - 3.0).abs() < 1e-12);
    }
}
