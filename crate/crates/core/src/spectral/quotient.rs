//! Quotient matrices of vertex partitions, kept exact over the rationals.

use num_rational::Ratio;
use num_traits::{Float, ToPrimitive, Zero};
use serde::Serialize;

use super::matrix::SymmetricMatrix;
use crate::error::{param, Result};
use crate::graph::Graph;

/// Which graph matrix a quotient is taken of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatrixKind {
    Adjacency,
    SignlessLaplacian,
    /// The adjacency matrix of the complement.
    ComplementAdjacency,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub kind: MatrixKind,
    pub blocks: Vec<Vec<usize>>,
    /// `entries[i][j]` is the average over `u ∈ X_i` of the row sum of `u`
    /// restricted to `X_j`.
    pub entries: Vec<Vec<Ratio<i64>>>,
    /// Every block pair has a constant row sum.
    pub equitable: bool,
}

/// Builds the quotient of `kind`'s matrix for `partition`. Blocks must be
/// non-empty and cover the vertex set exactly once.
pub fn quotient_matrix(g: &Graph, kind: MatrixKind, partition: &[Vec<usize>]) -> Result<QuotientMatrix> {
    let n = g.order();
    let mut block_of = vec![usize::MAX; n];
    for (b, block) in partition.iter().enumerate() {
        if block.is_empty() {
            return Err(param(format!("partition block {b} is empty")));
        }
        for &v in block {
            if v >= n {
                return Err(param(format!("vertex {v} out of range for n = {n}")));
            }
            if block_of[v] != usize::MAX {
                return Err(param(format!("vertex {v} appears in two blocks")));
            }
            block_of[v] = b;
        }
    }
    if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
        return Err(param(format!("vertex {v} is not covered by the partition")));
    }

    let source = match kind {
        MatrixKind::ComplementAdjacency => g.complement(),
        _ => g.clone(),
    };
    let m = partition.len();
    // Integer row sums of each vertex into each block.
    let row_sums = |u: usize| -> Vec<i64> {
        let mut sums = vec![0i64; m];
        for w in source.neighbors(u) {
            sums[block_of[w]] += 1;
        }
        if kind == MatrixKind::SignlessLaplacian {
            sums[block_of[u]] += source.degree(u) as i64;
        }
        sums
    };

    let mut entries = vec![vec![Ratio::zero(); m]; m];
    let mut equitable = true;
    for (i, block) in partition.iter().enumerate() {
        let first = row_sums(block[0]);
        let mut total = vec![0i64; m];
        for &u in block {
            let sums = row_sums(u);
            if sums != first {
                equitable = false;
            }
            for j in 0..m {
                total[j] += sums[j];
            }
        }
        for j in 0..m {
            entries[i][j] = Ratio::new(total[j], block.len() as i64);
        }
    }
    Ok(QuotientMatrix {
        kind,
        blocks: partition.to_vec(),
        entries,
        equitable,
    })
}

impl QuotientMatrix {
    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entry<T: Float>(&self, i: usize, j: usize) -> T {
        let r = self.entries[i][j];
        T::from(r.numer().to_f64().unwrap() / r.denom().to_f64().unwrap()).unwrap()
    }

    /// Monic characteristic polynomial `det(xI - R)` by Faddeev–LeVerrier,
    /// coefficients from the leading one down to the constant term.
    pub fn characteristic_polynomial(&self) -> Vec<Ratio<i64>> {
        let m = self.order();
        let a = &self.entries;
        let zero = Ratio::zero();
        let mut coeffs = vec![Ratio::from_integer(1)];
        let mut mk = vec![vec![zero; m]; m];
        let mut c_prev = Ratio::from_integer(1);
        for k in 1..=m {
            // M_k = A M_{k-1} + c_{k-1} I
            let mut next = vec![vec![zero; m]; m];
            for i in 0..m {
                for j in 0..m {
                    let mut s = zero;
                    for l in 0..m {
                        s += a[i][l] * mk[l][j];
                    }
                    next[i][j] = s;
                }
                next[i][i] += c_prev;
            }
            mk = next;
            let mut trace = zero;
            for i in 0..m {
                for l in 0..m {
                    trace += a[i][l] * mk[l][i];
                }
            }
            c_prev = -trace / Ratio::from_integer(k as i64);
            coeffs.push(c_prev);
        }
        coeffs
    }

    /// Largest eigenvalue of an equitable quotient, via the symmetric matrix
    /// `D^{1/2} R D^{-1/2}` with `D = diag(|X_i|)`.
    pub fn largest_eigenvalue<T: Float>(&self, tol: T) -> Result<T> {
        if !self.equitable {
            return Err(param("largest_eigenvalue needs an equitable partition"));
        }
        let m = self.order();
        let rows: Vec<Vec<T>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i == j {
                            self.entry(i, i)
                        } else {
                            (self.entry::<T>(i, j) * self.entry::<T>(j, i)).sqrt()
                        }
                    })
                    .collect()
            })
            .collect();
        super::dominant_eigenvalue(&SymmetricMatrix::from_rows(&rows)?, tol)
    }
}
