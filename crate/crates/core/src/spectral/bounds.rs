//! Closed-form upper bounds on ρ(G) and q(G).

use num_traits::Float;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn cast<T: Float>(x: usize) -> T {
    T::from(x).unwrap()
}

/// `f(x) = (x - 1)/2 + sqrt(2e - n x + (x + 1)^2 / 4)`, nonincreasing on
/// `0 <= x <= n - 1` whenever `2e <= n(n - 1)`.
pub fn hong_f<T: Float>(x: T, n: usize, e: usize) -> Result<T> {
    let two = T::one() + T::one();
    let four = two + two;
    let radicand = two * cast(e) - cast::<T>(n) * x + (x + T::one()).powi(2) / four;
    if radicand < T::zero() {
        return Err(Error::Domain(format!(
            "the Hong–Shu–Fang bound: negative radicand at x = {:?}, n = {n}, e = {e}",
            x.to_f64()
        )));
    }
    Ok((x - T::one()) / two + radicand.sqrt())
}

/// `(δ - 1)/2 + sqrt(2e - δn + (δ + 1)^2 / 4)`, an upper bound on ρ(G).
pub fn hong_bound<T: Float>(g: &Graph) -> Result<T> {
    hong_f(cast(g.min_degree()), g.order(), g.edge_count())
}

/// `2e/(n - 1) + n - 2`, an upper bound on q(G) for connected `G`.
pub fn feng_yu_bound<T: Float>(g: &Graph) -> Result<T> {
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return Err(Error::Precondition(
            "the Feng–Yu bound needs a connected graph on at least 2 vertices".into(),
        ));
    }
    let two = T::one() + T::one();
    Ok(two * cast(g.edge_count()) / cast(n - 1) + cast(n) - two)
}
