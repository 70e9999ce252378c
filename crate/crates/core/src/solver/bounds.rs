//! Closed-form bounds for r-regular graphs, kept as exact rationals.
//! Rounding happens only at comparison sites, never here.

use num_rational::Ratio;

use crate::error::SolverError;

pub type Rational = Ratio<i64>;

/// Upper bounds on the maximum p-independent set of an r-regular graph of
/// order n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlphaUpperBounds {
    /// nr / (2r - p), valid for 0 <= p <= r. Sharp: attained by the
    /// complete-bipartite sharpness family whenever 2r - p divides nr.
    pub primary: Rational,
    /// nr / (r + 1), valid only for p < r (hence `None` at p = r).
    pub secondary: Option<Rational>,
}

pub fn upper_bound_alpha_p(n: usize, r: usize, p: usize) -> Result<AlphaUpperBounds, SolverError> {
    if r < 1 || p > r || n < r + 1 {
        return Err(SolverError::BadBoundParams { n, r, p });
    }
    let (n, r, p) = (n as i64, r as i64, p as i64);
    Ok(AlphaUpperBounds {
        primary: Ratio::new(n * r, 2 * r - p),
        secondary: (p < r).then(|| Ratio::new(n * r, r + 1)),
    })
}

/// Lower bound on the matching number of a connected r-regular graph of
/// order n, for odd r >= 3:
///
///   mu >= ((r^3 - r^2 - 2) n - 2r + 2) / (2 (r^3 - 3r))
///
/// At r = 3 this is (4n - 1) / 9.
pub fn lower_bound_matching(n: usize, r: usize) -> Result<Rational, SolverError> {
    if r < 3 || r.is_multiple_of(2) || n < r + 1 {
        return Err(SolverError::BadMatchingBoundParams { n, r });
    }
    let (n, r) = (n as i64, r as i64);
    let numer = (r * r * r - r * r - 2) * n - 2 * r + 2;
    let denom = 2 * (r * r * r - 3 * r);
    Ok(Ratio::new(numer, denom))
}
