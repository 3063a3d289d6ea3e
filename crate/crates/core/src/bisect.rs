//! Bisection on an interval where a predicate flips exactly once.

/// Iteration cap for every bisection in the crate.
pub const MAX_ITER: usize = 100;

/// Finds the boundary of `below` on `[lo, hi]`, assuming `below(x)` holds
/// for all `x` left of the boundary and fails right of it.
///
/// Stops once the bracket is narrower than `tol` or after [`MAX_ITER`]
/// halvings, and returns the bracket midpoint.
pub fn boundary(mut lo: f64, mut hi: f64, tol: f64, mut below: impl FnMut(f64) -> bool) -> f64 {
    for _ in 0..MAX_ITER {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if below(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
