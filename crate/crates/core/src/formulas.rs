//! Closed-form Wiener indices and average-distance bounds, all exact.
//!
//! The Wiener-index expressions here are the extremal values for the tree
//! families used by the construction: trees with a given number of leaves,
//! trees in `T_{a,b}` (a base of order `a` plus `b` attached leaves), and
//! the two concrete shapes that the refined bounds reduce to. Every
//! function returns a [`Rational`], even where the value is integral.

use num_bigint::BigInt;

use crate::rational::{int, ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("{0:?} is a Wiener-index formula, not a mean-distance bound")]
    NotAMuBound(BoundSource),
}

fn out_of_range(msg: impl Into<String>) -> FormulaError {
    FormulaError::OutOfRange(msg.into())
}

/// Which result a bound value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundSource {
    /// Wiener maximum for trees with a given leaf count.
    Pendant,
    /// Wiener maximum over `T_{a,b}`.
    Tab,
    /// The same maximum written in terms of `(n, t)`.
    TabEq,
    /// `T_{a,b}` maximum at base order `2k - 2`.
    F2k2,
    /// `k + 1/2` for base order at most `2k - 2`.
    LeAdd,
    /// `k + 1/2` for short-diameter brooms on `P_{2k-1}`.
    Diameter,
    /// `k + 1/2 + 4(k-1)/k^2` for pendant-light paths on `2k` vertices.
    LeFinal2,
    /// `k + 1/2 + 1/(2(2k-5))` for non-path bases with even segments.
    LeExtra,
    /// `alpha + 1`.
    ThNew,
    /// Piecewise refined bound.
    Th1,
    DumbbellGap,
    MuGapAlpha,
}

/// A bound together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValue {
    pub value: Rational,
    pub source: BoundSource,
}

fn big(v: usize) -> BigInt {
    BigInt::from(v)
}

fn over(num: BigInt, den: i64) -> Rational {
    Rational::new(num, BigInt::from(den))
}

/// Maximum Wiener index of an order-`n` tree with `p` leaves:
/// `(2n^3 - (3p^2 - 6p + 2)n + p^3 + 3p^2 - 10p) / 12`.
///
/// The extremal statement needs `n >= 4` and `2 <= p <= n - 2`; `p = 1` is
/// admitted so the monotonicity in `p` can be checked from the start.
pub fn pendant_bound(n: usize, p: usize) -> Result<Rational, FormulaError> {
    if n < 4 || p < 1 || p > n - 2 {
        return Err(out_of_range(format!("pendant_bound(n={n}, p={p})")));
    }
    let (n, p) = (big(n), big(p));
    let num = BigInt::from(2) * &n * &n * &n
        - (BigInt::from(3) * &p * &p - BigInt::from(6) * &p + 2) * &n
        + &p * &p * &p
        + BigInt::from(3) * &p * &p
        - BigInt::from(10) * &p;
    Ok(over(num, 12))
}

/// Maximum Wiener index over `T_{a,b}`:
/// `(2a^3 + 6a^2 b + 3ab^2 + 6ab - 2a + 9b^2 - 12b) / 12`.
pub fn tab_bound(a: usize, b: usize) -> Result<Rational, FormulaError> {
    if a < 2 || b < 1 {
        return Err(out_of_range(format!("tab_bound(a={a}, b={b})")));
    }
    let (a, b) = (big(a), big(b));
    let num = BigInt::from(2) * &a * &a * &a
        + BigInt::from(6) * &a * &a * &b
        + BigInt::from(3) * &a * &b * &b
        + BigInt::from(6) * &a * &b
        - BigInt::from(2) * &a
        + BigInt::from(9) * &b * &b
        - BigInt::from(12) * &b;
    Ok(over(num, 12))
}

/// `tab_bound(t, n - t)` written in `(n, t)`:
/// `(-t^3 + 3t^2 + (3n^2 - 12n + 10)t + 9n^2 - 12n) / 12`.
pub fn tab_bound_eq(n: usize, t: usize) -> Result<Rational, FormulaError> {
    if t < 2 || t + 1 > n {
        return Err(out_of_range(format!("tab_bound_eq(n={n}, t={t})")));
    }
    let (n, t) = (big(n), big(t));
    let num = -(&t * &t * &t) + BigInt::from(3) * &t * &t
        + (BigInt::from(3) * &n * &n - BigInt::from(12) * &n + 10) * &t
        + BigInt::from(9) * &n * &n
        - BigInt::from(12) * &n;
    Ok(over(num, 12))
}

/// `tab_bound_eq(n, 2k - 2)` expanded in `k`:
/// `(-8k^3 + 36k^2 + 2(3n^2 - 12n - 14)k + 3n^2 + 12n) / 12`.
pub fn f2k2(n: usize, k: usize) -> Result<Rational, FormulaError> {
    if k < 2 || 2 * k - 2 > n.saturating_sub(1) {
        return Err(out_of_range(format!("f2k2(n={n}, k={k})")));
    }
    let (n, k) = (big(n), big(k));
    let num = BigInt::from(-8) * &k * &k * &k
        + BigInt::from(36) * &k * &k
        + BigInt::from(2) * (BigInt::from(3) * &n * &n - BigInt::from(12) * &n - 14) * &k
        + BigInt::from(3) * &n * &n
        + BigInt::from(12) * &n;
    Ok(over(num, 12))
}

/// Wiener index of `P_{2k}` with `a` leaves on its first vertex, `b` on its
/// last, and the remaining `n - 2k - a - b` on its third vertex.
pub fn w_doublebroom(n: usize, k: usize, a: usize, b: usize) -> Result<Rational, FormulaError> {
    if k < 2 || a < 1 || b < 1 || a + b + 2 * k > n {
        return Err(out_of_range(format!("w_doublebroom(n={n}, k={k}, a={a}, b={b})")));
    }
    let (n, a, b) = (n as i64, a as i64, b as i64);
    // Each edge with s vertices on one side contributes (n - 1) + (s - 1)(n - s - 1).
    let mut w = (n - 1) * (n - 1) + a * (n - a - 2) + (a + 1) * (n - a - 3);
    for i in 0..=(2 * k as i64 - 4) {
        w += (b + i) * (n - b - i - 2);
    }
    Ok(int(w))
}

/// Wiener index of the three-leg spider of order `2k - 1` (one leg of
/// `2k - 6` edges, two legs of 2 edges) with `a` leaves on the long leg's
/// end and `b`, `c` on the short legs' ends.
pub fn w_spider(n: usize, k: usize, a: usize, b: usize, c: usize) -> Result<Rational, FormulaError> {
    if k < 4 || n + 1 < 2 * k || a + b + c != n + 1 - 2 * k {
        return Err(out_of_range(format!("w_spider(n={n}, k={k}, a={a}, b={b}, c={c})")));
    }
    let (n, a, b, c) = (n as i64, a as i64, b as i64, c as i64);
    let short = |x: i64| x * (n - x - 2) + (x + 1) * (n - x - 3);
    let mut w = (n - 1) * (n - 1) + short(b) + short(c);
    for i in 0..=(2 * k as i64 - 7) {
        w += (a + i) * (n - a - i - 2);
    }
    Ok(int(w))
}

/// Evaluates a named mean-distance bound at `k` (or `alpha`).
pub fn bound_of(source: BoundSource, k: usize) -> Result<BoundValue, FormulaError> {
    let kk = k as i64;
    let half = ratio(1, 2);
    let value = match source {
        BoundSource::LeAdd | BoundSource::Diameter => {
            if k < 1 {
                return Err(out_of_range("k must be at least 1"));
            }
            int(kk) + half
        }
        BoundSource::LeFinal2 => {
            if k < 1 {
                return Err(out_of_range("k must be at least 1"));
            }
            int(kk) + half + ratio(4 * (kk - 1), kk * kk)
        }
        BoundSource::LeExtra => {
            if k < 4 {
                return Err(out_of_range(format!("LeExtra needs k >= 4, got {k}")));
            }
            int(kk) + half + ratio(1, 2 * (2 * kk - 5))
        }
        BoundSource::ThNew => {
            if k < 1 {
                return Err(out_of_range("alpha must be at least 1"));
            }
            int(kk + 1)
        }
        BoundSource::Th1 => {
            if k < 1 {
                return Err(out_of_range("alpha must be at least 1"));
            }
            if k <= 6 {
                int(kk + 1)
            } else {
                int(kk) + half + ratio(4 * (kk - 1), kk * kk)
            }
        }
        other => return Err(FormulaError::NotAMuBound(other)),
    };
    Ok(BoundValue { value, source })
}

/// `mu(H_{2k-2, n-2k+2}) - k`. For even `n` this is
/// `(-8k^3 + 36k^2 - 2(9n + 14)k + 3n^2 + 12n) / (6n(n-1))`; for odd `n`
/// the leaves cannot split evenly and the value is `(2k - 3) / (2n(n-1))`
/// lower.
pub fn dumbbell_gap(n: usize, k: usize) -> Result<Rational, FormulaError> {
    if k < 2 || n < 2 * k {
        return Err(out_of_range(format!("dumbbell_gap(n={n}, k={k})")));
    }
    let (nn, kk) = (big(n), big(k));
    let num = BigInt::from(-8) * &kk * &kk * &kk
        + BigInt::from(36) * &kk * &kk
        - BigInt::from(2) * (BigInt::from(9) * &nn + 14) * &kk
        + BigInt::from(3) * &nn * &nn
        + BigInt::from(12) * &nn;
    let num = if n % 2 == 1 { num - BigInt::from(3) * (BigInt::from(2) * &kk - 3) } else { num };
    Ok(Rational::new(num, BigInt::from(6) * &nn * (&nn - 1)))
}

/// Upper bound on `mu(T) - alpha` for trees in `T_{2alpha-1, n-2alpha+1}`:
/// `(-4a^3 + 12a^2 - (9n - 1)a + 3n^2 - 3) / (3n(n-1))`.
pub fn mu_gap_alpha(n: usize, alpha: usize) -> Result<Rational, FormulaError> {
    if alpha < 1 || n < 2 * alpha {
        return Err(out_of_range(format!("mu_gap_alpha(n={n}, alpha={alpha})")));
    }
    let (nn, a) = (big(n), big(alpha));
    let num = BigInt::from(-4) * &a * &a * &a + BigInt::from(12) * &a * &a
        - (BigInt::from(9) * &nn - 1) * &a
        + BigInt::from(3) * &nn * &nn
        - 3;
    Ok(Rational::new(num, BigInt::from(3) * &nn * (&nn - 1)))
}
