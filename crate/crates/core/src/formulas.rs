//! Closed forms for the maximum rectilinear crossing number of `d`-regular
//! graphs of order `n`, and the bookkeeping that picks the best known bounds.
//!
//! Everything is evaluated in `i128` with the division done last; a
//! non-divisible numerator is a transcription bug and panics.

use std::fmt;

use crate::error::{arg_err, Result};
use crate::graph::{feasible, require_feasible};

fn exact_div(num: i128, den: i128) -> u64 {
    assert!(num % den == 0, "{num} is not divisible by {den}");
    let q = num / den;
    assert!(q >= 0, "negative closed-form value {q}");
    q as u64
}

fn binom4(n: usize) -> u64 {
    let n = n as i128;
    exact_div(n * (n - 1) * (n - 2) * (n - 3), 24)
}

/// `n d (3nd - 2d^2 - 6d + 2) / 24`, with no parity restriction.
///
/// This is the edge-pair count minus half the least possible number of
/// determined non-crossing pairs, so it bounds the crossings of every
/// rectilinear drawing of every `d`-regular graph.
pub fn type_counting_bound(n: usize, d: usize) -> Result<u64> {
    require_feasible(n, d)?;
    let (n, d) = (n as i128, d as i128);
    Ok(exact_div(n * d * (3 * n * d - 2 * d * d - 6 * d + 2), 24))
}

/// The exact maximum for `n + d` odd: `n d (3nd - 2d^2 - 6d + 2) / 24`.
pub fn exact_odd(n: usize, d: usize) -> Result<u64> {
    feasible(n, d)?;
    if (n + d).is_multiple_of(2) {
        return arg_err(format!("exact value needs n + d odd, got n = {n}, d = {d}"));
    }
    type_counting_bound(n, d)
}

/// Crossings of the star-like drawing for `n`, `d` even, `k = (n - d) / 2`, `g = gcd(n, k)`.
///
/// `n d (3nd - 2d^2 - 6d - 1) / 24`, less `g (2d - 3) / 4` when `n / g` is odd.
pub fn lower_bound_even(n: usize, d: usize) -> Result<u64> {
    feasible(n, d)?;
    if n % 2 == 1 || d % 2 == 1 {
        return arg_err(format!(
            "even lower bound needs n and d even, got n = {n}, d = {d}"
        ));
    }
    let k = (n - d) / 2;
    let g = num_integer::gcd(n, k) as i128;
    let (ni, di) = (n as i128, d as i128);
    // scale everything to a denominator of 24
    let mut num = ni * di * (3 * ni * di - 2 * di * di - 6 * di - 1);
    if (ni / g) % 2 == 1 {
        num -= 6 * g * (2 * di - 3);
    }
    Ok(exact_div(num, 24))
}

/// Maximum crossings of the cycle `C_n`.
pub fn exact_cycle(n: usize) -> Result<u64> {
    if n < 3 {
        return arg_err(format!("cycle needs n >= 3, got {n}"));
    }
    let ni = n as i128;
    Ok(if n % 2 == 1 {
        exact_div(ni * (ni - 3), 2)
    } else {
        exact_div(ni * (ni - 4), 2) + 1
    })
}

/// Maximum over all 2-regular graphs of even order: `floor(n (2n - 7) / 4)`.
pub fn exact_r_n_2_even(n: usize) -> Result<u64> {
    if n < 4 || n % 2 == 1 {
        return arg_err(format!("needs even n >= 4, got {n}"));
    }
    let ni = n as i128;
    Ok((ni * (2 * ni - 7)).div_euclid(4) as u64)
}

/// `C(n, 4)`: every four points carry at most one crossing.
pub fn exact_complete(n: usize) -> Result<u64> {
    if n < 4 {
        return arg_err(format!("needs n >= 4, got {n}"));
    }
    Ok(binom4(n))
}

/// Maximum over `(n - 2)`-regular graphs of even order, also `C(n, 4)`.
pub fn exact_r_n_nminus2(n: usize) -> Result<u64> {
    if n < 4 || n % 2 == 1 {
        return arg_err(format!("needs even n >= 4, got {n}"));
    }
    Ok(binom4(n))
}

/// Number of non-adjacent edge pairs: `(nd/2)(nd/2 - 2d + 1) / 2`.
pub fn thrackle_upper(n: usize, d: usize) -> Result<u64> {
    require_feasible(n, d)?;
    let (n, d) = (n as i128, d as i128);
    Ok(exact_div(n * d * (3 * n * d - 12 * d + 6), 24))
}

/// Crossings lost by deleting the length-`k` diagonals once all shorter ones are gone.
pub fn removal_count(n: usize, k: usize) -> Result<u64> {
    if k < 1 || k > n / 2 {
        return arg_err(format!("k must lie in 1..={}, got {k}", n / 2));
    }
    let (n, k) = (n as i128, k as i128);
    Ok(exact_div(n * (k - 1) * (n - 2 * k), 1))
}

/// Least possible number of determined non-crossing pairs: `n d (d-1)(d-2) / 6`.
pub fn min_noncrossing_pairs(n: usize, d: usize) -> Result<u64> {
    require_feasible(n, d)?;
    let (n, d) = (n as i128, d as i128);
    Ok(exact_div(n * d * (d - 1) * (d - 2), 6))
}

/// `s(d-s-1)(d - 2(D-s+1)) - 2 sum_{i<s} i(d-i-1)` with `D = floor((d-1)/2)`.
pub fn c_function(s: usize, d: usize) -> Result<i64> {
    if d < 1 {
        return arg_err("degree must be positive");
    }
    let big_d = (d - 1) / 2;
    if s > big_d {
        return arg_err(format!("s must lie in 0..={big_d}, got {s}"));
    }
    let (s, d, big_d) = (s as i64, d as i64, big_d as i64);
    let tail: i64 = (1..s).map(|i| i * (d - i - 1)).sum();
    Ok(s * (d - s - 1) * (d - 2 * (big_d - s + 1)) - 2 * tail)
}

/// Where a bound in a [`BoundReport`] comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Generalized star construction meeting the type-counting upper bound (`n + d` odd).
    OddExact,
    /// Star-like construction for `n`, `d` even.
    StarLikeLower,
    /// Type-counting bound applied without the parity restriction.
    TypeCountingUpper,
    /// At most one crossing per four vertices.
    QuadrupleUpper,
    /// Exact value for 2-regular graphs of even order.
    TwoRegularEvenExact,
    /// Exact value for `(n-2)`-regular graphs of even order.
    CoDegreeTwoExact,
    /// The star-like construction is conjectured to be optimal.
    StarLikeSharpConjecture,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::OddExact => "odd-exact",
            Provenance::StarLikeLower => "star-like-lower",
            Provenance::TypeCountingUpper => "type-counting-upper",
            Provenance::QuadrupleUpper => "quadruple-upper",
            Provenance::TwoRegularEvenExact => "two-regular-exact",
            Provenance::CoDegreeTwoExact => "co-degree-two-exact",
            Provenance::StarLikeSharpConjecture => "star-like-sharp-conjecture",
        })
    }
}

/// Best known bounds on the maximum over all `d`-regular graphs of order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub d: usize,
    pub lower: u64,
    pub upper: u64,
    /// Proven: `lower == upper` is the true maximum.
    pub exact: bool,
    /// `lower` is conjectured (not proven) to be the true maximum.
    pub conjectured: bool,
    pub provenance: Vec<Provenance>,
}

impl BoundReport {
    /// The headline value: the exact maximum, or the best lower bound.
    pub fn value(&self) -> u64 {
        self.lower
    }

    /// `floor((d - 1) / 2)`, the largest endvertex type.
    pub fn max_type(&self) -> usize {
        (self.d - 1) / 2
    }
}

pub fn best_known(n: usize, d: usize) -> Result<BoundReport> {
    require_feasible(n, d)?;
    let exact = |value: u64, provenance: Vec<Provenance>| BoundReport {
        n,
        d,
        lower: value,
        upper: value,
        exact: true,
        conjectured: false,
        provenance,
    };
    if (n + d) % 2 == 1 {
        return Ok(exact(exact_odd(n, d)?, vec![Provenance::OddExact]));
    }
    if d == 2 {
        return Ok(exact(
            exact_r_n_2_even(n)?,
            vec![Provenance::StarLikeLower, Provenance::TwoRegularEvenExact],
        ));
    }
    if d == n - 2 {
        return Ok(exact(
            exact_r_n_nminus2(n)?,
            vec![Provenance::StarLikeLower, Provenance::CoDegreeTwoExact],
        ));
    }
    let lower = lower_bound_even(n, d)?;
    let counting = type_counting_bound(n, d)?;
    let quadruple = binom4(n);
    let mut provenance = vec![Provenance::StarLikeLower];
    let upper = if counting <= quadruple {
        provenance.push(Provenance::TypeCountingUpper);
        counting
    } else {
        provenance.push(Provenance::QuadrupleUpper);
        quadruple
    };
    provenance.push(Provenance::StarLikeSharpConjecture);
    Ok(BoundReport {
        n,
        d,
        lower,
        upper,
        exact: false,
        conjectured: true,
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_values() {
        assert_eq!(exact_odd(10, 7).unwrap(), 210);
        assert_eq!(exact_odd(9, 4).unwrap(), 81);
        assert_eq!(exact_odd(5, 2).unwrap(), 5);
        assert!(exact_odd(8, 4).is_err());
        assert!(exact_odd(5, 3).is_err());
    }

    #[test]
    fn even_values() {
        assert_eq!(lower_bound_even(8, 4).unwrap(), 52);
        assert_eq!(lower_bound_even(10, 4).unwrap(), 105);
        assert_eq!(lower_bound_even(6, 2).unwrap(), 7);
        assert_eq!(lower_bound_even(10, 6).unwrap(), 173);
        assert!(lower_bound_even(9, 4).is_err());
        assert!(lower_bound_even(10, 5).is_err());
    }

    #[test]
    fn classical_values() {
        assert_eq!(exact_cycle(5).unwrap(), 5);
        assert_eq!(exact_cycle(6).unwrap(), 7);
        assert_eq!(exact_cycle(7).unwrap(), 14);
        assert!(exact_cycle(2).is_err());
        assert_eq!(exact_r_n_2_even(6).unwrap(), 7);
        assert_eq!(exact_r_n_2_even(8).unwrap(), 18);
        assert_eq!(exact_r_n_2_even(10).unwrap(), 32);
        assert!(exact_r_n_2_even(7).is_err());
        assert_eq!(exact_complete(4).unwrap(), 1);
        assert_eq!(exact_complete(6).unwrap(), 15);
        assert_eq!(exact_complete(10).unwrap(), 210);
        assert_eq!(exact_r_n_nminus2(6).unwrap(), 15);
        assert_eq!(exact_r_n_nminus2(8).unwrap(), 70);
        assert_eq!(exact_r_n_nminus2(4).unwrap(), 1);
        assert!(exact_r_n_nminus2(7).is_err());
    }

    #[test]
    fn counting_quantities() {
        assert_eq!(thrackle_upper(5, 2).unwrap(), 5);
        assert_eq!(thrackle_upper(10, 7).unwrap(), 385);
        assert_eq!(thrackle_upper(4, 3).unwrap(), 3);
        assert!(thrackle_upper(5, 3).is_err());

        assert_eq!(removal_count(9, 1).unwrap(), 0);
        assert_eq!(removal_count(10, 2).unwrap(), 60);
        assert_eq!(removal_count(8, 3).unwrap(), 32);
        assert!(removal_count(8, 5).is_err());
        assert!(removal_count(8, 0).is_err());

        assert_eq!(min_noncrossing_pairs(7, 2).unwrap(), 0);
        assert_eq!(min_noncrossing_pairs(4, 3).unwrap(), 4);
        assert_eq!(min_noncrossing_pairs(10, 7).unwrap(), 350);
        assert!(min_noncrossing_pairs(7, 3).is_err());
    }

    #[test]
    fn c_function_values() {
        assert_eq!(c_function(0, 9).unwrap(), 0);
        assert_eq!(c_function(1, 4).unwrap(), 4);
        assert_eq!(c_function(2, 5).unwrap(), 6);
        assert!(c_function(2, 4).is_err());
    }

    #[test]
    fn best_known_dispatch() {
        let r = best_known(7, 4).unwrap();
        assert!(r.exact && !r.conjectured);
        assert_eq!((r.lower, r.upper), (35, 35));

        let r = best_known(8, 2).unwrap();
        assert!(r.exact);
        assert_eq!(r.lower, 18);

        let r = best_known(8, 6).unwrap();
        assert!(r.exact);
        assert_eq!(r.lower, 70);

        let r = best_known(8, 4).unwrap();
        assert!(!r.exact && r.conjectured);
        assert_eq!((r.lower, r.upper), (52, 56));
        assert!(r.provenance.contains(&Provenance::TypeCountingUpper));

        assert!(best_known(7, 3).is_err());
    }

    #[test]
    fn integrality_sweep() {
        for n in 3..=200usize {
            for d in 2..n {
                if (n * d) % 2 == 1 {
                    continue;
                }
                // every evaluator asserts divisibility internally
                thrackle_upper(n, d).unwrap();
                min_noncrossing_pairs(n, d).unwrap();
                type_counting_bound(n, d).unwrap();
                let r = best_known(n, d).unwrap();
                assert!(r.lower <= r.upper, "({n}, {d}): {r:?}");
                if (n + d) % 2 == 1 {
                    exact_odd(n, d).unwrap();
                } else if d <= n - 2 {
                    lower_bound_even(n, d).unwrap();
                }
            }
            exact_cycle(n).unwrap();
            for k in 1..=n / 2 {
                removal_count(n, k).unwrap();
            }
        }
    }

    #[test]
    fn specializations() {
        for n in (5..=201usize).step_by(2) {
            assert_eq!(exact_odd(n, 2).unwrap(), exact_cycle(n).unwrap(), "n = {n}");
        }
        for n in 4..=200usize {
            assert_eq!(
                exact_odd(n, n - 1).unwrap(),
                exact_complete(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn odd_value_is_thrackle_minus_half_floor() {
        for n in 3..=200usize {
            for d in 2..n {
                if (n + d) % 2 == 0 {
                    continue;
                }
                let lhs = exact_odd(n, d).unwrap();
                let m = min_noncrossing_pairs(n, d).unwrap();
                assert_eq!(2 * lhs, 2 * thrackle_upper(n, d).unwrap() - m, "({n}, {d})");
            }
        }
    }

    #[test]
    fn even_bound_below_odd_formula() {
        for n in (4..=200usize).step_by(2) {
            for d in (2..=n - 2).step_by(2) {
                assert!(
                    lower_bound_even(n, d).unwrap() < type_counting_bound(n, d).unwrap(),
                    "({n}, {d})"
                );
            }
        }
    }

    #[test]
    fn c_function_strictly_positive() {
        for d in 3..=60usize {
            for s in 1..=(d - 1) / 2 {
                let c = c_function(s, d).unwrap();
                assert!(c > 0, "C({s}, {d}) = {c}");
                assert!(c >= (s * (d - s - 1)) as i64, "C({s}, {d}) = {c}");
            }
        }
    }
}
