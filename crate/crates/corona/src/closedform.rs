//! Closed-form corona counts and the series expansions of their rational
//! generating functions, all in exact integer arithmetic.
//!
//! Side length 0 is accepted here as a purely algebraic extension (the
//! formulas are polynomials in the side lengths); the geometric modules
//! start at side length 1.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::polyalg::Polynomial;

/// The per-size breakdown of a corona count: exactly four consecutive
/// lozenge counts can occur, and `total` is the sum over all four.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountBreakdown {
    /// The four lozenge counts that occur, in increasing order.
    pub sizes: [u64; 4],
    /// Number of coronas using `sizes[i]` lozenges.
    pub parts: [BigUint; 4],
    /// Sum of `parts`.
    pub total: BigUint,
}

impl CountBreakdown {
    fn new(first_size: u64, parts: [BigUint; 4]) -> Self {
        let total = parts.iter().sum();
        CountBreakdown {
            sizes: [first_size, first_size + 1, first_size + 2, first_size + 3],
            parts,
            total,
        }
    }

    /// The counting polynomial: coefficient of `x^k` is the number of
    /// coronas with `k` lozenges.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(
            self.sizes
                .iter()
                .zip(&self.parts)
                .map(|(&size, part)| (size, BigInt::from(part.clone()))),
        )
    }

    /// `(size, count)` pairs in increasing size order.
    pub fn pairs(&self) -> Vec<(u64, BigUint)> {
        self.sizes
            .iter()
            .zip(&self.parts)
            .map(|(&s, p)| (s, p.clone()))
            .collect()
    }
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

/// Corona counts of the regular hexagon with side length `n`:
/// `[2, 9(n+1)^2, 6(n+1)^4, (n+1)^6]` at sizes `6n+3 .. 6n+6`.
pub fn hexagon_counts(n: u64) -> CountBreakdown {
    let m = big(n + 1);
    CountBreakdown::new(
        6 * n + 3,
        [
            big(2),
            big(9) * m.pow(2),
            big(6) * m.pow(4),
            m.pow(6),
        ],
    )
}

/// Corona counts of the regular diamond with side length `n`:
/// `[2, (2n+3)^2, 2(n+1)^2(2n+3), (n+1)^4]` at sizes `4n+3 .. 4n+6`.
pub fn diamond_counts(n: u64) -> CountBreakdown {
    let m = big(n + 1);
    let odd = big(2 * n + 3);
    CountBreakdown::new(
        4 * n + 3,
        [
            big(2),
            odd.pow(2),
            big(2) * m.pow(2) * &odd,
            m.pow(4),
        ],
    )
}

/// Corona counts of the semiregular hexagon with side lengths
/// `n1, n2, n3` (opposite sides equal, all interior angles 120 degrees).
///
/// With `s = n1+n2+n3+3` and `q = (n1+1)(n2+1)(n3+1)` the parts are
/// `[2, s^2, 2qs, q^2]` at sizes `2(n1+n2+n3)+3 ..`, so the total is
/// `(q+s)^2 + 2`.
pub fn gen_hexagon_counts(n1: u64, n2: u64, n3: u64) -> CountBreakdown {
    let s = big(n1 + n2 + n3 + 3);
    let q = big(n1 + 1) * big(n2 + 1) * big(n3 + 1);
    CountBreakdown::new(
        2 * (n1 + n2 + n3) + 3,
        [big(2), s.pow(2), big(2) * &q * &s, q.pow(2)],
    )
}

/// Corona counts of the diamond with side lengths `n1, n2` (a 60/120-degree
/// parallelogram). With `s = n1+n2+3` and `q = (n1+1)(n2+1)` the parts are
/// `[2, s^2, 2qs, q^2]` at sizes `2(n1+n2)+3 ..`.
pub fn gen_diamond_counts(n1: u64, n2: u64) -> CountBreakdown {
    let s = big(n1 + n2 + 3);
    let q = big(n1 + 1) * big(n2 + 1);
    CountBreakdown::new(
        2 * (n1 + n2) + 3,
        [big(2), s.pow(2), big(2) * &q * &s, q.pow(2)],
    )
}

// Generating-function numerators, ascending powers. The hexagon series has
// denominator (1-x)^7, the diamond series (1-x)^5: the totals are degree-6
// and degree-4 polynomials in the side length.
const HEXAGON_GF_NUMERATOR: [i64; 7] = [18, 72, 290, 220, 114, 4, 2];
const DIAMOND_GF_NUMERATOR: [i64; 5] = [18, -7, 23, -13, 3];

/// First `count` coefficients of the hexagon-count generating function
/// `(2x^6+4x^5+114x^4+220x^3+290x^2+72x+18) / (1-x)^7`.
///
/// Coefficient `n` equals `hexagon_counts(n).total`.
pub fn hexagon_gf_series(count: usize) -> Vec<BigUint> {
    expand_rational(&HEXAGON_GF_NUMERATOR, 7, count)
}

/// First `count` coefficients of the diamond-count generating function
/// `(3x^4-13x^3+23x^2-7x+18) / (1-x)^5`.
///
/// Coefficient `n` equals `diamond_counts(n).total`.
pub fn diamond_gf_series(count: usize) -> Vec<BigUint> {
    expand_rational(&DIAMOND_GF_NUMERATOR, 5, count)
}

/// Expands `numerator / (1-x)^denom_power` by exact convolution with the
/// binomial series `1/(1-x)^d = sum_m C(m+d-1, d-1) x^m`.
fn expand_rational(numerator: &[i64], denom_power: u64, count: usize) -> Vec<BigUint> {
    // binomials[m] = C(m + d - 1, d - 1), built incrementally; every
    // division below is exact.
    let mut binomials = Vec::with_capacity(count);
    let mut current = BigUint::from(1u32);
    binomials.push(current.clone());
    for m in 1..count as u64 {
        current = current * big(m + denom_power - 1) / big(m);
        binomials.push(current.clone());
    }

    (0..count)
        .map(|t| {
            let mut acc = BigInt::zero();
            for (j, &num) in numerator.iter().enumerate() {
                if j > t {
                    break;
                }
                acc += BigInt::from(num) * BigInt::from(binomials[t - j].clone());
            }
            acc.to_biguint()
                .expect("series coefficients are corona counts and never negative")
        })
        .collect()
}
