//! Exact sparse univariate polynomial arithmetic over the integers, and
//! dense matrices of such polynomials.
//!
//! Throughout the crate the formal variable `x` tracks lozenge counts: the
//! coefficient of `x^k` in a counting polynomial is the number of
//! configurations that use exactly `k` lozenges.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

/// Errors from matrix operations with incompatible dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("dimension mismatch: cannot multiply a {left_rows}x{left_cols} matrix by a {right_rows}x{right_cols} matrix")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("trace requires a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
}

/// A sparse integer polynomial in one formal variable.
///
/// Canonical form: zero coefficients are never stored, so equality is plain
/// term-map equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<u64, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::monomial(1, 0)
    }

    /// The single term `coeff * x^exp` (or zero, if `coeff` is zero).
    pub fn monomial(coeff: impl Into<BigInt>, exp: u64) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Polynomial { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates and dropping anything that cancels to zero.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, BigInt)>,
    {
        let mut poly = Polynomial::zero();
        for (exp, coeff) in terms {
            poly.add_term(exp, coeff);
        }
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    /// The coefficient of `x^exp` (zero if the term is absent).
    pub fn coeff(&self, exp: u64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Sum of all coefficients, i.e. the evaluation at `x = 1`.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn add_term(&mut self, exp: u64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (&exp, coeff) in &other.terms {
            out.add_term(exp, coeff.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &other.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    /// Renders the polynomial, e.g. `2*x^9 + 36*x^10` (ascending) or
    /// `36*x^10 + 2*x^9` (descending).
    pub fn format_terms(&self, ascending: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        let terms: Vec<(u64, &BigInt)> = if ascending {
            self.terms().collect()
        } else {
            self.terms().rev().collect()
        };
        for (i, (exp, coeff)) in terms.iter().enumerate() {
            let negative = coeff.sign() == num_bigint::Sign::Minus;
            let magnitude = coeff.magnitude();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let one = magnitude == &1u32.into();
            match (*exp, one) {
                (0, _) => out.push_str(&magnitude.to_string()),
                (1, true) => out.push('x'),
                (1, false) => {
                    out.push_str(&magnitude.to_string());
                    out.push_str("*x");
                }
                (e, true) => out.push_str(&format!("x^{e}")),
                (e, false) => out.push_str(&format!("{magnitude}*x^{e}")),
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_terms(false))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

/// A dense row-major matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        PolyMatrix {
            rows,
            cols,
            entries: vec![Polynomial::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one());
        }
        m
    }

    /// Builds a matrix from rows, which must all have equal length.
    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Self {
        assert!(!rows.is_empty(), "matrix must have at least one row");
        let cols = rows[0].len();
        assert!(cols > 0, "matrix must have at least one column");
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "all rows must have the same length"
        );
        let nrows = rows.len();
        PolyMatrix {
            rows: nrows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Polynomial) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.entries[row * self.cols + col] = value;
    }

    /// Standard matrix product over the polynomial ring.
    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        if self.cols != other.rows {
            return Err(PolyError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = PolyMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero();
                for k in 0..self.cols {
                    let a = self.entry(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(other.entry(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// `self^exponent` by repeated multiplication; the matrices here are at
    /// most 8x8 and the exponents at most 6, so no squaring shortcut.
    pub fn pow(&self, exponent: u32) -> Result<PolyMatrix, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = PolyMatrix::identity(self.rows);
        for _ in 0..exponent {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Sum of the main diagonal entries.
    pub fn trace(&self) -> Result<Polynomial, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = Polynomial::zero();
        for i in 0..self.rows {
            out = out.add(self.entry(i, i));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(u64, i64)]) -> Polynomial {
        Polynomial::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn add_merges_like_terms() {
        let sum = poly(&[(3, 2)]).add(&poly(&[(3, 3)]));
        assert_eq!(sum, poly(&[(3, 5)]));
    }

    #[test]
    fn add_zero_is_identity() {
        let p = poly(&[(0, 7), (4, -3)]);
        assert_eq!(p.add(&Polynomial::zero()), p);
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let diff = poly(&[(2, 1)]).add(&poly(&[(2, -1)]));
        assert!(diff.is_zero());
        assert_eq!(diff.term_count(), 0);
    }

    #[test]
    fn mul_of_monomials() {
        let prod = poly(&[(3, 2)]).mul(&poly(&[(4, 3)]));
        assert_eq!(prod, poly(&[(7, 6)]));
    }

    #[test]
    fn mul_one_is_identity() {
        let p = poly(&[(0, 5), (2, -1), (9, 11)]);
        assert_eq!(p.mul(&Polynomial::one()), p);
    }

    #[test]
    fn binomial_sixth_power() {
        let x_plus_1 = poly(&[(0, 1), (1, 1)]);
        let mut pow = Polynomial::one();
        for _ in 0..6 {
            pow = pow.mul(&x_plus_1);
        }
        assert_eq!(pow.coeff(3), BigInt::from(20));
        assert_eq!(pow.coeff_sum(), BigInt::from(64));
    }

    #[test]
    fn display_descending_and_ascending() {
        let p = poly(&[(9, 2), (10, 36)]);
        assert_eq!(p.format_terms(true), "2*x^9 + 36*x^10");
        assert_eq!(p.to_string(), "36*x^10 + 2*x^9");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(poly(&[(0, -4), (1, 1)]).format_terms(true), "-4 + x");
    }

    #[test]
    fn identity_times_matrix() {
        let m = PolyMatrix::from_rows(vec![
            vec![poly(&[(1, 2)]), poly(&[(0, 3)])],
            vec![Polynomial::zero(), poly(&[(5, -1)])],
        ]);
        assert_eq!(PolyMatrix::identity(2).mul(&m).unwrap(), m);
        assert_eq!(m.mul(&PolyMatrix::identity(2)).unwrap(), m);
    }

    #[test]
    fn one_by_one_product() {
        let a = PolyMatrix::from_rows(vec![vec![poly(&[(2, 1)])]]);
        let b = PolyMatrix::from_rows(vec![vec![poly(&[(3, 1)])]]);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.entry(0, 0), &poly(&[(5, 1)]));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let a = PolyMatrix::zero(2, 3);
        let b = PolyMatrix::zero(2, 3);
        assert_eq!(
            a.mul(&b),
            Err(PolyError::DimensionMismatch {
                left_rows: 2,
                left_cols: 3,
                right_rows: 2,
                right_cols: 3,
            })
        );
    }

    #[test]
    fn trace_of_identity() {
        assert_eq!(
            PolyMatrix::identity(5).trace().unwrap(),
            Polynomial::monomial(5, 0)
        );
        assert_eq!(
            PolyMatrix::zero(2, 3).trace(),
            Err(PolyError::NonSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn pow_zero_is_identity() {
        let m = PolyMatrix::from_rows(vec![
            vec![poly(&[(1, 1)]), poly(&[(2, 1)])],
            vec![poly(&[(0, 1)]), poly(&[(1, -4)])],
        ]);
        assert_eq!(m.pow(0).unwrap(), PolyMatrix::identity(2));
        assert_eq!(m.pow(1).unwrap(), m);
        assert_eq!(m.pow(3).unwrap(), m.mul(&m).unwrap().mul(&m).unwrap());
    }

    // Independent triple-loop product accumulating into a plain Vec, so the
    // randomized checks below do not share code with PolyMatrix::mul.
    fn naive_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
        let mut cells = vec![Polynomial::zero(); a.rows() * b.cols()];
        for i in 0..a.rows() {
            for k in 0..a.cols() {
                for j in 0..b.cols() {
                    let term = a.entry(i, k).mul(b.entry(k, j));
                    cells[i * b.cols() + j] = cells[i * b.cols() + j].add(&term);
                }
            }
        }
        let rows = cells
            .chunks(b.cols())
            .map(|chunk| chunk.to_vec())
            .collect();
        PolyMatrix::from_rows(rows)
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((0u64..8, -40i64..40), 0..5).prop_map(|terms| {
            Polynomial::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c))))
        })
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = PolyMatrix> {
        proptest::collection::vec(arb_poly(), rows * cols).prop_map(move |entries| {
            let row_vecs = entries.chunks(cols).map(|c| c.to_vec()).collect();
            PolyMatrix::from_rows(row_vecs)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn degree_law(a in arb_poly(), b in arb_poly()) {
            if !a.is_zero() && !b.is_zero() {
                let prod = a.mul(&b);
                prop_assert_eq!(
                    prod.degree().unwrap(),
                    a.degree().unwrap() + b.degree().unwrap()
                );
            }
        }

        #[test]
        fn matrix_product_matches_naive_and_associates(
            a in arb_matrix(2, 3),
            b in arb_matrix(3, 2),
            c in arb_matrix(2, 2),
        ) {
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(&ab, &naive_mul(&a, &b));
            let ab_c = ab.mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
        }

        #[test]
        fn trace_commutes(a in arb_matrix(3, 2), b in arb_matrix(2, 3)) {
            let tr_ab = a.mul(&b).unwrap().trace().unwrap();
            let tr_ba = b.mul(&a).unwrap().trace().unwrap();
            prop_assert_eq!(tr_ab, tr_ba);
        }
    }
}
