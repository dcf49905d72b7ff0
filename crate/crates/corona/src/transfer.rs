//! Weighted adjacency (transfer) matrices for corona counting.
//!
//! A corona decomposes into corner configurations joined by edge strips, and
//! compatible configurations form a walk around the region. Each matrix entry
//! is a monomial `c * x^e`: `e` is the number of lozenges used by the target
//! corner state plus the connecting edge state, and `c` counts the edge
//! states realizing that tally (the interior edge states come in `n - 1`
//! interchangeable copies; the two boundary edge states are unique). The
//! trace of the matrix product around all corners is the counting
//! polynomial: the coefficient of `x^k` is the number of coronas with
//! exactly `k` lozenges.
//!
//! State orderings are fixed for deterministic output:
//!
//! * 120-degree corners (hexagon corners, diamond wide corners in the `T`
//!   role): five states `A, B, C, D, E` with lozenge tallies 3, 3, 4, 2, 3,
//!   except the diamond wide corner is indexed `U, V, W, X, Y` with tallies
//!   2, 3, 3, 3, 4.
//! * 60-degree corners (diamond sharp corners): eight states
//!   `A, B, C, D, E, F, I, J` (historical labels, `G`/`H` unused) with
//!   tallies 3, 3, 4, 3, 4, 4, 4, 5.

use thiserror::Error;

use crate::polyalg::{PolyMatrix, Polynomial};

/// Row/column labels of the 5x5 hexagon corner matrix.
pub const HEXAGON_CORNER_STATES: [char; 5] = ['A', 'B', 'C', 'D', 'E'];
/// Row labels of the 8x5 diamond matrix (sharp, 60-degree corner).
pub const DIAMOND_SHARP_CORNER_STATES: [char; 8] = ['A', 'B', 'C', 'D', 'E', 'F', 'I', 'J'];
/// Row labels of the 5x8 diamond matrix (wide, 120-degree corner).
pub const DIAMOND_WIDE_CORNER_STATES: [char; 5] = ['U', 'V', 'W', 'X', 'Y'];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransferError {
    #[error("side length must be at least 1, got {0}; the *_algebraic constructors accept 0 as a formal extension")]
    SideLengthTooSmall(u32),
}

fn check(n: u32) -> Result<u32, TransferError> {
    if n < 1 {
        Err(TransferError::SideLengthTooSmall(n))
    } else {
        Ok(n)
    }
}

fn mono(coeff: i64, exp: i64) -> Polynomial {
    debug_assert!(exp >= 0);
    Polynomial::monomial(coeff, exp as u64)
}

/// The 5x5 corner-to-corner matrix of a hexagon with side length `n >= 1`.
///
/// Rows index the states at one corner, columns the states at the next
/// corner counterclockwise, both in `A..E` order.
pub fn hexagon_matrix(n: u32) -> Result<PolyMatrix, TransferError> {
    Ok(hexagon_matrix_algebraic(check(n)?))
}

/// Like [`hexagon_matrix`] but also defined at `n = 0`, where the entries
/// are evaluated formally (the interior-edge multiplicity `n - 1` becomes
/// `-1`, so the result is not a combinatorial count).
pub fn hexagon_matrix_algebraic(n: u32) -> PolyMatrix {
    let n = i64::from(n);
    // Column order A, B, C, D, E. Exponents are simplified corner+edge
    // tallies: n+1 = 3+(n-2), n+2 = 3+(n-1) = 4+(n-2), n = 2+(n-2).
    let abc = vec![
        mono(0, 0),
        mono(1, n + 1),
        mono(0, 0),
        mono(1, n),
        mono(0, 0),
    ];
    let de = vec![
        mono(1, n + 1),
        mono(n - 1, n + 2),
        mono(1, n + 2),
        mono(n - 1, n + 1),
        mono(1, n + 1),
    ];
    PolyMatrix::from_rows(vec![abc.clone(), abc.clone(), abc, de.clone(), de])
}

/// The pair of diamond matrices for side length `n >= 1`: the 8x5 matrix
/// maps sharp-corner states (rows `A..J`) to wide-corner states (columns
/// `U..Y`); the 5x8 matrix maps wide-corner states back to sharp-corner
/// states.
pub fn diamond_matrices(n: u32) -> Result<(PolyMatrix, PolyMatrix), TransferError> {
    check(n)?;
    Ok((
        diamond_sharp_to_wide_algebraic(n),
        diamond_wide_to_sharp_algebraic(n),
    ))
}

/// The 8x5 sharp-to-wide diamond matrix, defined formally for any `n >= 0`.
pub fn diamond_sharp_to_wide_algebraic(n: u32) -> PolyMatrix {
    let n = i64::from(n);
    // Column order U, V, W, X, Y (wide-corner tallies 2, 3, 3, 3, 4).
    let abc = vec![
        mono(n - 1, n + 1),
        mono(1, n + 1),
        mono(1, n + 1),
        mono(n - 1, n + 2),
        mono(1, n + 2),
    ];
    let defij = vec![
        mono(1, n),
        mono(0, 0),
        mono(0, 0),
        mono(1, n + 1),
        mono(0, 0),
    ];
    PolyMatrix::from_rows(vec![
        abc.clone(),
        abc.clone(),
        abc,
        defij.clone(),
        defij.clone(),
        defij.clone(),
        defij.clone(),
        defij,
    ])
}

/// The 5x8 wide-to-sharp diamond matrix, defined formally for any `n >= 0`.
pub fn diamond_wide_to_sharp_algebraic(n: u32) -> PolyMatrix {
    let n = i64::from(n);
    // Column order A, B, C, D, E, F, I, J (sharp-corner tallies
    // 3, 3, 4, 3, 4, 4, 4, 5).
    let uv = vec![
        mono(n - 1, n + 2),
        mono(1, n + 1),
        mono(1, n + 2),
        mono(n - 1, n + 2),
        mono(1, n + 2),
        mono(1, n + 2),
        mono(n - 1, n + 3),
        mono(1, n + 3),
    ];
    let wxy = vec![
        mono(1, n + 1),
        mono(0, 0),
        mono(0, 0),
        mono(1, n + 1),
        mono(0, 0),
        mono(0, 0),
        mono(1, n + 2),
        mono(0, 0),
    ];
    PolyMatrix::from_rows(vec![uv.clone(), uv, wxy.clone(), wxy.clone(), wxy])
}

/// Corona-counting polynomial of the hexagon with side length `n >= 1`,
/// computed as the trace of the sixth power of the corner matrix.
pub fn hexagon_trace(n: u32) -> Result<Polynomial, TransferError> {
    check(n)?;
    Ok(hexagon_trace_algebraic(n))
}

/// Formal extension of [`hexagon_trace`] to `n = 0`.
pub fn hexagon_trace_algebraic(n: u32) -> Polynomial {
    let m = hexagon_matrix_algebraic(n);
    m.pow(6)
        .expect("5x5 matrix is square")
        .trace()
        .expect("5x5 matrix is square")
}

/// Corona-counting polynomial of the diamond with side length `n >= 1`,
/// computed as the trace of the squared two-corner product.
pub fn diamond_trace(n: u32) -> Result<Polynomial, TransferError> {
    check(n)?;
    Ok(diamond_trace_algebraic(n))
}

/// Formal extension of [`diamond_trace`] to `n = 0`.
pub fn diamond_trace_algebraic(n: u32) -> Polynomial {
    let sharp_to_wide = diamond_sharp_to_wide_algebraic(n);
    let wide_to_sharp = diamond_wide_to_sharp_algebraic(n);
    let around_two_corners = sharp_to_wide
        .mul(&wide_to_sharp)
        .expect("8x5 times 5x8 is well-formed");
    around_two_corners
        .pow(2)
        .expect("8x8 matrix is square")
        .trace()
        .expect("8x8 matrix is square")
}

/// Corona-counting polynomial of the semiregular hexagon with side lengths
/// `n1, n2, n3`, each at least 1: the trace of the squared product of the
/// three per-side corner matrices.
pub fn gen_hexagon_trace(n1: u32, n2: u32, n3: u32) -> Result<Polynomial, TransferError> {
    check(n1)?;
    check(n2)?;
    check(n3)?;
    Ok(gen_hexagon_trace_algebraic(n1, n2, n3))
}

/// Formal extension of [`gen_hexagon_trace`] to zero side lengths.
pub fn gen_hexagon_trace_algebraic(n1: u32, n2: u32, n3: u32) -> Polynomial {
    let product = hexagon_matrix_algebraic(n1)
        .mul(&hexagon_matrix_algebraic(n2))
        .and_then(|m| m.mul(&hexagon_matrix_algebraic(n3)))
        .expect("5x5 matrices compose");
    product
        .pow(2)
        .expect("5x5 matrix is square")
        .trace()
        .expect("5x5 matrix is square")
}

/// Corona-counting polynomial of the diamond with side lengths `n1, n2`,
/// each at least 1.
pub fn gen_diamond_trace(n1: u32, n2: u32) -> Result<Polynomial, TransferError> {
    check(n1)?;
    check(n2)?;
    Ok(gen_diamond_trace_algebraic(n1, n2))
}

/// Formal extension of [`gen_diamond_trace`] to zero side lengths.
pub fn gen_diamond_trace_algebraic(n1: u32, n2: u32) -> Polynomial {
    let around_two_corners = diamond_sharp_to_wide_algebraic(n1)
        .mul(&diamond_wide_to_sharp_algebraic(n2))
        .expect("8x5 times 5x8 is well-formed");
    around_two_corners
        .pow(2)
        .expect("8x8 matrix is square")
        .trace()
        .expect("8x8 matrix is square")
}
