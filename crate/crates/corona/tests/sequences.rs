//! Frozen leading terms of the two corona-count sequences (OEIS A380346
//! for hexagons, A380416 for diamonds), checked against all three methods.
//! The fixtures live here so the suite needs no network access.

use num_bigint::BigUint;

use corona::bruteforce::enumerate_count_only;
use corona::closedform::{diamond_counts, diamond_gf_series, hexagon_counts, hexagon_gf_series};
use corona::lattice::{build_region, Shape};
use corona::transfer;

/// Hexagon totals H(0), H(1), ... (A380346).
const HEXAGON_TOTALS: [u64; 11] = [
    18, 198, 1298, 5778, 19602, 54758, 132498, 287298, 571538, 1060902, 1860498,
];

/// Diamond totals D(0), D(1), ... (A380416).
const DIAMOND_TOTALS: [u64; 11] = [
    18, 83, 258, 627, 1298, 2403, 4098, 6563, 10002, 14643, 20738,
];

#[test]
fn closed_form_reproduces_the_sequences() {
    for (n, &expected) in HEXAGON_TOTALS.iter().enumerate() {
        assert_eq!(hexagon_counts(n as u64).total, BigUint::from(expected));
    }
    for (n, &expected) in DIAMOND_TOTALS.iter().enumerate() {
        assert_eq!(diamond_counts(n as u64).total, BigUint::from(expected));
    }
}

#[test]
fn generating_functions_reproduce_the_sequences() {
    let hex = hexagon_gf_series(HEXAGON_TOTALS.len());
    let dia = diamond_gf_series(DIAMOND_TOTALS.len());
    for (n, &expected) in HEXAGON_TOTALS.iter().enumerate() {
        assert_eq!(hex[n], BigUint::from(expected), "hexagon n={n}");
    }
    for (n, &expected) in DIAMOND_TOTALS.iter().enumerate() {
        assert_eq!(dia[n], BigUint::from(expected), "diamond n={n}");
    }
}

#[test]
fn transfer_traces_reproduce_the_sequences() {
    for n in 1..HEXAGON_TOTALS.len() as u32 {
        let total = transfer::hexagon_trace(n).unwrap().coeff_sum();
        assert_eq!(total, HEXAGON_TOTALS[n as usize].into(), "hexagon n={n}");
    }
    for n in 1..DIAMOND_TOTALS.len() as u32 {
        let total = transfer::diamond_trace(n).unwrap().coeff_sum();
        assert_eq!(total, DIAMOND_TOTALS[n as usize].into(), "diamond n={n}");
    }
}

#[test]
fn brute_force_reproduces_the_leading_terms() {
    for n in 1..=3u32 {
        let hist = enumerate_count_only(&build_region(Shape::Hexagon(n)).unwrap());
        assert_eq!(
            hist.total(),
            &BigUint::from(HEXAGON_TOTALS[n as usize]),
            "hexagon n={n}"
        );
        let hist = enumerate_count_only(&build_region(Shape::Diamond(n)).unwrap());
        assert_eq!(
            hist.total(),
            &BigUint::from(DIAMOND_TOTALS[n as usize]),
            "diamond n={n}"
        );
    }
}
