//! Named resources available without an input file.

use crate::bit2bit::BitParams;
use crate::function::BitFunction::{self, Flip, Identity, Reset0, Reset1};
use crate::function::FiniteFunction;
use crate::{Distribution, Rational, Scalar};

/// Names of the built-in resources, in listing order.
pub const NAMES: &[&str] = &[
    "PB1",
    "PB2",
    "PB3",
    "PB4",
    "PB5",
    "PB6",
    "PB7",
    "PB8",
    "eq_F1",
    "eq_F2",
    "sector_shift",
    "sector_shift_f2",
    "pair1_a",
    "pair1_b",
    "pair2_a",
    "pair2_b",
    "pair3_a",
    "pair3_b",
];

fn r(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

fn bits(entries: &[(BitFunction, i64, i64)]) -> Distribution {
    Distribution::from_bits(entries.iter().map(|&(b, n, d)| (b, r(n, d))))
        .expect("built-in resource")
}

fn params(alpha: (i64, i64), beta: (i64, i64), gamma: (i64, i64)) -> Distribution {
    BitParams::new(
        Some(r(alpha.0, alpha.1)),
        r(beta.0, beta.1),
        Some(r(gamma.0, gamma.1)),
    )
    .expect("built-in parameters")
    .to_distribution()
}

fn ternary(table: &[usize]) -> FiniteFunction {
    FiniteFunction::new(3, table.to_vec()).expect("built-in table")
}

pub fn get(name: &str) -> Option<Distribution> {
    Some(match name {
        "PB1" | "eq_F1" => bits(&[(Identity, 1, 2), (Flip, 1, 2)]),
        "PB2" => bits(&[(Reset0, 1, 2), (Reset1, 1, 2)]),
        "PB3" => bits(&[(Identity, 2, 3), (Flip, 1, 3)]),
        "PB4" => bits(&[(Flip, 1, 3), (Reset0, 2, 3)]),
        "PB5" => bits(&[(Flip, 1, 3), (Reset0, 1, 3), (Reset1, 1, 3)]),
        "PB6" => bits(&[(Identity, 1, 6), (Flip, 1, 6), (Reset0, 2, 3)]),
        "PB7" => bits(&[
            (Identity, 1, 6),
            (Flip, 1, 6),
            (Reset0, 2, 9),
            (Reset1, 4, 9),
        ]),
        "PB8" => bits(&[
            (Identity, 1, 8),
            (Flip, 1, 8),
            (Reset0, 1, 6),
            (Reset1, 7, 12),
        ]),
        "eq_F2" => bits(&[(Identity, 1, 2), (Reset0, 1, 2)]),
        "sector_shift" => Distribution::new(
            3,
            3,
            [
                (FiniteFunction::identity(3), r(1, 3)),
                (ternary(&[0, 0, 1]), r(1, 3)),
                (ternary(&[0, 0, 2]), r(1, 3)),
            ],
        )
        .expect("built-in resource"),
        "sector_shift_f2" => Distribution::point(ternary(&[0, 0, 2])),
        "pair1_a" | "pair2_a" => params((0, 1), (1, 2), (3, 10)),
        "pair1_b" => params((0, 1), (1, 2), (7, 10)),
        "pair2_b" => params((1, 2), (1, 2), (-3, 10)),
        "pair3_a" => params((0, 1), (1, 2), (0, 1)),
        "pair3_b" => params((0, 1), (1, 4), (2, 3)),
        _ => return None,
    })
}

pub fn all() -> Vec<(String, Distribution)> {
    NAMES
        .iter()
        .map(|n| (n.to_string(), get(n).expect("listed name resolves")))
        .collect()
}
