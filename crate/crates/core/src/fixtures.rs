//! The two worked examples: a ternary cubic whose Jacobian has reduction
//! III* at 5 and I2 at 19, and a pair of quadrics whose Jacobian has
//! discriminant 185.

use num_bigint::BigInt;

use crate::arith::{ratio, rat};
use crate::equations::{GenusOneEquation, Transformation};

/// `y^2 + xy = x^3 - x^2 - 617x + 5916`.
pub fn e1() -> GenusOneEquation {
    GenusOneEquation::from_ints(1, &[1, -1, 0, -617, 5916]).unwrap()
}

/// `y^2 + xy + y = x^3 - 4x - 3`.
pub fn e2() -> GenusOneEquation {
    GenusOneEquation::from_ints(1, &[1, 0, 1, -4, -3]).unwrap()
}

/// A minimal ternary cubic whose Jacobian is `e1`.
pub fn phi3() -> GenusOneEquation {
    let co = [
        "21686353648850",
        "1010096983050575",
        "64131409475",
        "234081254700017",
        "9338329782950",
        "842219868972245",
        "120889031707155",
        "1340388284750",
        "4822691362750",
        "67198263238095",
    ];
    let co = co.iter().map(|s| rat_from_str(s)).collect();
    GenusOneEquation::new(3, co).unwrap()
}

fn rat_from_str(s: &str) -> crate::arith::BigRat {
    crate::arith::BigRat::from_integer(s.parse::<BigInt>().unwrap())
}

/// `Q1 = x1^2 - x1x3 - x2^2 + x2x4 + x3^2`,
/// `Q2 = x1x4 + x2^2 + x2x3 - x2x4 + x3^2 - x3x4`.
pub fn phi4() -> GenusOneEquation {
    GenusOneEquation::from_ints(
        4,
        &[1, 0, -1, 0, -1, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1, 1, -1, 1, -1, 0],
    )
    .unwrap()
}

/// `y^2 = -3x^4 + 2x^3 + 7x^2 - 2x - 3`.
pub fn quartic2() -> GenusOneEquation {
    GenusOneEquation::from_ints(2, &[0, 0, 0, -3, 2, 7, -2, -3]).unwrap()
}

/// The twelve transformations of `phi3` to the minimal models of its
/// Jacobian's 3-covering, as `[μ, diag(d1, d2, d3)]`.
pub const EXAMPLE1_LIST: [(i64, [i64; 3]); 12] = [
    (1, [1, 1, 1]),
    (5, [5, 1, 1]),
    (5, [1, 5, 1]),
    (25, [5, 5, 1]),
    (25, [5, 1, 5]),
    (25, [1, 25, 1]),
    (19, [1, 1, 19]),
    (95, [5, 1, 19]),
    (95, [1, 5, 19]),
    (475, [5, 5, 19]),
    (475, [5, 1, 95]),
    (475, [1, 25, 19]),
];

pub fn example1_transformations() -> Vec<Transformation> {
    EXAMPLE1_LIST
        .iter()
        .map(|&(den, d)| Transformation::deg3_diag(ratio(1, den), [rat(d[0]), rat(d[1]), rat(d[2])]))
        .collect()
}
