//! The three worked examples: binomial coefficients, chessboard placements
//! `r_m(x, y)`, and binary strings counted by isolated elements.

use crate::algebra::{rational, Polynomial};
use crate::cauchy::{DifferenceEquation, InitialData};
use crate::riordan::RiordanSpec;

pub const EXAMPLE1_JSON: &str = include_str!("../specs/example1.json");
pub const EXAMPLE2_M2_JSON: &str = include_str!("../specs/example2_m2.json");
pub const EXAMPLE2_M3_JSON: &str = include_str!("../specs/example2_m3.json");
pub const EXAMPLE3_JSON: &str = include_str!("../specs/example3.json");
pub const EXAMPLE2_M2_CHESSBOARD_JSON: &str = include_str!("../specs/example2_m2_chessboard.json");
pub const EXAMPLE2_M3_CHESSBOARD_JSON: &str = include_str!("../specs/example2_m3_chessboard.json");

/// `(file name, contents)` for every bundled problem file.
pub const ALL: &[(&str, &str)] = &[
    ("example1.json", EXAMPLE1_JSON),
    ("example2_m2.json", EXAMPLE2_M2_JSON),
    ("example2_m3.json", EXAMPLE2_M3_JSON),
    ("example3.json", EXAMPLE3_JSON),
    ("example2_m2_chessboard.json", EXAMPLE2_M2_CHESSBOARD_JSON),
    ("example2_m3_chessboard.json", EXAMPLE2_M3_CHESSBOARD_JSON),
];

/// `d = h = 1/(z-1)`: `r(x, y) = C(x, y)`, generating function `1/(zw - w - 1)`.
pub fn binomial() -> RiordanSpec {
    RiordanSpec::with_d_equal_h(Polynomial::from_ints(&[-1, 1]), Polynomial::from_ints(&[1]))
}

/// `h = (z + m - 1)/(z^2 - z)`, `d = 1/(z-1)`: the array whose generating
/// function is `z / (z(z-1)w - z - (m-1))`.
pub fn chessboard(m: i64) -> RiordanSpec {
    RiordanSpec::new(
        Polynomial::from_ints(&[0, -1, 1]),
        Polynomial::from_ints(&[m - 1, 1]),
        Polynomial::from_ints(&[1]),
        Polynomial::from_ints(&[-1, 1]),
    )
}

/// `d = h = (z-1)/(z^2 - z - 1)`.
pub fn isolated_elements() -> RiordanSpec {
    RiordanSpec::with_d_equal_h(
        Polynomial::from_ints(&[-1, -1, 1]),
        Polynomial::from_ints(&[-1, 1]),
    )
}

/// The chessboard recurrence
/// `r(x+2,y+1) - r(x+1,y+1) - r(x+1,y) - (m-1) r(x,y) = 0` with the
/// placement-count initial data: `phi(x,0) = 1`, `phi(1,1) = m`, zero elsewhere.
pub fn chessboard_cauchy(m: i64, xmax: usize, ymax: usize) -> (DifferenceEquation, InitialData) {
    let spec = chessboard(m);
    let eq = DifferenceEquation::new(spec.p, spec.q);
    let mut init = InitialData::zeros(2, xmax, ymax);
    init.row0.iter_mut().for_each(|v| *v = rational::int(1));
    if ymax >= 1 {
        init.cols[1][0] = rational::int(m);
    }
    (eq, init)
}
