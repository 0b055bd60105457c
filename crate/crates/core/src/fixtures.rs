//! Small reference rectangles with known symmetry.

use crate::perm::Permutation;
use crate::plr::{Isotopism, PartialLatinRectangle};
use crate::text::parse_plr;

/// A 6x9 rectangle on 7 symbols with exactly one non-trivial autotopism.
pub const EQ1_TEXT: &str = "\
PLR 6 9 7
1 . 2 . . . 3 . .
2 . . 4 1 5 6 . 7
. 1 5 3 . 4 . . .
. 2 . 5 . 3 . 4 .
4 3 . . 5 . 1 . 2
. . . . 2 . . 1 3
";

/// The relabeled strong entry invariant classes of [`EQ1_TEXT`] (`0` = empty).
pub const EQ1_SEI_CLASSES: [[usize; 9]; 6] = [
    [1, 0, 2, 0, 0, 0, 1, 0, 0],
    [3, 0, 0, 4, 3, 4, 5, 0, 5],
    [0, 6, 7, 6, 0, 8, 0, 0, 0],
    [0, 6, 0, 8, 0, 6, 0, 7, 0],
    [9, 10, 0, 0, 9, 0, 10, 0, 10],
    [0, 0, 0, 0, 1, 0, 0, 2, 1],
];

/// An order-5 Latin square whose square invariants take three values.
pub const EQ2_TEXT: &str = "\
PLR 5 5 5
2 1 3 4 5
1 4 2 5 3
4 3 5 1 2
5 2 1 3 4
3 5 4 2 1
";

/// The relabeled square invariant classes of [`EQ2_TEXT`].
pub const EQ2_SQUARE_CLASSES: [[usize; 5]; 5] = [
    [1, 2, 1, 1, 2],
    [2, 1, 1, 1, 2],
    [1, 1, 1, 2, 2],
    [1, 1, 2, 1, 2],
    [2, 2, 2, 2, 3],
];

pub fn eq1() -> PartialLatinRectangle {
    parse_plr(EQ1_TEXT).expect("fixture parses")
}

pub fn eq2() -> PartialLatinRectangle {
    parse_plr(EQ2_TEXT).expect("fixture parses")
}

/// `((16)(34), (15)(38)(46)(79), (12)(45)(67))`.
pub fn eq1_autotopism() -> Isotopism {
    Isotopism::new(
        Permutation::from_cycles(6, &[&[1, 6], &[3, 4]]).unwrap(),
        Permutation::from_cycles(9, &[&[1, 5], &[3, 8], &[4, 6], &[7, 9]]).unwrap(),
        Permutation::from_cycles(7, &[&[1, 2], &[4, 5], &[6, 7]]).unwrap(),
    )
}
