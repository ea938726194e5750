//! Published small-order tables of minimal and second minimal `eds` values
//! over unicyclic graphs with given order and matching number.
//!
//! Each cell carries the printed value, the printed extremal graph in family
//! notation, and an optional erratum holding the exhaustively computed value
//! when the print is known to be wrong.

use crate::families::{parse_family_spec, FamilySpec};
use crate::formulas::Rank;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableCell {
    pub rank: Rank,
    pub n: usize,
    pub m: usize,
    pub printed: i64,
    graph: &'static str,
    /// Ground truth when the printed value is a known misprint.
    pub erratum: Option<i64>,
}

impl TableCell {
    pub fn graph(&self) -> FamilySpec {
        parse_family_spec(self.graph).expect("fixture specs are valid")
    }

    pub fn graph_text(&self) -> &'static str {
        self.graph
    }
}

const fn cell(rank: Rank, n: usize, m: usize, printed: i64, graph: &'static str) -> TableCell {
    TableCell {
        rank,
        n,
        m,
        printed,
        graph,
        erratum: None,
    }
}

use Rank::{Minimum as R1, Second as R2};

pub const CELLS: &[TableCell] = &[
    cell(R1, 4, 2, 29, "U(4,2)"),
    TableCell {
        erratum: Some(56),
        ..cell(R1, 5, 2, 54, "U(5,2)")
    },
    cell(R1, 6, 2, 91, "U(6,2)"),
    cell(R1, 6, 3, 133, "U1(6,3)"),
    cell(R1, 7, 2, 134, "U(7,2)"),
    cell(R1, 7, 3, 206, "U1(7,3)"),
    cell(R1, 8, 2, 185, "U(8,2)"),
    cell(R1, 8, 3, 291, "U1(8,3)"),
    cell(R1, 8, 4, 373, "H(8,5;[1^1],[1^1],[1^1])"),
    cell(R1, 9, 2, 244, "U(9,2)"),
    cell(R1, 9, 3, 388, "U1(9,3)"),
    cell(R1, 9, 4, 484, "U(9,4)"),
    cell(R1, 10, 2, 311, "U(10,2)"),
    cell(R1, 10, 3, 496, "U(10,3)"),
    cell(R1, 10, 4, 603, "U(10,4)"),
    cell(R1, 10, 5, 672, "U(10,5)"),
    cell(R1, 11, 2, 386, "U(11,2)"),
    cell(R1, 11, 3, 613, "U(11,3)"),
    cell(R1, 11, 4, 734, "U(11,4)"),
    cell(R1, 11, 5, 812, "U(11,5)"),
    cell(R1, 12, 2, 469, "U(12,2)"),
    cell(R1, 12, 3, 742, "U(12,3)"),
    cell(R1, 12, 4, 877, "U(12,4)"),
    cell(R1, 12, 5, 964, "U(12,5)"),
    cell(R1, 12, 6, 1053, "U(12,6)"),
    cell(R2, 4, 2, 32, "C(4)"),
    cell(R2, 5, 2, 60, "C(5)"),
    cell(R2, 6, 2, 134, "U2star(6,2)"),
    cell(R2, 6, 3, 141, "Ustar(6,3)"),
    cell(R2, 7, 2, 201, "U2star(7,2)"),
    cell(R2, 7, 3, 214, "Ustar(7,3)"),
    cell(R2, 8, 2, 280, "U2star(8,2)"),
    cell(R2, 8, 3, 298, "U(8,3)"),
    cell(R2, 8, 4, 377, "U(8,4)"),
    cell(R2, 9, 2, 371, "U2star(9,2)"),
    cell(R2, 9, 3, 391, "U(9,3)"),
    cell(R2, 9, 4, 492, "H(9,5;[1^1],[1^2],[1^1])"),
    cell(R2, 10, 2, 474, "U2star(10,2)"),
    cell(R2, 10, 3, 497, "U1(10,3)"),
    cell(R2, 10, 4, 623, "H(10,5;[1^1],[1^3],[1^1])"),
    cell(R2, 10, 5, 711, "U1(10,5)"),
    cell(R2, 11, 2, 589, "U2star(11,2)"),
    cell(R2, 11, 3, 618, "U1(11,3)"),
    cell(R2, 11, 4, 766, "H(11,5;[1^1],[1^4],[1^1])"),
    cell(R2, 11, 5, 860, "U1(11,5)"),
    cell(R2, 12, 2, 716, "U2star(12,2)"),
    cell(R2, 12, 3, 751, "U1(12,3)"),
    cell(R2, 12, 4, 921, "H(12,5;[1^1],[1^5],[1^1])"),
    cell(R2, 12, 5, 1021, "U1(12,5)"),
    cell(R2, 12, 6, 1112, "U1(12,6)"),
    cell(R2, 13, 4, 1088, "H(13,5;[1^1],[1^6],[1^1])"),
    cell(R2, 14, 4, 1267, "H(14,5;[1^1],[1^7],[1^1])"),
    cell(R2, 15, 4, 1458, "H(15,5;[1^1],[1^8],[1^1])"),
    cell(R2, 16, 4, 1660, "U1(16,4)"),
];

pub fn lookup(n: usize, m: usize, rank: Rank) -> Option<&'static TableCell> {
    CELLS.iter().find(|c| c.n == n && c.m == m && c.rank == rank)
}

pub fn cells(rank: Rank) -> impl Iterator<Item = &'static TableCell> {
    CELLS.iter().filter(move |c| c.rank == rank)
}
