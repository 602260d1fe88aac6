//! Reference ideals and their published Betti tables over `GF(101)`.
//!
//! `I` and `J` share the f-vector `(6,8,4,0,0,0)` but have incomparable
//! graded Betti numbers, so that Hilbert function has no unique minimum.

use crate::complex::{FVector, SimplicialComplex, SquarefreeIdeal};
use crate::hochster::BettiDiagram;
use crate::vertex::VertexSet;

fn ideal(n: usize, gens: &[&[usize]]) -> SquarefreeIdeal {
    let sets = gens
        .iter()
        .map(|g| VertexSet::from_vertices(n, g.iter().copied()).expect("valid labels"));
    SquarefreeIdeal::new(n, sets).expect("valid ideal")
}

/// `(x1x2, x1x3, x2x3, x3x4, x3x5, x3x6, x4x5)`.
pub fn ideal_i() -> SquarefreeIdeal {
    ideal(6, &[&[1, 2], &[1, 3], &[2, 3], &[3, 4], &[3, 5], &[3, 6], &[4, 5]])
}

/// `(x1x2, x1x4, x2x3, x2x5, x3x4, x4x5, x4x6, x1x3x5x6)`.
pub fn ideal_j() -> SquarefreeIdeal {
    ideal(
        6,
        &[
            &[1, 2],
            &[1, 4],
            &[2, 3],
            &[2, 5],
            &[3, 4],
            &[4, 5],
            &[4, 6],
            &[1, 3, 5, 6],
        ],
    )
}

pub fn shared_fvector() -> FVector {
    FVector::new(vec![6, 8, 4, 0, 0, 0])
}

pub const TABLE_CHAR: u64 = 101;

/// Published diagram of `R/I`: row 1 is `7 12 10 5 1`, row 2 holds
/// `β_{2,4} = β_{3,5} = 1`.
pub fn table_i() -> BettiDiagram {
    BettiDiagram::from_entries(
        6,
        TABLE_CHAR,
        [
            (0, 0, 1),
            (1, 2, 7),
            (2, 3, 12),
            (3, 4, 10),
            (4, 5, 5),
            (5, 6, 1),
            (2, 4, 1),
            (3, 5, 1),
        ],
    )
    .expect("valid table")
}

/// Published diagram of `R/J`: row 1 is `7 12 8 2`, row 2 is zero, row 3 is
/// `1 2 1`.
pub fn table_j() -> BettiDiagram {
    BettiDiagram::from_entries(
        6,
        TABLE_CHAR,
        [
            (0, 0, 1),
            (1, 2, 7),
            (2, 3, 12),
            (3, 4, 8),
            (4, 5, 2),
            (1, 4, 1),
            (2, 5, 2),
            (3, 6, 1),
        ],
    )
    .expect("valid table")
}

pub const TOTALS_I: [u64; 6] = [1, 7, 13, 11, 5, 1];
pub const TOTALS_J: [u64; 5] = [1, 8, 14, 9, 2];
pub const DIAGONAL_SUMS: [i64; 7] = [1, 0, -7, 12, -9, 4, -1];

/// The four-vertex complex with edges `{1,4},{2,3},{2,4},{3,4}`, whose
/// Stanley–Reisner ideal is `(x1x2, x1x3, x2x3x4)`.
pub fn four_edge_complex() -> SimplicialComplex {
    let e = |a: usize, b: usize| VertexSet::singleton(a).insert(b);
    SimplicialComplex::from_facets(4, [e(1, 4), e(2, 3), e(2, 4), e(3, 4)]).expect("valid complex")
}

/// The four-vertex complex with triangle `{1,2,4}` and edge `{3,4}`,
/// f-vector `(4,4,1,0)`.
pub fn triangle_complex() -> SimplicialComplex {
    let t = VertexSet::singleton(1).insert(2).insert(4);
    let e = VertexSet::singleton(3).insert(4);
    SimplicialComplex::from_facets(4, [t, e]).expect("valid complex")
}
