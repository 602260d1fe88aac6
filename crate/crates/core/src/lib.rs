//! Graded Betti numbers of squarefree monomial ideals and the extremal
//! structure of the Betti diagrams sharing a Hilbert function.
//!
//! A squarefree monomial ideal without linear terms is the Stanley–Reisner
//! ideal of a simplicial complex; this crate works with the complex. The
//! graded Betti numbers come from Hochster's formula, reducing everything to
//! ranks of boundary matrices over `GF(p)`.
//!
//! ```
//! use minbetti::{betti_via_hochster, SquarefreeIdeal, VertexSet};
//!
//! let g = |v: &[usize]| VertexSet::from_vertices(4, v.iter().copied()).unwrap();
//! let ideal = SquarefreeIdeal::new(4, [g(&[1, 2]), g(&[1, 3]), g(&[2, 3, 4])]).unwrap();
//! let betti = betti_via_hochster(&ideal.complex(), 101, None).unwrap();
//! assert_eq!(betti.total_betti().as_slice(), &[1, 3, 2]);
//! ```

pub mod complex;
pub mod coning;
pub mod error;
pub mod extremality;
pub mod golden;
pub mod hilbert_lex;
pub mod hochster;
pub mod homology;
pub mod io;
pub mod sample;
pub mod search;
pub mod vertex;

pub use complex::{complex_of_ideal, FVector, SimplicialComplex, SquarefreeIdeal};
pub use coning::{
    betti_of_zero_cone, cone_inf, cone_j, cone_seq, cone_tree, fvector_cone_j, fvector_cone_seq, ConeIndex, ConeTree,
};
pub use error::{Error, Result};
pub use extremality::{
    check_betti_family, check_diag_witness, check_sum_equals_abs_diag, check_tworow_unique_min, cycle_complex,
    path_complex, DiagWitness,
};
pub use hilbert_lex::{
    fvector_from_hilbert, hilbert_from_fvector, is_kk_valid, lex_generated_in_single_degree, squarefree_lex_complex,
    squarefree_lex_ideal, HilbertFunction,
};
pub use hochster::{betti_via_hochster, hilbert_series_check, BettiDiagram, BettiNumbers, DiagonalSums, DiagramOrder};
pub use homology::{boundary_matrix, reduced_homology, FieldMatrix, PrimeField, ReducedHomologyProfile};
pub use search::{build_poset, enumerate_complexes, BettiPoset, SearchConfig};
pub use vertex::VertexSet;
