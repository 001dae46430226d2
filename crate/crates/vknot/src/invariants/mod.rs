//! Computable invariants: the Kauffman bracket state sum, Fox colorings,
//! finite-group homomorphism enumeration, Fox-calculus Alexander
//! matrices and elementary ideals, and realizable longitude-image sets.

pub mod bracket;
pub mod coloring;
pub mod finite_group;
pub mod fox;
pub mod homs;
pub mod lambda;
pub mod laurent;

pub use bracket::{bracket, normalized_bracket, BracketError};
pub use coloring::{coloring_matrix, count_colorings, count_colorings_diagram};
pub use finite_group::{FiniteGroup, GroupError};
pub use fox::{
    elementary_ideal_generators, fox_alexander_matrix, fox_derivative, ideal_equal_bounded,
    IdealComparison,
};
pub use homs::{enumerate_homs, hom_count_fingerprint, HomError, HomSearch, HomSet};
pub use lambda::{
    empirical_realizable_search, realizable_set, search_corpus, EmpiricalResult,
    EmpiricalSearch, RealizableSet,
};
pub use laurent::LaurentPoly;
