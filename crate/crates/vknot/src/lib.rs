//! A workbench for virtual knots presented by Gauss diagrams: the
//! diagram calculus (moves, mirror-reverse, based connected sum), the
//! associated group with its peripheral meridian/longitude pair,
//! transforms between Wirtinger presentation shapes and their diagram
//! realizations, and computable invariants (bracket polynomial, Fox
//! colorings, finite-quotient homomorphism counts, Alexander ideals,
//! presentation-complex homology over exact integers).
//!
//! ```
//! use vknot::gauss::GaussDiagram;
//! use vknot::correspondence::{group_of_diagram, realize_presentation};
//!
//! let trefoil = GaussDiagram::parse("O1- U2- O3- U1- O2- U3-").unwrap();
//! let group = group_of_diagram(&trefoil);
//! assert!(group.is_realizable());
//! let again = realize_presentation(&group).unwrap();
//! assert_eq!(group_of_diagram(&again.diagram), group);
//! ```

pub mod correspondence;
pub mod gauss;
pub mod homology;
pub mod invariants;
pub mod moves;
pub mod sampling;
pub mod wirtinger;
pub mod words;

pub use correspondence::{
    connected_sum_presentation, enumerate_realizations, group_of_diagram,
    longitude_of_diagram, realize_presentation, verify_peripheral_commutation,
    CorrespondenceError, PeripheralData, Realization,
};
pub use gauss::{Chord, Endpoint, GaussDiagram, GaussError, Role};
pub use homology::{
    boundary_matrix, homology_of_presentation_complex, pontryagin_generator,
    AbelianGroupDescriptor, HomologyError, IntMatrix,
};
pub use moves::{apply_move, enumerate_moves, replay, simplify, Move, MoveError, MoveKind};
pub use wirtinger::{ConjugacyGraph, RelatorShape, WirtingerData, WirtingerError};
pub use words::{Presentation, PresentationError, Word};
