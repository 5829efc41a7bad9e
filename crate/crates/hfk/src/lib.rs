//! Cube-of-resolutions chain complexes for knot Floer homology of braid
//! closures: braid compilation, resolved-graph combinatorics, exact
//! Groebner-based algebra, bigraded homology, and an Alexander
//! polynomial oracle for cross-checking.

pub mod braid;
pub mod error;
pub mod homology;
pub mod oracle;
pub mod poly;
pub mod resolution;

pub use braid::{BraidWord, LayeredBraidDiagram, MarkovMove};
pub use error::{BraidError, CubeError, PolyError};
pub use homology::{
    assemble_cube, compare_invariance, AlgebraPresentation, CubeComplex, EdgeMap, InvarianceReport,
    PoincareTable,
};
pub use oracle::{burau_alexander, IntLaurentPoly};
pub use poly::{FieldElem, GroebnerBasis, GroebnerConfig, MultiPoly};
pub use resolution::{Region, Relation, ResolvedGraph};
