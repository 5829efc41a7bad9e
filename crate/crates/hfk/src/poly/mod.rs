//! Exact arithmetic: F2[t], its fraction field, sparse multivariate
//! polynomials in edge variables, and Groebner machinery.

pub mod f2poly;
pub mod field;
pub mod groebner;
pub mod monomial;
pub mod multipoly;

pub use f2poly::F2Poly;
pub use field::FieldElem;
pub use groebner::{buchberger, ideal_equal, GroebnerBasis, GroebnerConfig, HilbertSeries};
pub use monomial::Monomial;
pub use multipoly::MultiPoly;
