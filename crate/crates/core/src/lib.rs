//! Exact computation and analysis of domination polynomials.
//!
//! The library has three layers:
//!
//! * exact combinatorics — [`graph`] (simple graphs and the surgeries used by
//!   deletion/contraction recurrences), [`poly`] (dense integer polynomials),
//!   [`domset`] (the brute-force domination oracle and recurrence checks);
//! * closed forms — [`families`] (friendship/flower/book/star/prism
//!   constructors and their exact evaluators), [`expsum`] (families of the
//!   shape `f_n = Σ α_i λ_i^n` and a first-order recurrence solver);
//! * numerics — [`roots`] (simultaneous-iteration root finding with
//!   extended-precision refinement), [`bkw`] (limit-of-roots classification
//!   and the book-graph limit curves).

pub mod bkw;
pub mod domset;
pub mod expsum;
pub mod families;
pub mod graph;
pub mod poly;
pub mod roots;

pub use graph::{Graph, VertexSet};
pub use num_complex::Complex64;
pub use poly::{Polynomial, RationalFunction};
