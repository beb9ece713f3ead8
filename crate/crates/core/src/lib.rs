//! Monomials in powers of graph edge ideals, their saturations and the
//! associated primes of those powers, decided through matching numbers of
//! vertex-weighted graphs.
//!
//! ```
//! use edgeideal::{assoc, ExponentVector, SimpleGraph};
//!
//! // a triangle with a pendant path 3-4-5
//! let g = SimpleGraph::from_one_based(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]).unwrap();
//! let a = ExponentVector::new(vec![1, 1, 1, 0, 0]);
//! assert!(!edgeideal::saturation::in_power(&g, &a, 2));
//! assert!(assoc::depth_positive(&g, 2).unwrap());
//! let embedded: Vec<_> = assoc::ass_primes(&g, 2)
//!     .into_iter()
//!     .filter(|p| p.kind == assoc::PrimeKind::Embedded)
//!     .map(|p| p.vertices().to_one_based())
//!     .collect();
//! assert_eq!(embedded, vec![vec![1, 2, 3, 4]]);
//! ```

pub mod assoc;
pub mod census;
pub mod error;
pub mod exponent;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod saturation;

pub use error::{Error, Result};
pub use exponent::{ExponentVector, SignedExponentVector};
pub use graph::{Cover, SimpleGraph, VertexSet};
pub use matching::{Matching, WeightedGraph};
pub use oracle::MonomialIdeal;
