//! Square-free monomial ideals and their two simplicial complexes.
//!
//! An ideal `I` generated by square-free monomials corresponds to a facet
//! complex (the generator supports are the facets) and to a non-face complex
//! (the faces are the monomials outside `I`; its facets are the complements
//! of the minimal vertex covers of the generators). This crate builds both
//! directions of both correspondences, computes the invariants that drive
//! them (f-vectors, dimension, support, degree, height, unmixedness), decides
//! whether an ideal is an f-ideal (both complexes share one f-vector), and
//! checks the three-condition characterization of degree-2 f-ideals by
//! exhaustive enumeration at small ambient sizes.
//!
//! Everything is combinatorial: monomials are vertex subsets, there are no
//! coefficients and no field.
//!
//! ```
//! use fideal::parse_ideal;
//!
//! let ideal = parse_ideal("n=4; x1*x2, x2*x3, x3*x4").unwrap();
//! let report = ideal.theorem_classify();
//! assert!(report.f_ideal);
//! assert_eq!(report.f_facet.counts(), &[4, 3]);
//! assert_eq!(report.f_nonface.counts(), &[4, 3]);
//! ```

pub mod census;
pub mod complex;
pub mod covers;
pub mod error;
pub mod ideal;
pub mod parse;
pub mod subset;
pub mod theorem;

pub use census::{
    enumerate_pure, run_census, run_census_to, write_catalog, CensusMode, CensusParams, CensusRow,
    PureIdeals, Sampling, EXHAUSTIVE_POOL_LIMIT,
};
pub use complex::{FVector, SimplicialComplex};
pub use covers::PrimeDecomposition;
pub use error::Error;
pub use ideal::{minimalize, Ideal, IdealStats, DEFAULT_AMBIENT_LIMIT, MAX_AMBIENT};
pub use parse::{parse_ideal, parse_ideal_with_limit, read_ideal, read_ideal_with_limit};
pub use subset::VertexSubset;
pub use theorem::{binomial, FVectorPair, TheoremReport};
