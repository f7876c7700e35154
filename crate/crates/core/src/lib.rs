//! Gröbner bases of boundary, cycle and homology modules of multifiltered
//! simplicial complexes, computed from the shifted boundary presentation.

pub mod algebra;
pub mod bench;
pub mod bifiltration;
pub mod filtration;
pub mod groebner;
pub mod homology;
pub mod presentation;
pub mod random;
