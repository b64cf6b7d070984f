//! Combinatorics, geometry and characteristic-class calculus for stable
//! Kneser graphs `SG(n,k)`.
//!
//! The crate is organised along the objects it manipulates:
//!
//! * [`graphs`]: finite graphs, Kneser and stable Kneser graphs, the
//!   dihedral action on circular sets, exact colouring.
//! * [`matroid`]: the alternating oriented matroid `C^{m,k+1}` as sign
//!   vectors.
//! * [`complexes`]: Hom posets, neighbourhood and order complexes and
//!   their GF(2) homology.
//! * [`geometry`]: the orthogonal representation `W(n,k)`, the moment
//!   configurations and the Borsuk-graph experiments.
//! * [`charclasses`]: cohomology rings of cyclic and dihedral groups,
//!   Stiefel-Whitney classes and the test-graph classification.

pub mod charclasses;
pub mod complexes;
pub mod error;
pub mod geometry;
pub mod graphs;
pub mod matroid;

pub use error::{Error, Result};
