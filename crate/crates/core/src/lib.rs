//! Exact algebra for graded binomial and lattice ideals: integer lattices,
//! numerical semigroups, binomial Gröbner bases, Hilbert series, point sets
//! over prime fields and the regularity formulas that tie them together.

pub mod error;
pub mod ffvanish;
pub mod gb;
pub mod graph;
pub mod hilbert;
pub mod intlat;
pub mod invariants;
pub mod numsgp;
pub mod ring;

pub use error::{Error, Result};
pub use ffvanish::{PointSet, PrimeField, ProjectivePoint};
pub use gb::{BinomialIdeal, GroebnerBasis, PurePoly};
pub use graph::{BlockDecomposition, Graph};
pub use hilbert::{HilbertFunctionTable, HilbertSeries, UniPoly};
pub use intlat::{IntMatrix, Lattice, SmithForm};
pub use invariants::{CurveSpec, TorusSpec};
pub use numsgp::NumericalSemigroup;
pub use ring::{Binomial, ExponentVector, Grading, IntVector, MonomialOrder};
