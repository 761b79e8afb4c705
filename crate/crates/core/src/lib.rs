//! Exact graded commutative algebra for lattice Batalin-Vilkovisky structures.
//!
//! The symbolic layer works over Gaussian rationals and is exact: fields,
//! ghosts, antighosts, multipliers and their antifields are generators of a
//! free graded commutative algebra, the antibracket pairs fields with
//! antifields, and the BV differential, its Koszul-Tate/BRST split and the
//! gauge-fixing transform are all computed as polynomial identities.
//!
//! The numeric layer linearizes the gauge-fixed action at a background,
//! builds retarded/advanced Green's functions by exact slice recursion on the
//! discrete field equations, and evaluates the Peierls bracket.

pub mod scalar;
pub mod grading;
pub mod generator;
pub mod monomial;
pub mod poly;
pub mod serialize;
pub mod lattice;
pub mod model;
pub mod modelfile;
pub mod antibracket;
pub mod bv;
pub mod linalg;
pub mod gauge;
pub mod numpoly;
pub mod peierls;
pub mod expr;
pub mod random;
pub mod report;

pub use antibracket::{antibracket, BracketAdjoint, ConjugatePairing};
pub use bv::{BVDifferential, NilpotencyReport, TruncatedComplex};
pub use gauge::{GaugeFermion, GaugeFixedTheory};
pub use generator::{Generator, GeneratorKind};
pub use grading::{Grading, Parity};
pub use lattice::{Direction, DiscreteDerivative, Lattice, Scheme};
pub use model::{ModelKind, ModelSpec, StructureConstants};
pub use monomial::Monomial;
pub use numpoly::NumPoly;
pub use peierls::{Background, GreensPair, LinearizedOperator};
pub use poly::{GradedPoly, GradingOf};
pub use scalar::{Rational, Scalar};
