//! Exact computations in finite Coxeter groups.
//!
//! Elements are permutations of a root system, built over exact arithmetic in
//! `Q(2cos(pi/m))`. On top of the element engine sit signed-permutation
//! models for the classical types, parabolic subgroups and coset
//! representatives, conjugacy classes with centralizers and normalizers,
//! centralizer complements, and permutation characters.

pub mod cache;
pub mod characters;
pub mod complement;
pub mod conjugacy;
pub mod ctype;
pub mod error;
pub mod group;
pub mod numfield;
pub mod parabolic;
pub mod poly;
pub mod roots;
pub mod scalar;
pub mod signed;
pub mod store;
pub mod subset;
pub mod system;

pub use characters::{BridgeReport, CharacterRow, CharacterValueTable, SolomonReport};
pub use complement::{
    Certificate, ComplementResult, ComplementStatus, ConstructiveCheck, SearchOutcome, SearchStats,
};
pub use conjugacy::{ClassTable, ConjClassRecord, QuotientCheck};
pub use ctype::{CoxeterType, Family};
pub use error::{CoxeterError, Result};
pub use group::Group;
pub use numfield::{AlgebraicNumber, NumberField};
pub use parabolic::CosetDecomposition;
pub use poly::{Monomial, SparsePolynomial};
pub use roots::RootSystem;
pub use scalar::Scalar;
pub use signed::{Cycle, DoublePartition, SignedPermutation};
pub use store::{ElemId, ElementStore};
pub use subset::SubsetJ;
pub use system::{CoxeterSystem, Element, ReductionOrder, DEFAULT_BUDGET};

/// Machine-word rationals; enough for every crystallographic root system and
/// the small-degree fields of `H3`, `H4` and `I2(m)`.
pub type Rational = num_rational::Rational64;
/// Arbitrary-precision rationals.
pub type BigRational = num_rational::BigRational;
/// Polynomials with arbitrary-precision rational coefficients.
pub type RationalPolynomial = SparsePolynomial<BigRational>;
