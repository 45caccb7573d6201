//! Exact symbolic engine for Z2-graded noncommutative algebras carrying an
//! odd parameter `h` with `h² = 0`.
//!
//! The algebraic layer is generic over the coefficient type (any exact
//! [`Coefficient`]); the aliases below fix the usual choice, rational
//! functions in `q` over the rationals.

pub mod coeff;
pub mod element;
pub mod error;
pub mod expr;
pub mod generator;
pub mod poly;
pub mod ratfunc;
pub mod rewrite;
pub mod tensor;
pub mod word;

use num_rational::BigRational;

pub use coeff::Coefficient;
pub use element::{ElementParity, Element as GenericElement};
pub use error::{AlgebraError, RewriteError};
pub use generator::{GenId, Generator, GeneratorTable, Parity, SharedTable};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rewrite::{
    critical_pairs, invert_perturbed, localize, orient, Algebra, CriticalPairReport, Reducer,
    RewriteRule, RuleSet as GenericRuleSet, RuleSetBuilder as GenericRuleSetBuilder,
};
pub use tensor::{TensorAlgebra, TensorElement as GenericTensorElement};
pub use word::Word;

/// Rational numbers, the coefficient field of [`Scalar`].
pub type Rational = BigRational;
/// Rational functions in `q` with rational coefficients.
pub type Scalar = RatFunc<Rational>;
pub type QPoly = Poly<Rational>;

pub type Element = element::Element<Scalar>;
pub type RuleSet = rewrite::RuleSet<Scalar>;
pub type RuleSetBuilder = rewrite::RuleSetBuilder<Scalar>;
pub type TensorElement = tensor::TensorElement<Scalar>;
pub type CriticalPair = rewrite::CriticalPairReport<Scalar>;

/// Elements with plain rational coefficients (no `q`).
pub type RationalElement = element::Element<Rational>;
pub type RationalRuleSet = rewrite::RuleSet<Rational>;
