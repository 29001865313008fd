//! Exact computations with exponential maps (locally finite iterative higher
//! derivations) on finitely presented commutative algebras.
//!
//! The crate is generic over an exact [`Field`]; the aliases at the crate
//! root fix the common choices.

pub mod algebra;
pub mod conductor;
pub mod error;
pub mod expmap;
pub mod field;
pub mod fixtures;
pub mod groebner;
pub mod invariant;
mod linalg;
pub mod poly;
pub mod specialize;

pub use algebra::{tensor, tensor_names, AlgebraElement, AlgebraHom, PresentedAlgebra, TensorProduct};
pub use conductor::{ConductorResult, CurveSubalgebra};
pub use error::{Error, Result};
pub use expmap::{ak_upper_bound, DegreeValue, ExponentialMap, Side};
pub use field::{binomial, binomial_mod_p, Field, Fp, Rational};
pub use groebner::{buchberger, DivisionBasis, GroebnerBasis, GroebnerConfig};
pub use invariant::{minimal_positive_degree, rewrite_in_invariants, InvariantRewrite};
pub use poly::{Degree, Monomial, MonomialOrder, Polynomial, UniPoly};
pub use specialize::{find_good_point, push_expmap, sigma_hom, SpecializationPoint};

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;

pub type QPolynomial = Polynomial<Rational>;
