use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// A single failed axiom or relation check, with the witnessing polynomial
/// printed in the owning algebra's variable names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// Setting `t = 0` in the image of a generator does not give the generator back.
    Counit { generator: String, witness: String },
    /// `phi_s(phi_t(g)) - phi_{s+t}(g)` is nonzero.
    Comultiplication { generator: String, witness: String },
    /// A relation of the algebra does not map to zero in `A[t]`.
    Relation { relation: String, witness: String },
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxiomViolation::Counit { generator, witness } => {
                write!(f, "counit axiom fails on {generator}: phi(g)|t=0 - g = {witness}")
            }
            AxiomViolation::Comultiplication { generator, witness } => write!(
                f,
                "comultiplication axiom fails on {generator}: phi_s(phi_t(g)) - phi_(s+t)(g) = {witness}"
            ),
            AxiomViolation::Relation { relation, witness } => {
                write!(f, "relation {relation} is not preserved: image = {witness}")
            }
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable name `{0}` is reserved for deformation parameters")]
    ReservedVariable(String),
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("the relations generate the unit ideal (zero algebra)")]
    ZeroAlgebra,
    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: &'static str, limit: usize },
    #[error("expected {expected} generator images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("homomorphism is not well defined: relation {relation} maps to {image}")]
    NotWellDefined { relation: String, image: String },
    #[error("not an exponential map: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    NotExponential(Vec<AxiomViolation>),
    #[error("operation requires characteristic 0, field has characteristic {0}")]
    UnsupportedCharacteristic(u64),
    #[error("derivation is not locally nilpotent within bound {bound}: D^{bound}({generator}) != 0")]
    NotLocallyNilpotent { generator: String, bound: usize },
    #[error("derivation is not well defined: relation {relation} maps to {image}")]
    DerivationNotWellDefined { relation: String, image: String },
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("map acts trivially on the candidate pool")]
    TrivialOnPool,
    #[error("pool minimum not global: phi-degree {degree} is not divisible by {n}")]
    PoolMinimumNotGlobal { degree: u32, n: u32 },
    #[error("invariant rewrite failed: {0}")]
    RewriteFailed(String),
    #[error("no fraction y = g/h found within degree bound {bound}")]
    FractionNotFound { bound: usize },
    #[error("conductor certificate failed: y^{m}*h^(n-1) not found in the subalgebra at bound {bound}")]
    CertificateFailure { m: usize, bound: usize },
    #[error("field too small: no point avoids the given polynomials")]
    FieldTooSmall,
    #[error("specialization at algebraic parameters needs root picking, which is not supported")]
    RootPickingUnsupported,
    #[error("values are not on the variety: relation {relation} evaluates to {value}")]
    NotOnVariety { relation: String, value: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
