use thiserror::Error;

/// Everything that can go wrong in the algebraic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate q-derivative base")]
    DegenerateBase,
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at specialization point")]
    Pole,
    #[error("root-of-unity degeneracy: [{0}] vanishes at the specialization point")]
    RootOfUnity(u32),
    #[error("specialization point must be nonzero")]
    ZeroSpecialization,
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("elements belong to different algebras")]
    ContextMismatch,
    #[error("element is not homogeneous of degree {expected}")]
    NotHomogeneous { expected: i64 },
    #[error("p not q²-separable")]
    NotRegular,
    #[error("constant p has trivial integral space")]
    ConstantPolynomial,
    #[error("parameters are not star-compatible (need conj(alpha0) = alpha0 and conj(alpha-) = q*alpha+)")]
    NotStarCompatible,
    #[error("derivation parameters must be nonzero")]
    ZeroParameter,
    #[error("not in restricted calculus")]
    NotInRestrictedCalculus,
    #[error("spinor component has wrong degree: {0}")]
    SpinorDegree(String),
    #[error("one-form is not in the horizontal degree pattern: {0}")]
    CliffordDegree(String),
    #[error("real structure constraint nu^2 = {sign}q^3 conj(beta-)/beta+ violated")]
    RealStructureConstraint { sign: &'static str },
    #[error("sign of {0} is not constant on 0 < q < 1")]
    IndefiniteSign(String),
    #[error("constructed witness does not evaluate to its target: {0}")]
    WitnessMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
