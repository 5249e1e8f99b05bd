use thiserror::Error;

/// Errors shared across the crate.
///
/// `Genericity` variants mean the input data sits on a wall (a chamber
/// cocharacter annihilating a root, or a slope whose rounding is ambiguous);
/// the computation is refused rather than silently perturbed.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("expressions use different variable registries")]
    RegistryMismatch,
    #[error("negative power of a non-monomial Laurent expression")]
    NegativePowerOfNonMonomial,
    #[error("half-integer exponent on a non-monomial substitution target")]
    HalfExponentOnNonMonomial,
    #[error("exponent denominator larger than 2: {0}")]
    ExponentDenominator(String),
    #[error("zero denominator in rational function")]
    ZeroDenominator,
    #[error("singular matrix (zero determinant)")]
    SingularMatrix,
    #[error("matrix shape mismatch: {0}")]
    MatrixShape(String),
    #[error("cocharacter lies on a root hyperplane: {0}")]
    NonGenericChamber(String),
    #[error("slope hits a wall: {0}")]
    SlopeWall(String),
    #[error("stability parameter not supported here: {0}")]
    UnsupportedTheta(String),
    #[error("torus action outside the supported class: {0}")]
    UnsupportedAction(String),
    #[error("fixed-component block shape mismatch: {0}")]
    BlockShapeMismatch(String),
    #[error("matrix entry retains residual gauge classes; only the symmetric expression form is available")]
    ResidualEntry,
    #[error("entry is not a Laurent polynomial")]
    NonPolynomialEntry,
    #[error("quiver is not of ADE Dynkin type: {0}")]
    NonDynkin(String),
    #[error("framing is not minuscule: {0}")]
    NonMinuscule(String),
    #[error("quiver has loops at node {0}")]
    LoopsPresent(usize),
    #[error("adjacency matrix is not symmetric")]
    AsymmetricAdjacency,
    #[error("division by zero Euler factor")]
    VanishingEulerFactor,
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
