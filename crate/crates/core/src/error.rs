use thiserror::Error;

/// Errors surfaced by the lattice and root-datum computations.
///
/// Error text names the violated invariant using the field names of the
/// emitted report schema, so failures are traceable from the CLI output.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("not a Cartan matrix: offending entry ({row},{col}) = {value}")]
    NotCartan {
        row: usize,
        col: usize,
        value: String,
    },

    #[error("simple coroots are linearly dependent")]
    DependentCoroots,

    #[error("unknown catalog name `{0}`")]
    UnknownCatalog(String),

    #[error("invalid rank {rank} for catalog family {family}")]
    InvalidRank { family: String, rank: usize },

    #[error("descriptor has roots; ns_torus requires a torus")]
    RootsPresent,

    #[error("descriptor is not simply connected; pi1 = {pi1}")]
    NotSimplyConnected { pi1: String },

    #[error("invalid component coordinates: {0}")]
    InvalidComponent(String),

    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),

    #[error("component mismatch: {0}")]
    ComponentMismatch(String),

    #[error("factor {index} is not almost simple")]
    NotAlmostSimple { index: usize },

    #[error("weights do not sum to zero")]
    WeightsNotSumZero,

    #[error(
        "integral extension unexpectedly absent while building {context}; \
         the membership conditions defining ns_basis are violated"
    )]
    ExtensionMissing { context: &'static str },

    #[error(
        "ns_rank {ns_rank} disagrees with rank_formula {formula}; \
         the rank invariant of the report is violated"
    )]
    RankFormulaMismatch { ns_rank: usize, formula: usize },

    #[error("genus 0 forces a zero endomorphism ring")]
    GenusZeroNonzeroRing,

    #[error("involution matrix does not square to the identity")]
    NotInvolution,

    #[error("unit vector is not fixed by the involution")]
    UnitNotFixed,

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("oracle mismatch in {context}: {detail}")]
    OracleMismatch { context: &'static str, detail: String },

    #[error("descriptor parse error: {0}")]
    Descriptor(String),
}

pub type Result<T> = std::result::Result<T, Error>;
