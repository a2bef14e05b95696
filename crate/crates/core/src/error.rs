use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate name `{0}`")]
    DuplicateName(String),

    #[error("generator `{generator}` refers to undeclared object `{endpoint}`")]
    DanglingEndpoint { generator: String, endpoint: String },

    #[error("relation #{index} is not parallel: {lhs} vs {rhs}")]
    NonParallelRelation { index: usize, lhs: String, rhs: String },

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("path is not composable at position {position}: {path}")]
    NotComposable { path: String, position: usize },

    #[error("rewriting system is incomplete (rule budget {budget} exhausted)")]
    IncompleteSystem { budget: usize },

    #[error("hom({src}, {dst}) has more than {bound} normal forms")]
    NotFinite {
        src: String,
        dst: String,
        bound: usize,
        witness: Vec<String>,
    },

    #[error("question not decided: {0}")]
    NotDecided(String),

    #[error("search space of {size} candidates exceeds bound {bound}")]
    SearchSpaceTooLarge { size: u128, bound: u128 },

    #[error("chaotic category requires a nonempty object set")]
    EmptySet,

    #[error("cell attachments of mixed dimensions {0:?}")]
    MixedDimensions(Vec<usize>),

    #[error("invalid functor: {0}")]
    InvalidFunctor(String),

    #[error("invalid finite category: {0}")]
    InvalidCategory(String),

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("point set {0:?} is not an open of the space")]
    NotAnOpen(Vec<String>),

    #[error("space is not connected")]
    NotConnected,

    #[error("invalid presheaf: {0}")]
    InvalidPresheaf(String),

    #[error("invalid groupoid presentation: {0}")]
    InvalidGroupoidPresentation(String),

    #[error("certificate failed to replay: {0}")]
    CertificateRejected(String),

    #[error("malformed token `{0}`")]
    MalformedToken(String),
}
