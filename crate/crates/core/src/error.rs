use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("schema error at `{field}`: {message}")]
    Schema { field: String, message: String },

    #[error("rule {rule}: left-hand side has degree {lhs_degree} but right-hand monomial has degree {rhs_degree}")]
    DegreeMismatch {
        rule: usize,
        lhs_degree: u32,
        rhs_degree: u32,
    },

    #[error("rule {rule}: left-hand monomial {monomial} occurs on the right-hand side")]
    SelfReferentialRule { rule: usize, monomial: String },

    #[error("rewrite system is not confluent: {witness} reduces to both {first} and {second}")]
    NonConfluent {
        witness: String,
        first: String,
        second: String,
    },

    #[error("rewrite system does not terminate: {witness} can be rewritten back into itself")]
    NonTerminating { witness: String },

    #[error("fundamental monomial {0}")]
    BadFundamental(String),

    #[error("generator mismatch: expected {expected} generators, found {found}")]
    GeneratorMismatch { expected: usize, found: usize },

    #[error("class has degree {found}, expected {expected}")]
    WrongDegree { expected: u32, found: u32 },

    #[error("degree {0} is odd or outside the ring")]
    BadDegree(u32),

    #[error("non-integral coefficient {0} where an integer is required")]
    NonIntegral(String),

    #[error("real rank {real_rank} is incompatible with {line_bundles} line bundles: {reason}")]
    RankMismatch {
        real_rank: usize,
        line_bundles: usize,
        reason: String,
    },

    #[error("bound derivation failed: {0}")]
    Bound(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("expected {expected} Chern roots, found {found}")]
    RootCount { expected: usize, found: usize },

    #[error("genus polynomial is not divisible by (1+y)^{0}")]
    StableDivision(usize),

    #[error("non-integral genus coefficient {0} in manifold mode")]
    NonIntegralGenus(String),

    #[error("weight {0} is not dominant integral")]
    NonDominant(String),

    #[error("Weyl dimension formula produced a non-integral value {0}")]
    NonIntegralDimension(String),

    #[error("catalog for {factor} covers real dimension {covered}, need {needed}")]
    IncompleteCatalog {
        factor: String,
        covered: u64,
        needed: u64,
    },

    #[error("unknown built-in case `{0}`")]
    UnknownCase(String),

    #[error("section `{section}`: {source}")]
    Section {
        section: String,
        #[source]
        source: Box<Error>,
    },

    #[error("solution failed re-verification: {0}")]
    Verification(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn schema(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            field: field.into(),
            message: message.into(),
        }
    }

    pub(crate) fn in_section(self, section: &str) -> Self {
        Error::Section {
            section: section.to_string(),
            source: Box::new(self),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
