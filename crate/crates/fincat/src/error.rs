use thiserror::Error;

/// Errors raised by constructors and operations.
///
/// Law *failures* are never errors; they come back as [`crate::report::Report`]
/// values carrying witnesses. Errors are reserved for ill-typed or
/// out-of-guard inputs.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("cannot compose {f}: codomain has size {f_cod} but {g} expects domain of size {g_dom}")]
    ComposeMismatch {
        f: String,
        g: String,
        f_cod: usize,
        g_dom: usize,
    },

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),

    #[error("structural error in {context}: {message}")]
    Structural { context: String, message: String },

    #[error("the free category on a cyclic graph is infinite; supply max_path_len to enumerate hom-sets only")]
    InfiniteCategory,

    #[error("size limit exceeded in {context}: {needed} exceeds the guard of {limit}")]
    SizeLimit {
        context: String,
        needed: usize,
        limit: usize,
    },

    #[error("monoid table violates the {law} law at {witness}")]
    InvalidMonoid { law: String, witness: String },

    #[error("missing chosen product for objects ({0}, {1})")]
    MissingChosenProduct(String, String),

    #[error("instance `{0}` is not closed at finite carriers; no Kleisli category is materialized for it")]
    UnsupportedInstance(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn structural(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Structural {
            context: context.into(),
            message: message.into(),
        }
    }

    pub fn size_limit(context: impl Into<String>, needed: usize, limit: usize) -> Self {
        Error::SizeLimit {
            context: context.into(),
            needed,
            limit,
        }
    }
}
