use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("unknown object: component {0}, member {1}")]
    UnknownObject(usize, usize),
    #[error("invalid functor: {0}")]
    InvalidFunctor(String),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("window too small: degree {required} needs max-card at least {required}, got {available}")]
    WindowTooSmall { required: usize, available: usize },
    #[error("unknown generator: {0}")]
    UnknownGenerator(String),
    #[error("ill-formed term at layer {layer}: {reason}")]
    IllFormedTerm { layer: usize, reason: String },
    #[error("size mismatch: shape has {shape} boxes, class has {class}")]
    SizeMismatch { shape: usize, class: usize },
    #[error("not a genuine character: {0}")]
    NotGenuineCharacter(String),
    #[error("size {size} exceeds the configured bound {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error("colour index {index} out of range 1..={max}")]
    ColourOutOfRange { index: usize, max: usize },
    #[error("class outside window: {0}")]
    OutsideWindow(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
