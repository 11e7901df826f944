use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("curve has {n} points, a closed curve needs at least 3")]
    TooFewPoints { n: usize },
    #[error("points {index} and {next} are not 8-adjacent grid neighbours")]
    NonAdjacent { index: usize, next: usize },
    #[error("point {index} is not on the integer grid")]
    NotOnGrid { index: usize },
    #[error("arc from {from} to {to} wraps around an open curve")]
    OpenCurveWrap { from: usize, to: usize },
    #[error("operation requires a closed curve")]
    OpenCurve,
    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid arc: endpoints must differ")]
    EmptyArc,
    #[error("chord endpoints coincide")]
    DegenerateChord,
    #[error("invalid dominant point set: {0}")]
    InvalidDominantSet(String),
    #[error("target below minimum polygon size 3 (got {m})")]
    TargetTooSmall { m: usize },
    #[error("target {m} exceeds the {available} initial dominant points")]
    TargetTooLarge { m: usize, available: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("image: {0}")]
    Image(String),
    #[error("image has no foreground pixels")]
    EmptyImage,
    #[error("largest component has {pixels} pixel(s); no closed boundary")]
    DegenerateComponent { pixels: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
