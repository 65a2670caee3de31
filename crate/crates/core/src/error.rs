use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{vertex_count}")]
    VertexOutOfRange { u: usize, v: usize, vertex_count: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("coloring has {actual} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("coloring is empty")]
    EmptyColoring,

    #[error("vertex {vertex} has color {color}, outside the palette 0..{k}")]
    ColorOutOfPalette { vertex: usize, color: u32, k: u32 },

    #[error("palette size {k} is too small: {reason}")]
    Palette { k: u32, reason: &'static str },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Instance {
        path: PathBuf,
        #[source]
        source: Box<Error>,
    },

    #[error("refusing exact search on {vertex_count} vertices (limit {limit})")]
    TooLarge { vertex_count: usize, limit: usize },

    #[error("invalid parameters: {0}")]
    Params(String),

    #[error("reference color count must be at least 1")]
    ZeroReference,

    #[error("invalid manifest: {0}")]
    Manifest(String),

    #[error("internal invariant breach: {0}")]
    InvariantBreach(String),

    #[error(transparent)]
    Write(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
