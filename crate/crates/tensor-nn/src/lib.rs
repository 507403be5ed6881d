//! Minimal dense neural-network core: reverse-mode gradients on a tape,
//! dense layers, a gated recurrent sequence encoder, and Adam.
//!
//! Everything is `f64` and CPU-only. Models implement [`Parameterized`] so
//! the optimizer and the gradient-check utilities can walk their parameter
//! blocks without knowing the architecture.

pub mod adam;
pub mod checkpoint;
pub mod dense;
pub mod gradcheck;
pub mod gru;
pub mod tape;

pub use adam::{AdamState, Parameterized};
pub use dense::{Activation, DenseNet, Layer, NetNodes};
pub use gru::RecurrentEncoder;
pub use tape::{NodeId, Tape};

/// Errors surfaced by this crate.
#[derive(Debug, thiserror::Error)]
pub enum NnError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("token id {id} outside vocabulary of size {vocab}")]
    TokenOutOfRange { id: usize, vocab: usize },
    #[error("checkpoint i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("checkpoint decode: {0}")]
    Decode(#[from] serde_json::Error),
}
