//! Multi-class expression classification: streaming TSV ingestion into a
//! labeled z-score matrix, five classifier families trained from scratch,
//! stratified evaluation, and importance-driven feature reduction.
//!
//! Everything that consumes randomness takes an explicit 64-bit seed and
//! derives independent ChaCha8 streams per unit of work (tree, fern, class,
//! ...), so results are bit-identical regardless of worker count.

pub mod analysis;
pub mod boosting;
pub mod cart;
pub mod dataset;
pub mod error;
pub mod ferns;
pub mod forest;
pub mod ingest;
pub mod linear;
pub mod model;
pub mod neighbors;
pub mod rng;
pub mod wire;

pub use analysis::{CascadeConfig, CascadeResult, EvaluationReport, ImportanceRanking};
pub use dataset::{LabeledMatrix, SplitIndices, SynthSpec};
pub use error::{AnalysisError, ContainerError, DatasetError, IngestError, ModelError};
pub use model::{ModelFamily, TrainedModel};
