//! Algorithms for graphs with bounded semi-induced pattern indices.

pub mod bitset;
pub mod branching;
pub mod fpt;
pub mod generate;
pub mod graph;
pub mod gyarfas;
pub mod io;
pub mod oracles;
pub mod pattern;
pub mod reductions;
pub mod tiling;
pub mod witness;

pub use bitset::VertexSet;
pub use branching::BranchReport;
pub use fpt::{GammaFormula, GammaShape, HomogeneousKind, HomogeneousSet, KernelState};
pub use graph::{Graph, Induced, TwinPartition};
pub use gyarfas::{GyarfasOutcome, SubOutcome};
pub use oracles::{BudgetExceeded, ColorClassPartition};
pub use pattern::{IndexReport, IndexValue, PatternKind, PatternWitness};
pub use reductions::{DsReductionOutput, TilingReductionOutput};
pub use tiling::{GridTilingInstance, Selection};
pub use witness::{verify_witness, Witness};
