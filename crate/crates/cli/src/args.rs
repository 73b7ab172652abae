//! Command-line grammar. Every argument struct is also the resolved
//! configuration embedded in machine-readable output.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "pseudocodes", version, about = "Sample, encode and verify pseudorandom linear codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a code from an ensemble and write its code file.
    Sample(SampleArgs),
    /// Encode a message with the generator of a code file.
    Encode(EncodeArgs),
    /// Compute the dual of a code file.
    Dual(DualArgs),
    /// Check a property of a code file.
    Check(CheckArgs),
    /// Estimate Pr[A ⊆ C] over an ensemble.
    Containment(ContainmentArgs),
    /// Estimate the expected number of contained matrices of a type.
    Similarity(SimilarityArgs),
    /// Compare randomness requirements across constructions.
    Audit(AuditArgs),
    /// Evaluate the q-ary entropy function or its inverse.
    Entropy(EntropyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ensemble {
    Pclp,
    Pcrcp,
    Wozencraft,
    Rlc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EnsembleArgs {
    #[arg(long, value_enum)]
    pub ensemble: Ensemble,
    #[arg(long)]
    pub q: u64,
    /// Block length; for wozencraft a multiple r·k of k.
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Locality (polynomial q-degree or degree bound); ignored by rlc.
    #[arg(long, default_value_t = 1)]
    pub ell: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OutputArgs {
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SampleArgs {
    #[command(flatten)]
    pub ensemble: EnsembleArgs,
    /// 64-bit seed in hex.
    #[arg(long, required_unless_present = "tape", conflicts_with = "tape")]
    pub seed: Option<String>,
    /// Explicit tape as a 0/1 string, consumed left to right.
    #[arg(long)]
    pub tape: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EncodeArgs {
    #[arg(long)]
    pub code: PathBuf,
    /// Message symbols (digits for q ≤ 10, else space-separated).
    #[arg(long)]
    pub message: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DualMethod {
    /// Nullspace of the generator.
    Elimination,
    /// Trace-dual construction for linearized-polynomial codes.
    Algebraic,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DualArgs {
    #[arg(long)]
    pub code: PathBuf,
    #[arg(long, value_enum, default_value_t = DualMethod::Elimination)]
    pub method: DualMethod,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Distance,
    ListDecoding,
    ListRecovery,
    Local,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Centers {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CheckArgs {
    #[arg(long)]
    pub code: PathBuf,
    #[arg(long, value_enum)]
    pub property: Property,
    /// Normalized radius as a fraction, e.g. 1/7.
    #[arg(long)]
    pub rho: Option<String>,
    /// List size bound (strict: fewer than L codewords).
    #[arg(long = "L", alias = "l")]
    pub l: Option<usize>,
    #[arg(long)]
    pub lambda: Option<usize>,
    /// JSON file of input-list tuples; exhaustive when absent.
    #[arg(long)]
    pub lists: Option<PathBuf>,
    /// τ file of forbidden types.
    #[arg(long)]
    pub tau: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Centers::Exhaustive)]
    pub centers: Centers,
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<String>,
    /// Enumeration cap.
    #[arg(long, default_value_t = 1 << 22)]
    pub budget: u128,
    #[arg(long)]
    pub parallel: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exhaustive,
    MonteCarlo,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EstimatorArgs {
    #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
    pub mode: Mode,
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<String>,
    #[arg(long)]
    pub parallel: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ContainmentArgs {
    #[command(flatten)]
    pub ensemble: EnsembleArgs,
    /// Matrix file: n rows of b symbols.
    #[arg(long)]
    pub matrix: PathBuf,
    /// Containment in the dual code.
    #[arg(long)]
    pub dual: bool,
    #[command(flatten)]
    pub estimator: EstimatorArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SimilarityArgs {
    #[command(flatten)]
    pub ensemble: EnsembleArgs,
    #[arg(long)]
    pub tau: PathBuf,
    #[arg(long, default_value_t = 1 << 22)]
    pub budget: u128,
    #[command(flatten)]
    pub estimator: EstimatorArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AuditFormat {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct AuditArgs {
    /// Seed for the live samples behind measured bits.
    #[arg(long)]
    pub seed: String,
    /// Parameter points "q,n,k,ell" separated by ';'; the worked examples when absent.
    #[arg(long)]
    pub points: Option<String>,
    #[arg(long, value_enum, default_value_t = AuditFormat::Table)]
    pub format: AuditFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EntropyArgs {
    #[arg(long)]
    pub q: u64,
    /// Argument in [0, 1].
    #[arg(long)]
    pub x: f64,
    /// Evaluate the inverse on [0, 1 - 1/q] instead.
    #[arg(long)]
    pub inverse: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}
