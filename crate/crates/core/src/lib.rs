//! Exact Frobenius numbers for three or more coin values, exact
//! Dedekind–Rademacher and Fourier–Dedekind sums, and upper bounds for
//! `g(a, b, c)` built from lower bounds on those sums.
//!
//! Modules, bottom up:
//!
//! - [`arith`]: exact rationals, modular inverses, sawtooth and Bernoulli functions
//! - [`rounding`]: directed rational-to-float conversions and square roots
//! - [`dedekind`]: `S(a,b;x,y)`, its reciprocity law, and `σ_t(a,b;c)`
//! - [`partition`]: the restricted partition function `p_{a,b,c}(n)`
//! - [`frobenius`]: exact `g` via residue-class shortest paths, plus reductions
//! - [`bounds`]: classical bounds and the σ-based upper bound
//! - [`experiments`]: seeded random-triple studies and their CSV format
//!
//! With the default `parallel` feature, experiment records are computed on
//! the rayon thread pool.

pub mod arith;
pub mod bounds;
pub mod dedekind;
pub mod error;
pub mod experiments;
pub mod frobenius;
pub mod partition;
pub mod rounding;

pub use arith::Rational;
pub use bounds::{
    BoundCase, BoundOptions, BoundReport, CauchySchwarzGate, Combine, NewUpperBound,
    SigmaLowerBound,
};
pub use dedekind::{RademacherArgs, SigmaArgs};
pub use error::{Error, Result};
pub use experiments::{ExperimentConfig, ExperimentRecord, Execution, SummaryStats};
pub use frobenius::{PartList, Triple};
pub use partition::PartitionInstance;
