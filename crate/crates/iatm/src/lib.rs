//! Reproduction harness for the `iatm-core` solver: built-in benchmark
//! problems, error tables on fixed grids, comparison against published
//! reference values, and CSV output.

pub mod compare;
pub mod csv;
pub mod fixture;
pub mod problems;
pub mod table;

pub use compare::{compare_to_fixture, Alignment, CellVerdict, ComparisonReport};
pub use fixture::{fixture_for, FixtureRow, PaperFixture};
pub use problems::{builtin_problem, ProblemId};
pub use table::{error_table, ErrorTableRow, GridSpec};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] iatm_core::Error),
    #[error("unknown problem `{0}` (expected p1, p2, p3 or a file)")]
    UnknownProblem(String),
    #[error("problem has no exact solution to compare against")]
    MissingExact,
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] ::csv::Error),
}
