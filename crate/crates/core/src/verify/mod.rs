//! Named identity checks and the reports that collect them.

pub mod report;
pub mod suites;

pub use report::{expect_eq, Check, Report, Status};
pub use suites::{
    calculus_checks, derivation_checks, example_table_check, gwa_checks, integral_checks,
    spin_checks, verify_all, VerifyConfig,
};
