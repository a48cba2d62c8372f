//! End-to-end checks of the kernel identities, each producing a
//! [`CheckReport`].

pub mod decay;
pub mod flambda;
pub mod octonion;
pub mod report;

pub use flambda::{
    coefficient_system_check, f_lambda, f_lambda_closed_form, reproducing_check, TestFunction, TestFunctionSpec,
};
pub use report::CheckReport;
pub mod suites;
pub use suites::{prop32_check, run_suite, Suite, SuiteConfig};
