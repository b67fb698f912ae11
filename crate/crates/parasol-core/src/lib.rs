//! Exact tensor calculus for left-invariant metrics on Lie groups carrying
//! almost paracontact almost paracomplex Riemannian structures.
//!
//! The engine computes Levi-Civita connections (Koszul formula), curvature,
//! Ricci data and Lie derivatives over exact rational/polynomial scalars,
//! verifies the structure axioms and the para-Sasaki-like condition, solves
//! exactly for Ricci-decomposition and soliton constants, and classifies
//! derived curvature symmetries. There is no floating point: every check
//! is an identity of canonical polynomial forms.

// Index loops are kept where they transcribe component formulas; iterator
// rewrites would hide the index structure the formulas are written in.
#![allow(clippy::needless_range_loop)]

pub mod check;
pub mod classify;
pub mod fixtures;
pub mod frame;
pub mod linalg;
pub mod parallel;
pub mod pi;
pub mod sample;
pub mod scalar;
pub mod soliton;
pub mod tensor;

pub use check::{IdentityCheck, Verdict};
pub use classify::{classify, ClassificationReport, OneFormSolve};
pub use frame::{Connection, CurvatureData, FrameError, JacobiReport, LieFrame};
pub use parallel::{build_h_and_check, check_parallel_tensor, HTensorReport, ParallelTensorReport};
pub use pi::{AssociatedMetric, AxiomReport, ParaSasakiReport, PiError, PiStructure};
pub use scalar::{ParamSet, Rational, Scalar, ScalarError};
pub use soliton::{
    check_constant_correspondence, check_recurrence, nabla_rho, solve_einstein_like, solve_soliton,
    CorrespondenceReport, EinsteinLikeKind, EinsteinLikeSolution, NablaRhoReport, Potential,
    RecurrenceOutcome, SolitonOutcome, SolitonSolution,
};
pub use tensor::{FrameTensor, IndexKind, TensorError};
