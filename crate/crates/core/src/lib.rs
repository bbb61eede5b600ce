//! Workbench for inhomogeneous quantum groups over ℚ(q): the tensor-level
//! consistency conditions on `(R, Z, T, λ)`, the functional representation,
//! and normal ordering in the generator algebra.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod examples;
pub mod expr;
pub mod field;
pub mod functionals;
pub mod poly;
pub mod qgdata;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use field::Field;
pub use scalar::RationalFunction;

/// The scalar field of the workbench, ℚ(q).
pub type Scalar = RationalFunction;

/// Tensors over ℚ(q).
pub type Operator = tensor::Tensor<Scalar>;

/// Data `(R, Z, T, λ)` over ℚ(q).
pub type Data = qgdata::InhomogeneousData<Scalar>;

/// Noncommutative polynomials over ℚ(q).
pub type Poly = algebra::NcPoly<Scalar>;
