//! Exact scalars, dense matrices and linear solving.

mod matrix;
mod rational;
mod scalar;

pub use matrix::{
    basis_vector, mat_inverse, mat_mul, solve_linear, transpose_dual, vec_add, vec_add_assign,
    vec_axpy, vec_is_zero, vec_scale, vec_sub, zero_vector, LinearSolution, Matrix, Vector,
};
pub use rational::Rational;
pub use scalar::{scalar_arith, ArithOp, FieldSpec, Scalar};
