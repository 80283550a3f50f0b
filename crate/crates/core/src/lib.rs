//! Exact computations with subalgebras of the matrix algebra `M_n(Q)` and
//! coideals of the matrix coalgebra `M^n(Q)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactlin`]: rational scalars, matrices and canonical subspaces.
//! * [`algebra`]: unital subalgebras, radicals, Wedderburn block sizes,
//!   parabolic construction and recognition.
//! * [`nilpotent`]: nil-subspace certificates and triangularization.
//! * [`coalgebra`]: comultiplication, coideal certification and the
//!   annihilator duality with subalgebras.

pub mod algebra;
pub mod coalgebra;
pub mod composition;
pub mod exactlin;
pub mod nilpotent;
pub mod sampling;

pub use algebra::{AlgebraError, MatrixAlgebra};
pub use composition::Composition;
pub use exactlin::{RationalMatrix, Scalar, Subspace};
