//! Exact polynomial and graded-module kernel.

pub mod ext;
pub mod gcd;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod polynomial;
pub mod resolution;
pub mod scalar;
pub mod submodule;

pub use ext::{annihilator, ext_module, flat_in_support, support_dimension};
pub use gcd::gcd_poly;
pub use groebner::{buchberger, GroebnerBasis};
pub use linalg::Matrix;
pub use module::{FreeModule, FreeModuleElement};
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use resolution::{free_resolution, FreeResolution, GradedPresentation};
pub use scalar::Scalar;
pub use submodule::{kernel_into_quotient, kernel_of_map, minimalize, syzygy_basis, GradedSubmodule};
