//! Exact computation in the twisted graded Hecke algebra H of the group
//! G = (ℤ/ℓℤ)^{n−1} ⊂ SL_n, its Laurent-polynomial model, and the center
//! relation between x_1^ℓ, …, x_n^ℓ and w.

pub mod algebra;
pub mod chebyshev;
pub mod coeffring;
pub mod cyclotomic;
pub mod expr;
pub mod group;
pub mod hecke;
pub mod laurent;
mod render;
pub mod suite;

pub use algebra::{Algebra, AlgebraError};
pub use coeffring::{Deformation, ParamPoly};
pub use cyclotomic::{Cyclotomic, CyclotomicField, Rational};
pub use group::{Group, GroupElem};
pub use hecke::{HeckeElem, PbwMonomial};
pub use laurent::{LaurentElem, LaurentMonomial};
