//! Arrangements, multiplicities, intersection lattices and the deletion,
//! restriction and localization constructions.

#[allow(clippy::module_inception)]
mod arrangement;
mod coordinates;
mod hyperplane;

pub use arrangement::{
    divide_by_t_minus_one, eval_int_poly, format_int_poly, Arrangement, Essentialization, Flat, Lattice,
    Multiplicity, Restriction,
};
pub use coordinates::AdaptedCoordinates;
pub use hyperplane::{canonicalize, canonicalize_rational, Hyperplane};
