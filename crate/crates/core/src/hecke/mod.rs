//! The type-A Hecke algebra on the `T_w` basis, Young subgroups and cosets.

mod algebra;
mod young;

pub use algebra::{HeckeAlgebra, HeckeElement};
pub use young::{coset_factorise, is_min_coset_rep, min_coset_reps, YoungSubgroup};
