//! Permutation modules: Young and signed Young modules, direct sums, and
//! permutation modules of finite `Sym(m)`-sets.

mod gset;
mod rep;
mod spec;

pub use gset::{
    closure, coset_space_module, tensor_index_closed_form, tensor_orbit_profile,
    tensor_space_module, tensor_zeta_closed_form, GSetModule,
};
pub use rep::{
    build_signed_module, build_young_module, direct_sum, index_of_hook_set, young_sum,
    zeta_and_index, zeta_signed, Block, BlockKind, ModuleRep, Summand,
};
pub use spec::{parse_summands, ModuleSpec, ScalarSpec};
