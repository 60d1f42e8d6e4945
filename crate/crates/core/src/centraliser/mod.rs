//! Annihilators, endomorphism algebras, double centralisers and their
//! behaviour under change of scalars.

mod ann;
mod dend;
mod end;
mod integral;
mod report;

pub use ann::{annihilator, annihilator_dim, check_ideal};
pub use dend::{commutant, double_end, double_end_dim, image_subspace};
pub use end::{
    commuting_maps, end_algebra, end_algebra_by, is_closed_under_product, EndAlgebra, HomRoute,
};
pub use integral::{integral_annihilator_lattice, integral_annihilator_of_gset};
pub use report::{
    base_change_report, dc_check, BaseChangeReport, CentraliserReport, Dims, FieldDims,
};
