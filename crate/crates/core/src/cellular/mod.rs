//! The Murphy basis, the regular cell datum `C^λ_{st} = (x_{st})^♯`, cell
//! ideals and cell modules, and the checks tying annihilators to cell ideals.

mod checks;
mod datum;

pub use checks::{
    ann_cell_verify, triangularity_check, triangularity_check_with, AnnCellVerdict, DiagonalEntry,
    TriangularityReport,
};
pub use datum::{
    cell_ideal, cell_module, cell_module_with, murphy_element, murphy_element_with,
    regular_cell_basis, CellBlock, CellDatum, CellIdeal, MurphyConvention,
};
