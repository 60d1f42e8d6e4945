//! Partitions, compositions, dominance, closures and standard tableaux.

mod partition;
mod tableau;

pub use partition::{
    coarsening_closure, dominance_leq, dominance_upward_closure, is_cosaturated, partitions_of,
    Composition, Partition, PartitionSet,
};
pub use tableau::{
    capital_n, d_permutation, spec_dimension, standard_tableaux, tableau_dominance, StandardTableau,
};
