//! Exact coefficient rings, dense linear algebra and subspaces.

pub mod integer;
pub mod laurent;
pub mod matrix;
pub mod poly;
pub mod prime_field;
pub mod ratfunc;
pub mod rational;
pub mod ring;
pub mod smith;
pub mod subspace;

pub use integer::Integers;
pub use laurent::{Laurent, LaurentPolys};
pub use matrix::{
    inverse, mat_add, mat_mul, mat_scale, mat_vec, rank, rref, solve_combination, Echelon, Matrix,
    RowReducer,
};
pub use prime_field::{is_prime, PrimeField};
pub use ratfunc::{RatFunc, RationalFunctions};
pub use rational::Rationals;
pub use ring::{Field, Ring};
pub use smith::{smith_normal_form, IntegerLattice, SmithForm};
pub use subspace::{subspace_compare, Subspace, SubspaceRelation};
