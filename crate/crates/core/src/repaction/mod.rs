//! Finite matrix groups, their action on polynomials, and representation constructors.

mod group;
mod matrix;
mod spec;

pub use group::{act, check_faithful, close_group, MatrixGroup, DEFAULT_CLOSURE_CAP};
pub use matrix::Matrix;
pub use spec::{
    build_rep, build_rep_with_cap, diagonal_generators, jordan_block, root_of_unity, Constructor, Entry,
    FieldJson, Params, RepSpec,
};
