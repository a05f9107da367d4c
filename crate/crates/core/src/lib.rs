//! Exact classification of the intertwining differential operators between
//! elementary representations of so(p,q) induced from the maximal parabolic
//! with `M = so(p-1,q-1)`, and of the first-order ones among them
//! (conservation laws).
//!
//! Every arrow produced in closed form is cross-checked against a brute-force
//! scan of the BGG reducibility condition over the non-compact roots.

pub mod cli;
pub mod conservation;
pub mod error;
pub mod multiplets;
pub mod render;
pub mod signatures;
pub mod weights;

pub use error::{Error, Result, ValidationError};
pub use weights::HalfInt;
