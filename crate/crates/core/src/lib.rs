//! Exact-arithmetic analysis of linear codes over small prime fields and the
//! combinatorial designs carried by their fixed-weight supports.
//!
//! The crate answers questions of this shape, always by exact counting or
//! exact algebra, never numerically:
//!
//! * what are the weight distribution and dual distance of a code;
//! * which support designs `D_w` are t-designs, and what are the design
//!   strengths delta(C) and s(C);
//! * does a code satisfy the Assmus–Mattson strength condition, and do the
//!   classification statements for two- and three-weight ternary codes hold
//!   on it;
//! * the harmonic weight enumerators of a code, their dual transform, and
//!   the vanishing-based design test they support;
//! * binomial-sum root scans that predict strength gains in dual support
//!   designs, sphere-counting identities, and the associated Diophantine
//!   equation.
//!
//! Integer results use checked 64/128-bit arithmetic; rational results use
//! arbitrary-precision rationals. There is no floating point in this crate.

pub mod am;
pub mod code;
pub mod criteria;
pub mod design;
pub mod error;
pub mod field;
pub mod harmonic;
pub mod io;
pub mod kernel;
pub mod report;
pub mod subsets;

pub use error::{Error, Result};
