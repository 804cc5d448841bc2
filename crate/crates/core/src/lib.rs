//! Exact computation of low-degree points on hyperelliptic curves over the
//! rationals, and their classification as reducible, imprimitive or primitive.
//!
//! The crate is `no_std` and only needs an allocator. Everything is exact:
//! coefficients are arbitrary-precision rationals and no floating point is
//! used on any path that feeds a verdict.
//!
//! Modules, bottom up:
//!
//! - [`arith`]: rationals, dense univariate polynomials, factorization over Q.
//! - [`numfield`]: number fields `Q[t]/(m)`, factoring over them, principal
//!   subfields and the primitivity test.
//! - [`permact`]: small permutation groups, block systems, primitivity of actions.
//! - [`hyperell`]: curves `y^2 = f(x)`, places, divisors, Riemann–Roch spaces.
//! - [`pipeline`]: finiteness classifier, class enumeration over a finite
//!   Mordell–Weil group, point classification and auxiliary constructions.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
mod error;
pub mod hyperell;
pub mod linalg;
pub mod numfield;
pub mod permact;
pub mod pipeline;

pub use error::{Error, Result};
