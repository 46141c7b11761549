//! The extended Demazure product on `n × n` nonnegative-integer matrices
//! (biwords, drawn as kelp beds) and its isomorphic image: the semigroup of
//! `(n+1) × (n+1)` simple Monge matrices under the min-plus distance product.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable values; text formats, randomized verification and
//! the command-line front end live in the `kelpbed` companion crate.
//!
//! Modules:
//!
//! - [`biword`]: carrier types ([`BiwordMatrix`], [`Biword`], [`SubBed`]).
//! - [`demazure`]: up–down pairs, the weight function, the product
//!   [`star`](demazure::star) and the 0-Hecke product on permutations.
//! - [`monge`]: density/distribution maps, `Φ`, the distance product
//!   (naive and monotone-argmin), norms and the sum-matrix decomposition.
//! - [`growth`]: exact truncated growth series and graded enumeration.
//! - [`bijections`]: density classes, decorated partitions, boxed plane
//!   partitions and the *-subalgebra signature.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod bijections;
pub mod biword;
pub mod demazure;
mod error;
pub mod growth;
pub mod monge;

pub use biword::{Biword, BiwordMatrix, Kelp, SubBed};
pub use error::{Error, Result};
pub use monge::{SimpleMongeMatrix, SquareMatrix};
