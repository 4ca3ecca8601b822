//! Compiles the guide's Rust snippets as doctests so the book cannot drift
//! from the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/modes.md")]
pub mod modes {}

#[doc = include_str!("../../../book/src/phase-matching.md")]
pub mod phase_matching {}

#[doc = include_str!("../../../book/src/squeezing.md")]
pub mod squeezing {}

#[doc = include_str!("../../../book/src/fock-space.md")]
pub mod fock_space {}

#[doc = include_str!("../../../book/src/entanglement.md")]
pub mod entanglement {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
