//! The guide's Rust listings, compiled and run as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/root-data.md")]
pub mod root_data {}

#[doc = include_str!("../../../book/src/characters.md")]
pub mod characters {}

#[doc = include_str!("../../../book/src/epstein.md")]
pub mod epstein {}

#[doc = include_str!("../../../book/src/lefschetz.md")]
pub mod lefschetz {}

#[doc = include_str!("../../../book/src/sl2z.md")]
pub mod sl2z {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
