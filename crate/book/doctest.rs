// mdbook cannot run the listings of a book whose code depends on a local
// crate, so every chapter is pulled in here as module docs and `cargo test`
// runs the listings as doc tests. One module per chapter keeps failures easy
// to trace back.

#[doc = include_str!("src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("src/arrowing.md")]
pub mod arrowing {}
#[doc = include_str!("src/saturation.md")]
pub mod saturation {}
#[doc = include_str!("src/cocritical.md")]
pub mod cocritical {}
#[doc = include_str!("src/constructions.md")]
pub mod constructions {}
#[doc = include_str!("src/cli.md")]
pub mod cli {}
#[doc = include_str!("../README.md")]
pub mod readme {}
