//! Doctest anchors for the mdbook guide: each item's documentation pulls
//! in one chapter, so `cargo test --doc` keeps the book's code samples
//! compiling and passing.

#[doc = include_str!("../../../book/src/introduction.md")]
pub struct Introduction;

#[doc = include_str!("../../../book/src/states.md")]
pub struct States;

#[doc = include_str!("../../../book/src/ensembles.md")]
pub struct Ensembles;

#[doc = include_str!("../../../book/src/measurements.md")]
pub struct Measurements;

#[doc = include_str!("../../../book/src/dynamics.md")]
pub struct Dynamics;

#[doc = include_str!("../../../book/src/classical.md")]
pub struct Classical;

#[doc = include_str!("../../../book/src/no-signaling.md")]
pub struct NoSignaling;

#[doc = include_str!("../../../book/src/cli.md")]
pub struct Cli;
