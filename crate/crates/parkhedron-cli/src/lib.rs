//! Library half of the `parkhedron` CLI: command implementations, JSON
//! encoding, and the verification suites. The binary in `main.rs` is a thin
//! argument-parsing shell over this.

pub mod commands;
pub mod jsonio;
pub mod verify;
