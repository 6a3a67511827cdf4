pub mod actions;
pub mod arith;
pub mod cli;
pub mod error;
pub mod extensions;
pub mod geometry;
pub mod group;
pub mod jacobian;
pub mod verify;
