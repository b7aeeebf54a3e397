#![allow(clippy::needless_range_loop)]

pub mod chevalley;
pub mod cli;
pub mod cohomology;
pub mod cyclo;
pub mod error;
pub mod kacauto;
pub mod linalg;
pub mod numfield;
pub mod poly;
pub mod rootsys;
pub mod symspace;
pub mod verify;

pub use error::{Error, Result};
