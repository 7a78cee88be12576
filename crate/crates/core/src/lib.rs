//! Primed decomposition tableaux, extended queer crystals, decomposition
//! insertion and the shifted plactic congruence on primed words.

pub mod characters;
pub mod checks;
pub mod crystal_graph;
pub mod error;
pub mod insertion;
pub mod plactic;
pub mod tableaux;
pub mod words;

pub use error::{Error, Result};
