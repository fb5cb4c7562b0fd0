pub mod algebra;
pub mod cochain;
pub mod error;
pub mod forms;
pub mod linear;
pub mod operators;
pub mod pairs;
pub mod report;
pub mod search;

pub use error::{Error, Result};
