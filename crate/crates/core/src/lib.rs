//! Tree-connected factors, spanning closed trails and toughness-type
//! conditions on small multigraphs, with checkable certificates.

pub mod cli;
pub mod error;
pub mod factor;
pub mod generators;
pub mod graph;
pub mod packing;
pub mod trails;
pub mod verify;
mod util;

pub use error::{Error, Result};
pub use util::{ceil_div, floor_div};
