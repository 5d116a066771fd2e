//! Small graphs with prescribed girth and chromatic number: constructions,
//! semiregular (LCF) searches, exact verification, and lower-bound tables.

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod enumerate;
pub mod fixtures;
pub mod graph;
pub mod lcf;

pub use coloring::{ChromaticNumber, ColorBudget, Coloring, Decision, PaletteConstraint};
pub use graph::{GirthValue, Graph};
