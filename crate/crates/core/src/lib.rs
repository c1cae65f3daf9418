//! Gog, Magog and GOGAm triangles.
//!
//! Gelfand-Tsetlin triangles and the families carved out of them, the
//! Schützenberger involution, bijections between Gog and GOGAm trapezoids and
//! pentagons, inversion statistics, and an exhaustive verification harness.

pub mod asm;
pub mod bijections;
pub mod classes;
pub mod enumeration;
pub mod error;
pub mod harness;
pub mod schutzenberger;
pub mod shapes;
pub mod stats;
pub mod triangle;

#[cfg(test)]
mod properties;

pub use classes::Family;
pub use error::{Error, Result};
pub use shapes::{LeftTrapezoid, PartialArray, Pentagon, Region, RightTrapezoid};
pub use triangle::{Cell, Entry, GTTriangle};
