//! Exact enumerative counts of plane curves through floor diagrams.
//!
//! The crate computes the numbers `N(d, g)` of irreducible nodal complex
//! plane curves of degree `d` and genus `g` through `3d - 1 + g` generic
//! points, and the Welschinger invariants `W(d)` of real rational curves.
//! Both are obtained as weighted sums over marked floor diagrams:
//!
//! ```
//! use floorcount::enumeration::{count_complex, count_real_rational};
//!
//! assert_eq!(count_complex(3, 0).value, 12u32.into());
//! assert_eq!(count_real_rational(4).value, 240u32.into());
//! ```
//!
//! Independent oracles live in [`formulas`] (the Kontsevich recursion and
//! closed node formulas), and [`tropical`] validates explicit tropical
//! curves and decomposes them into floors and elevators.

pub mod diagram;
pub mod enumeration;
pub mod formulas;
pub mod poset;
mod report;
pub mod tropical;

pub use diagram::{DiagramError, Edge, Floor, FloorDiagram};
pub use enumeration::{CountResult, Invariant, Method};

pub use report::{ValidationReport, Violation};
