//! Quantum CSS codes built from combinatorial hypermaps.
//!
//! A combinatorial hypermap is a pair of permutations `(alpha, sigma)` acting
//! transitively on a set of darts. Its vertices, edges and faces are the orbits
//! of `sigma`, `alpha` and `alpha^-1 sigma`. From these orbits this crate
//! builds:
//!
//! - the raw chain complex `F -> W -> V` together with the inclusion `E -> W`
//!   ([`chain::raw_complex`]),
//! - face codes, edge codes and the unquotiented full code
//!   ([`chain::face_code`], [`chain::edge_code`], [`chain::full_code`]),
//! - CSS check matrices, their parameters and brute-force distances ([`css`]),
//! - the equivalent surface-code cell complex ([`reduce::reduce_to_surface`]).
//!
//! The three dual constructions live on [`Hypermap`]: [`Hypermap::dual`],
//! [`Hypermap::triangle_dual`] and [`Hypermap::contrary`]. The [`verify`]
//! module checks every identity relating them over a random corpus.
//!
//! Permutations compose left to right: `p.compose(&q)` applies `p` first.
//! Dart labels are 0-based internally and 1-based in every text format.

pub mod chain;
pub mod css;
pub mod error;
pub mod format;
pub mod gf2;
pub mod hypermap;
pub mod perm;
pub mod reduce;
pub mod verify;

pub use chain::{CodeKind, QuotientCode, RawComplex};
pub use css::{CssCode, Distance, DistanceBudget, DistanceReport, LogicalWeight};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVector};
pub use hypermap::{Hypermap, SpecialDarts, SpecialKind};
pub use perm::{CycleDecomposition, Permutation};
pub use reduce::{CellComplex, SurfaceReport};
