//! Exact integer arithmetic for intersection bounds of curves in projective
//! 4-space.
//!
//! Given only the degrees `(d1, d2)` of two irreducible nondegenerate curves,
//! this crate computes every bound relevant to the question "how many points
//! can the curves have in common?", cross-verifies the bounds against brute
//! force, and reports which hypotheses each bound needs:
//!
//! * [`bounds`]: the classical bound `B_DG`, the conjectural sharp bound `B`,
//!   the genus bound `B_g`, the sixteen-case decomposition of `B - B_g`, and
//!   the threshold table deciding its sign.
//! * [`hvectors`]: h-vectors of points in 3-space, Macaulay growth, genus from
//!   an h-vector, admissibility rules, exhaustive enumeration, and the
//!   extremal h-vector realizing the maximum genus.
//! * [`surfaces`]: divisor classes on the cubic scroll, the cubic cone, and
//!   the del Pezzo quartic, with intersection pairings and the optimization
//!   showing where `B` is attained.
//! * [`liaison`]: residuation in complete intersections, with the even-degree
//!   margin and odd-degree obstruction certificates.
//! * [`audit`]: bound reports with provenance, the embedded reference table
//!   with its known misprint, sweeps over degree ranges, and sign grids.
//! * [`render`]: deterministic CSV, PGM, and PPM emitters for the grids.
//!
//! All arithmetic is exact over `i64`. Divisions that the theory guarantees
//! to be exact are checked at runtime and panic on remainder, so a silent
//! rounding bug cannot produce a plausible-looking wrong bound.

pub(crate) mod arith;
pub mod audit;
pub mod bounds;
pub mod error;
pub mod hvectors;
pub mod liaison;
pub mod render;
pub mod surfaces;

pub use error::{Error, Result};
