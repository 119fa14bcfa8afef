//! Bar-Natan chain complexes over R[G] for rational-tangle closures and small
//! torus knots, together with the Gordian-distance lower bounds λ, λ⁰ and the
//! region invariant Λ.
//!
//! The crate is organised in layers:
//!
//! - [`gring`]: exact scalars over ℤ, ℚ, 𝔽_p and monomials c·Gᵏ in the
//!   quantum-graded polynomial ring R[G] with q(G) = −2;
//! - [`complex`]: bigraded chain complexes of free R[G]-modules, Gaussian
//!   elimination, duals, base change, per-degree homology and a JSON format;
//! - [`quiver`]: the path algebra B on the two vertices ∘ and • and the
//!   ℤ[G]-module bases of its corner spaces ι_y B ι_x;
//! - [`rational`]: reduced slopes, connectivity, the zigzag recursion zz(r)
//!   and the absolute grading for odd/odd slopes;
//! - [`pairing`]: the internal-hom construction Mor(C₁, C₂) and the 0-closure
//!   turning a zigzag complex into the complex of a 2-bridge knot;
//! - [`pieces`]: pawn/knight decompositions, torsion profiles, and closed-form
//!   complexes of T(2,n) and T(3,n) torus knots;
//! - [`lambda`]: the invariants λ, λ⁰ and the region Λ, computed by a
//!   structured matching engine and by a brute-force finite-field engine;
//! - [`obstruct`]: slope functions α, β and admissibility of proper rational
//!   tangle replacements against Λ regions.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod acceptance;
pub mod complex;
pub mod gring;
pub mod lambda;
pub mod obstruct;
pub mod pairing;
pub mod pieces;
pub mod quiver;
pub mod rational;

mod error;
mod linalg;
mod snf;

pub use complex::{FreeComplex, Generator, HomologySlice};
pub use error::Error;
pub use gring::{Monomial, RingTag, Scalar};
pub use lambda::region::Region;
pub use lambda::{LambdaValue, StructuredRegion};
pub use pieces::{Decomposition, Knight, Pawn, TorsionProfile};
pub use quiver::Vertex;
pub use rational::{Connectivity, Slope, ZigzagComplex};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
