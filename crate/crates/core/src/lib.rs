//! Exact exterior algebra on ℝ⁷ and ℝ⁸ for the algebraic side of
//! conformal-Killing forms on G₂ and Spin₇ manifolds.
//!
//! Everything is computed over ℚ. [`multivector::Form`] holds homogeneous
//! forms, [`structures`] builds φ₀, ψ₀ and their irreducible splittings,
//! [`ck`] implements the operators T₃ and T₄, and [`verify`] replays the
//! published computations as named checks.
//!
//! ```
//! use ckforms::expr::parse;
//!
//! let f = parse("e2").unwrap().wedge(&parse("phi0").unwrap()).unwrap().hodge();
//! assert_eq!(f.factored(), "-(e147 + e156 + e345 + e367)");
//! ```

pub mod ck;
pub mod cli;
pub mod error;
pub mod expr;
pub mod linalg;
pub mod multivector;
pub mod structures;
pub mod verify;

pub use error::{Error, Result};
