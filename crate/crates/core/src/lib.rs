//! Whitehead's quadratic functor Γ and its companions on finitely generated
//! abelian groups, together with machine checks of the exact sequence
//! `0 → H₁(Σ₂, Tor(₂∞A, ₂∞A)) → Γ(A) → A⊗A → H₂(A) → 0`.

pub mod abgroup;
pub mod error;
pub mod functors;
pub mod intlin;
pub mod sym2homology;
pub mod theorems;

pub use abgroup::{FgAbGroup, GroupElement, GroupHom, Presentation};
pub use error::{Error, Result};
pub use intlin::{IntMatrix, SmithDecomposition};
