//! Exact computations for generalized quaternion groups `Q_ℓ`, `ℓ = 2^j ≥ 8`.
//!
//! The crate is layered bottom-up:
//!
//! - [`arith`]: rationals, cyclotomic numbers of 2-power conductor, residues
//!   in `Q/2Z`, integer Smith normal form and subgroups of `(Q/2Z)^n`.
//! - [`group`]: the group `Q_ℓ`, its conjugacy classes, irreducible
//!   characters, virtual characters and the distinguished class functions
//!   `Θ₁`, `Θ₂`, `Δ`.
//! - [`eta`]: the finite-sum eta invariant of quaternion space forms and of
//!   the order-4 lens spaces they contain.
//! - [`ktheory`]: eta matrices and the resulting abelian groups
//!   `KSp(M^{4ν-1}(Q_ℓ, τ))` and `ko_{4k-1}(BQ_ℓ)`.
//!
//! Nothing is approximated; every value is an exact rational or an exact
//! element of `Q(ζ)`.

pub mod arith;
pub mod error;
pub mod eta;
pub mod group;
pub mod ktheory;

pub use error::{Error, Result};
