//! Exact computations around Stern's diatomic sequence: q-Stern
//! polynomials, the (q-)Calkin-Wilf sequence, hyperbinary expansions and
//! their refinement lattices, fence posets, q-deformed rationals and the
//! `L`/`R` matrix products, together with sweeps that cross-check the
//! identities relating them.

pub mod error;
pub mod fence;
pub mod hyperbinary;
pub mod matrices;
pub mod poly;
pub mod qrational;
pub mod stern;
pub mod sweep;
pub mod verify;

pub use error::Error;
