//! Exact arithmetic for the projective class ring `K₀ᵖ = ZS ⊕ ZP` of a basic
//! split Hopf algebra whose structure group `G` is finite abelian.
//!
//! The ring is determined by `G` and the canonical element `c ∈ ZG` (the
//! composition factors of the projective cover of the trivial module). Over
//! `C` it splits as `C^{2r} × C[ε]^{s-r}`, where `s = |G|` and `r` counts the
//! characters on which `c` does not vanish.
//!
//! ```
//! use pcring::{instances, spectral};
//! let d = instances::uq_sl2(5).unwrap();
//! let dec = spectral::decomposition(d.ring().unwrap());
//! assert_eq!(dec.to_string(), "C^2 x C[eps]^4");
//! ```

pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod instances;
pub mod json;
pub mod linalg;
pub mod oracle;
pub mod pcr;
pub mod report;
pub mod spectral;

pub use cyclotomic::{cyclotomic_polynomial, CycloNum, CyclotomicField, IntPolynomial};
pub use error::{Error, Result};
pub use group::{AbelianGroup, GroupElement, GroupRingElem, Scalar};
pub use instances::InstanceDescriptor;
pub use pcr::{CanonicalElement, PairElem, PcRing};
pub use spectral::{Decomposition, Spectrum};
