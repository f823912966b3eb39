//! Exact computation of the framed Homfly invariant of the Hopf link with
//! components decorated by the closed idempotents `Q_λ`, `Q_μ`, and of its
//! `sl(N)` specializations.
//!
//! The two-variable value is `⟨λ,μ⟩ = s_μ(E_λ(t)) ⟨λ⟩`, with `E_λ(t)` given
//! by a finite rational correction of the unknot series `E_∅(t)`. Under
//! `v = s^-N` it is checked against a quotient of Vandermonde minors.

pub mod combinatorics;
pub mod error;
pub mod hopf;
pub mod ring;
pub mod schur;
pub mod sln;
pub mod verify;

pub use combinatorics::{IndexSet, Partition};
pub use error::{Error, Result};
pub use hopf::{hopf_invariant, HopfResult, Route};
pub use ring::{LaurentPoly1, LaurentPoly2, RingElem, SFraction};
pub use schur::TruncatedSeries;
pub use sln::SlNResult;
