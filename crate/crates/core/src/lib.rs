//! Finite near-rings, skew rings, weak rings, digroups, skew braces and
//! dirings, represented as operation tables over finite groups.
//!
//! The modules build on each other:
//!
//! * [`group`]: Cayley tables, subgroups, endomorphisms, semidirect pairs.
//! * [`binop`]: operation tables and the near-ring `B(G)` they form.
//! * [`axioms`]: law predicates, classifiers, λ/μ maps, ideal checks.
//! * [`omega`]: Ω-groups, congruences, ideals and their correspondence.
//! * [`diring`]: dirings and the skew ring ↔ weak ring conversion.
//! * [`search`]: backtracking enumeration of tables under constraints.
//! * [`verify`]: the full check suite over one group.
//! * [`io`]: JSON file formats and fixtures.

pub mod axioms;
pub mod binop;
pub mod diring;
pub mod error;
pub mod group;
pub mod io;
pub mod omega;
pub mod search;
pub mod verify;

pub use binop::{BinOp, NamedOp};
pub use diring::Diring;
pub use error::{Error, Result};
pub use group::{ElementSet, EndoMap, FiniteGroup, StandardGroup};
pub use omega::OmegaGroup;
