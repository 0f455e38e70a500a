//! Exact computations for cover ideals of graphs and squarefree monomial ideals
//! generated in degree `n - 2`: powers, linear quotients and mapping-cone Betti
//! tables, Hochster-formula Betti numbers, Rees algebra relations, and the
//! closed-form Betti and regularity formulas they are checked against.

pub mod betti;
pub mod combinat;
pub mod enumerate;
pub mod error;
pub mod experiments;
pub mod formulas;
pub mod graph;
pub mod monomial;
pub mod oracle;
pub mod quotients;
pub mod rees;
pub mod series;

pub use betti::{BettiModule, BettiTable};
pub use error::{Error, Result};
pub use graph::{SimpleGraph, VertexCover};
pub use monomial::{HilbertMode, Monomial, MonomialIdeal, RingContext};
