//! Exact commutative algebra for the Segre embedding of a plane cubic times
//! the projective line.
//!
//! The crate is layered bottom-up:
//!
//! * [`polyring`]: coefficients over `Q` and `F_p`, monomials, term orders,
//!   polynomials and their text form.
//! * [`groebner`]: a Buchberger engine with budgets and caching, and the
//!   decision procedures built on it (membership, radical membership,
//!   elimination, colon ideals, dimension).
//! * [`segre`]: the presentation of `E x P^1` in six variables and the
//!   end-to-end check that four Euler-type polynomials cut it out up to radical.
//! * [`ellfrob`]: smoothness, the Hasse invariant, Frobenius bracket powers,
//!   Fedder's criterion and the predicted cohomological dimension.
//! * [`depthlab`]: depth of graded quotients via regular sequences of linear
//!   forms, fixture ideals, and reduction modulo primes.
//! * [`report`], [`cache`], [`curvefile`]: structured reports, the on-disk
//!   basis cache and the curve file format.

pub mod cache;
pub mod curvefile;
pub mod depthlab;
pub mod ellfrob;
pub mod error;
pub mod groebner;
pub mod polyring;
pub mod report;
pub mod segre;

pub use error::{Error, Result};
pub use groebner::{Budget, Engine, GroebnerBasis, Ideal};
pub use polyring::{Coefficient, Field, Monomial, MonomialOrder, PolyRing, Polynomial};
